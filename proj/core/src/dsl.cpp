#include "mananet/dsl.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace mananet {
namespace {

struct Token {
  enum class Kind { Name, Nat, Colon, Plus, Arrow, Comma, LBrace, RBrace, Equals, End };
  Kind kind;
  std::string_view text;
  std::size_t column;
};

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : line_no_(line_no) { tokenize(line); }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, line_no_, at.column);
  }

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at(Token::Kind k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
  bool at_keyword(std::string_view word) const {
    return at(Token::Kind::Name) && peek().text == word && at(Token::Kind::Colon, 1);
  }
  const Token& expect(Token::Kind k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what, peek());
    return next();
  }
  Count nat(const Token& t) const {
    Count n = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
    if (ec != std::errc()) fail("number out of range", t);
    return n;
  }
  std::size_t line_no() const { return line_no_; }

  // side := [nat] name ("+" [nat] name)*   (possibly empty)
  Multiset side(std::vector<std::pair<Symbol, std::size_t>>& places) {
    std::vector<Multiset::Entry> entries;
    if (!at(Token::Kind::Nat) && !(at(Token::Kind::Name) && !at_keyword("mana"))) return {};
    while (true) {
      Count k = 1;
      if (at(Token::Kind::Nat)) {
        const Token& n = next();
        k = nat(n);
        if (k == 0) fail("coefficient must be positive", n);
      }
      const Token& name = expect(Token::Kind::Name, "a compound name");
      Symbol s(name.text);
      places.emplace_back(s, name.column);
      entries.emplace_back(s, k);
      if (!at(Token::Kind::Plus)) break;
      next();
    }
    return Multiset::from_entries(std::move(entries));
  }

 private:
  void tokenize(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size()) {
      char c = line[i];
      std::size_t col = i + 1;
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (name_start(c)) {
        std::size_t j = i + 1;
        while (j < line.size() && name_char(line[j])) ++j;
        tokens_.push_back({Token::Kind::Name, line.substr(i, j - i), col});
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i + 1;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        tokens_.push_back({Token::Kind::Nat, line.substr(i, j - i), col});
        i = j;
      } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
        tokens_.push_back({Token::Kind::Arrow, line.substr(i, 2), col});
        i += 2;
      } else {
        Token::Kind k;
        switch (c) {
          case ':': k = Token::Kind::Colon; break;
          case '+': k = Token::Kind::Plus; break;
          case ',': k = Token::Kind::Comma; break;
          case '{': k = Token::Kind::LBrace; break;
          case '}': k = Token::Kind::RBrace; break;
          case '=': k = Token::Kind::Equals; break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", line_no_, col);
        }
        tokens_.push_back({k, line.substr(i, 1), col});
        ++i;
      }
    }
    tokens_.push_back({Token::Kind::End, {}, line.size() + 1});
  }

  std::size_t line_no_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

struct Located {
  Symbol symbol;
  std::size_t line;
  std::size_t column;
};

}  // namespace

NetDocument parse_reaction_dsl(std::string_view text) {
  NetDocument doc;
  std::vector<std::pair<Symbol, std::size_t>> place_uses;
  std::vector<Located> declared_transitions;
  std::vector<Located> transition_refs;  // produce targets and pool keys
  std::map<Symbol, ManaRule> rules;
  bool any_mana = false;
  Multiset marking, pool;
  bool has_marking = false, has_pool = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    start = end + 1;
    ++line_no;

    LineParser p(line, line_no);
    if (p.at(Token::Kind::End)) continue;

    place_uses.clear();
    if (p.at_keyword("marking")) {
      p.next();
      p.next();
      marking = sum(marking, p.side(place_uses));
      has_marking = true;
    } else if (p.at_keyword("pool")) {
      p.next();
      p.next();
      has_pool = true;
      do {
        if (p.at(Token::Kind::Comma)) p.next();
        const Token& name = p.expect(Token::Kind::Name, "a transition name");
        p.expect(Token::Kind::Equals, "'='");
        Count n = p.nat(p.expect(Token::Kind::Nat, "a count"));
        transition_refs.push_back({Symbol(name.text), line_no, name.column});
        pool = sum(pool, Multiset::singleton(Symbol(name.text), n));
      } while (!p.at(Token::Kind::End));
    } else {
      const Token& name = p.expect(Token::Kind::Name, "a reaction name");
      Symbol u(name.text);
      for (const auto& d : declared_transitions)
        if (d.symbol == u) p.fail("duplicate reaction '" + u.str() + "'", name);
      declared_transitions.push_back({u, line_no, name.column});
      p.expect(Token::Kind::Colon, "':' after the reaction name");
      Multiset pre = p.side(place_uses);
      p.expect(Token::Kind::Arrow, "'->'");
      Multiset post = p.side(place_uses);
      if (p.at_keyword("mana")) {
        p.next();
        p.next();
        any_mana = true;
        const Token& kw = p.expect(Token::Kind::Name, "'consume'");
        if (kw.text != "consume") p.fail("expected 'consume'", kw);
        ManaRule rule{p.nat(p.expect(Token::Kind::Nat, "a count")), {}};
        if (p.at(Token::Kind::Comma)) {
          p.next();
          const Token& kw2 = p.expect(Token::Kind::Name, "'produce'");
          if (kw2.text != "produce") p.fail("expected 'produce'", kw2);
          p.expect(Token::Kind::LBrace, "'{'");
          while (!p.at(Token::Kind::RBrace)) {
            const Token& target = p.expect(Token::Kind::Name, "a transition name");
            p.expect(Token::Kind::Colon, "':'");
            Count n = p.nat(p.expect(Token::Kind::Nat, "a count"));
            transition_refs.push_back({Symbol(target.text), line_no, target.column});
            rule.produce = sum(rule.produce, Multiset::singleton(Symbol(target.text), n));
            if (p.at(Token::Kind::Comma)) p.next();
          }
          p.next();
        }
        rules.emplace(u, std::move(rule));
      }
      doc.net.add_transition(u, std::move(pre), std::move(post));
    }
    if (!p.at(Token::Kind::End)) p.fail("unexpected trailing input", p.peek());
    for (const auto& [s, col] : place_uses) doc.net.add_place(s);
  }

  for (const auto& d : declared_transitions)
    if (doc.net.has_place(d.symbol))
      throw ParseError("'" + d.symbol.str() + "' is used both as a reaction and a compound", d.line,
                       d.column);
  for (const auto& r : transition_refs)
    if (!doc.net.has_transition(r.symbol))
      throw ParseError("unknown reaction '" + r.symbol.str() + "'", r.line, r.column);

  if (any_mana) {
    ManaPolicy policy = plain_policy(doc.net);
    for (auto& [u, rule] : rules) policy[u] = std::move(rule);
    doc.policy = std::move(policy);
  }
  if (has_marking) doc.marking = std::move(marking);
  if (has_pool) doc.pool = std::move(pool);
  return doc;
}

NetDocument parse_document(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json(text);
    break;
  }
  return parse_reaction_dsl(text);
}

}  // namespace mananet
