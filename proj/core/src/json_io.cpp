#include "mananet/json_io.hpp"

#include <set>

namespace mananet {

using nlohmann::json;

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column,
                       std::string path)
    : Error([&] {
        std::string where;
        if (line) where = std::to_string(line) + ":" + std::to_string(column) + ": ";
        if (!path.empty()) where += "at " + path + ": ";
        return where + message;
      }()),
      line_(line),
      column_(column),
      path_(std::move(path)) {}

namespace {

std::string pointer_token(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + pointer_token(key);
}

void expect(bool ok, const std::string& path, const std::string& message) {
  if (!ok) throw ParseError(message, 0, 0, path.empty() ? "/" : path);
}

void reject_unknown_keys(const json& j, const std::string& path,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    expect(known, child(path, key), "unknown key '" + key + "'");
  }
}

Count natural_from_json(const json& j, const std::string& path, bool positive) {
  expect(j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0), path,
         "expected a non-negative integer");
  Count n = j.get<Count>();
  expect(!positive || n > 0, path, "multiplicities must be positive");
  return n;
}

Symbol name_from_json(const json& j, const std::string& path) {
  expect(j.is_string(), path, "expected a string");
  std::string s = j.get<std::string>();
  expect(!s.empty(), path, "names must be non-empty");
  return Symbol(s);
}

void locate(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

}  // namespace

Multiset multiset_from_json(const json& j, const std::string& path) {
  expect(j.is_object(), path, "expected an object of name:count pairs");
  std::vector<Multiset::Entry> entries;
  for (const auto& [key, value] : j.items()) {
    expect(!key.empty(), path, "names must be non-empty");
    entries.emplace_back(Symbol(key), natural_from_json(value, child(path, key), true));
  }
  return Multiset::from_entries(std::move(entries));
}

json to_json(const Multiset& m) {
  json j = json::object();
  for (const auto& [s, n] : m) j[s.str()] = n;
  return j;
}

json to_json(const Net& net) {
  json places = json::array();
  for (Symbol p : net.places()) places.push_back(p.str());
  json transitions = json::object();
  for (const auto& [u, arcs] : net.transitions())
    transitions[u.str()] = {{"pre", to_json(arcs.pre)}, {"post", to_json(arcs.post)}};
  return {{"places", places}, {"transitions", transitions}};
}

json to_json(const ManaPolicy& policy) {
  json j = json::object();
  for (const auto& [u, rule] : policy)
    j[u.str()] = {{"consume", rule.consume}, {"produce", to_json(rule.produce)}};
  return j;
}

json to_json(const Trace& trace) {
  json steps = json::array();
  for (Symbol s : trace.steps) steps.push_back(s.str());
  return {{"initial", to_json(trace.initial)}, {"steps", steps}};
}

json to_json(const ManaState& s) { return {{"marking", to_json(s.marking)}, {"pool", to_json(s.pool)}}; }

json to_json(const AffineSpan& s) {
  return {{"consume", to_json(s.consume)}, {"produce", to_json(s.produce)}};
}

json to_json(const NetDocument& doc) {
  json j = to_json(doc.net);
  if (doc.policy) j["mana"] = to_json(*doc.policy);
  if (doc.marking) j["marking"] = to_json(*doc.marking);
  if (doc.pool) j["pool"] = to_json(*doc.pool);
  return j;
}

json to_json(const std::vector<Violation>& violations) {
  json j = json::array();
  for (const auto& v : violations)
    j.push_back({{"kind", to_string(v.kind)}, {"symbol", v.symbol.str()}, {"detail", v.detail}});
  return j;
}

json to_json(const LawReport& report) {
  json laws = json::array();
  for (const auto& r : report.results) {
    json entry = {{"law", r.law}, {"status", to_string(r.status)}};
    if (r.counterexample) entry["counterexample"] = *r.counterexample;
    laws.push_back(entry);
  }
  json j = {{"laws", laws}, {"passed", report.passed()}};
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

json to_json(const EquivalenceReport& r) {
  return {{"isomorphic", r.isomorphic},
          {"ext_nodes", r.ext_nodes},
          {"int_nodes", r.int_nodes},
          {"ext_edges", r.ext_edges},
          {"int_edges", r.int_edges},
          {"truncated", r.truncated},
          {"first_discrepancy", r.first_discrepancy ? json(*r.first_discrepancy) : json(nullptr)}};
}

namespace {

template <class State>
json graph_to_json(const ReachGraph<State>& g) {
  json nodes = json::array();
  for (const auto& n : g.nodes) nodes.push_back(to_json(n));
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back(json::array({e.from, e.transition.str(), e.to}));
  return {{"nodes", nodes},
          {"edges", edges},
          {"root", g.root},
          {"depth_bound", g.depth_bound},
          {"token_bound", g.token_bound},
          {"truncated", g.truncated()},
          {"depth_truncated", g.depth_truncated},
          {"token_truncated", g.token_truncated}};
}

}  // namespace

json to_json(const ReachGraph<Marking>& g) { return graph_to_json(g); }
json to_json(const ReachGraph<ManaState>& g) { return graph_to_json(g); }

Trace trace_from_json(const json& j) {
  expect(j.is_object(), "", "expected a trace object");
  reject_unknown_keys(j, "", {"initial", "steps"});
  expect(j.contains("initial") && j.contains("steps"), "", "trace needs 'initial' and 'steps'");
  Trace t{multiset_from_json(j["initial"], "/initial"), {}};
  expect(j["steps"].is_array(), "/steps", "expected an array");
  for (std::size_t i = 0; i < j["steps"].size(); ++i)
    t.steps.push_back(name_from_json(j["steps"][i], "/steps/" + std::to_string(i)));
  return t;
}

ManaState mana_state_from_json(const json& j) {
  expect(j.is_object(), "", "expected a state object");
  reject_unknown_keys(j, "", {"marking", "pool"});
  ManaState s;
  if (j.contains("marking")) s.marking = multiset_from_json(j["marking"], "/marking");
  if (j.contains("pool")) s.pool = multiset_from_json(j["pool"], "/pool");
  return s;
}

std::vector<Violation> validate_document(const NetDocument& doc) {
  std::vector<Violation> out = validate_net(doc.net);
  if (doc.policy) {
    auto v = validate_policy(doc.net, *doc.policy);
    out.insert(out.end(), v.begin(), v.end());
  }
  if (doc.marking)
    for (const auto& [p, n] : *doc.marking)
      if (!doc.net.has_place(p))
        out.push_back({Violation::Kind::UnknownPlace, p, "in initial marking"});
  if (doc.pool)
    for (const auto& [u, n] : *doc.pool)
      if (!doc.net.has_transition(u))
        out.push_back({Violation::Kind::UnknownTransition, u, "in mana pool"});
  return out;
}

NetDocument parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 0, column = 0;
    locate(text, e.byte == 0 ? 0 : e.byte - 1, line, column);
    throw ParseError(e.what(), line, column);
  }
  expect(j.is_object(), "", "expected a net object");
  reject_unknown_keys(j, "", {"places", "transitions", "mana", "marking", "pool"});
  expect(j.contains("places"), "", "missing 'places'");
  expect(j.contains("transitions"), "", "missing 'transitions'");

  NetDocument doc;
  const json& places = j["places"];
  expect(places.is_array(), "/places", "expected an array of names");
  std::set<Symbol> seen;
  for (std::size_t i = 0; i < places.size(); ++i) {
    std::string path = "/places/" + std::to_string(i);
    Symbol p = name_from_json(places[i], path);
    expect(seen.insert(p).second, path, "duplicate place '" + p.str() + "'");
    doc.net.add_place(p);
  }
  const json& transitions = j["transitions"];
  expect(transitions.is_object(), "/transitions", "expected an object");
  for (const auto& [name, body] : transitions.items()) {
    std::string path = child("/transitions", name);
    expect(!name.empty(), path, "names must be non-empty");
    expect(body.is_object(), path, "expected an object with 'pre' and 'post'");
    reject_unknown_keys(body, path, {"pre", "post"});
    expect(body.contains("pre") && body.contains("post"), path, "needs both 'pre' and 'post'");
    doc.net.add_transition(Symbol(name), multiset_from_json(body["pre"], child(path, "pre")),
                           multiset_from_json(body["post"], child(path, "post")));
  }

  if (j.contains("mana")) {
    const json& mana = j["mana"];
    expect(mana.is_object(), "/mana", "expected an object");
    ManaPolicy policy;
    for (const auto& [name, rule] : mana.items()) {
      std::string path = child("/mana", name);
      expect(doc.net.has_transition(Symbol(name)), path, "mana rule for unknown transition '" + name + "'");
      expect(rule.is_object(), path, "expected an object");
      reject_unknown_keys(rule, path, {"consume", "produce"});
      expect(rule.contains("consume") && rule.contains("produce"), path,
             "needs both 'consume' and 'produce'");
      ManaRule r{natural_from_json(rule["consume"], child(path, "consume"), false),
                 multiset_from_json(rule["produce"], child(path, "produce"))};
      for (const auto& [v, n] : r.produce)
        expect(doc.net.has_transition(v), child(child(path, "produce"), v.str()),
               "produces mana for unknown transition '" + v.str() + "'");
      policy.emplace(Symbol(name), std::move(r));
    }
    for (const auto& [u, arcs] : doc.net.transitions())
      expect(policy.contains(u), "/mana", "no mana rule for transition '" + u.str() + "'");
    doc.policy = std::move(policy);
  }
  if (j.contains("marking")) {
    Marking m = multiset_from_json(j["marking"], "/marking");
    for (const auto& [p, n] : m)
      expect(doc.net.has_place(p), child("/marking", p.str()), "unknown place '" + p.str() + "'");
    doc.marking = std::move(m);
  }
  if (j.contains("pool")) {
    Multiset pool = multiset_from_json(j["pool"], "/pool");
    for (const auto& [u, n] : pool)
      expect(doc.net.has_transition(u), child("/pool", u.str()),
             "unknown transition '" + u.str() + "'");
    doc.pool = std::move(pool);
  }
  return doc;
}

std::string emit_json(const NetDocument& doc) { return to_json(doc).dump(); }

std::string canonical_json(const Multiset& m) { return to_json(m).dump(); }
std::string canonical_json(const ManaState& s) { return to_json(s).dump(); }

}  // namespace mananet
