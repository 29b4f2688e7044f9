#include "mananet/multiset.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mananet {

Count checked_add(Count a, Count b) {
  if (a > std::numeric_limits<Count>::max() - b)
    throw std::overflow_error("multiset count overflow in sum");
  return a + b;
}

Count checked_mul(Count a, Count b) {
  if (a != 0 && b > std::numeric_limits<Count>::max() / a)
    throw std::overflow_error("multiset count overflow in scale");
  return a * b;
}

Multiset::Multiset(std::initializer_list<std::pair<std::string_view, Count>> entries) {
  std::vector<Entry> raw;
  raw.reserve(entries.size());
  for (const auto& [name, n] : entries) raw.emplace_back(Symbol(name), n);
  *this = from_entries(std::move(raw));
}

Multiset Multiset::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Multiset out;
  for (auto& [s, n] : entries) {
    if (n == 0) continue;
    if (!out.entries_.empty() && out.entries_.back().first == s)
      out.entries_.back().second = checked_add(out.entries_.back().second, n);
    else
      out.entries_.emplace_back(s, n);
  }
  return out;
}

Multiset Multiset::singleton(Symbol s, Count n) {
  Multiset out;
  if (n != 0) out.entries_.emplace_back(s, n);
  return out;
}

Count Multiset::count(Symbol s) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                             [](const Entry& e, Symbol key) { return e.first < key; });
  return (it != entries_.end() && it->first == s) ? it->second : 0;
}

Count Multiset::total() const {
  Count t = 0;
  for (const auto& e : entries_) t = checked_add(t, e.second);
  return t;
}

Multiset sum(const Multiset& a, const Multiset& b) {
  Multiset out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      out.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      out.entries_.emplace_back(i->first, checked_add(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return out;
}

std::optional<Multiset> difference(const Multiset& a, const Multiset& b) {
  Multiset out;
  auto i = a.entries_.begin();
  for (const auto& [s, n] : b.entries_) {
    while (i != a.entries_.end() && i->first < s) out.entries_.push_back(*i++);
    if (i == a.entries_.end() || i->first != s || i->second < n) return std::nullopt;
    if (i->second > n) out.entries_.emplace_back(s, i->second - n);
    ++i;
  }
  out.entries_.insert(out.entries_.end(), i, a.entries_.end());
  return out;
}

Multiset scale(Count n, const Multiset& a) {
  Multiset out;
  if (n == 0) return out;
  out.entries_.reserve(a.entries_.size());
  for (const auto& [s, c] : a.entries_) out.entries_.emplace_back(s, checked_mul(n, c));
  return out;
}

bool leq(const Multiset& a, const Multiset& b) {
  auto j = b.begin();
  for (const auto& [s, n] : a) {
    while (j != b.end() && j->first < s) ++j;
    if (j == b.end() || j->first != s || j->second < n) return false;
  }
  return true;
}

std::string to_string(const Multiset& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [s, n] : m) {
    if (!first) os << ", ";
    first = false;
    os << s.str() << ':' << n;
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Multiset& m) { return os << to_string(m); }

}  // namespace mananet
