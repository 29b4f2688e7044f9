#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mananet/symbol.hpp"

namespace mananet {

using Count = std::uint64_t;

/// Finitely supported multiset over symbols.
///
/// Entries are kept sorted by symbol and only nonzero counts are stored, so
/// structural equality is extensional equality. Values are immutable once
/// built; the arithmetic lives in free functions below.
class Multiset {
 public:
  using Entry = std::pair<Symbol, Count>;
  using const_iterator = std::vector<Entry>::const_iterator;

  Multiset() = default;
  Multiset(std::initializer_list<std::pair<std::string_view, Count>> entries);

  /// Builds from arbitrary (possibly repeated, possibly zero) entries.
  static Multiset from_entries(std::vector<Entry> entries);
  static Multiset singleton(Symbol s, Count n = 1);

  Count count(Symbol s) const;
  Count operator[](Symbol s) const { return count(s); }
  bool contains(Symbol s) const { return count(s) != 0; }

  bool empty() const { return entries_.empty(); }
  /// Number of distinct symbols.
  std::size_t support_size() const { return entries_.size(); }
  /// Sum of all counts.
  Count total() const;

  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Restriction to the symbols accepted by `keep`.
  template <class Pred>
  Multiset filter(Pred keep) const {
    Multiset out;
    for (const auto& e : entries_)
      if (keep(e.first)) out.entries_.push_back(e);
    return out;
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset& a, const Multiset& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  friend Multiset sum(const Multiset&, const Multiset&);
  friend std::optional<Multiset> difference(const Multiset&, const Multiset&);
  friend Multiset scale(Count, const Multiset&);

  std::vector<Entry> entries_;
};

/// Pointwise sum. Throws std::overflow_error if a count would wrap.
Multiset sum(const Multiset& a, const Multiset& b);
/// Pointwise difference a - b; nullopt when some count of b exceeds a's.
std::optional<Multiset> difference(const Multiset& a, const Multiset& b);
/// n-fold sum of a. Throws std::overflow_error if a count would wrap.
Multiset scale(Count n, const Multiset& a);
/// a(x) <= b(x) for every x.
bool leq(const Multiset& a, const Multiset& b);

inline Multiset operator+(const Multiset& a, const Multiset& b) { return sum(a, b); }

/// Checked natural-number addition shared by the multiset arithmetic.
Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

/// Compact rendering, e.g. `{ATP:2, H2O:1}`. Used in diagnostics only.
std::string to_string(const Multiset& m);
std::ostream& operator<<(std::ostream& os, const Multiset& m);

}  // namespace mananet
