#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace mananet {

/// Interned name of a place or transition.
///
/// Two symbols with the same spelling share one pooled string, so equality
/// is a pointer comparison. Ordering is lexicographic on the spelling, which
/// keeps every container keyed by symbols in serialization order.
class Symbol {
 public:
  Symbol();
  explicit Symbol(std::string_view name);
  Symbol(const char* name) : Symbol(std::string_view(name)) {}
  Symbol(const std::string& name) : Symbol(std::string_view(name)) {}

  const std::string& str() const { return *name_; }
  std::string_view view() const { return *name_; }

  friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return a.name_->compare(*b.name_) <=> 0;
  }

  std::size_t hash() const { return std::hash<const void*>{}(name_); }

 private:
  const std::string* name_;
};

inline std::ostream& operator<<(std::ostream& os, Symbol s) { return os << s.str(); }

}  // namespace mananet

template <>
struct std::hash<mananet::Symbol> {
  std::size_t operator()(mananet::Symbol s) const noexcept { return s.hash(); }
};
