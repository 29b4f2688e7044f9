#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mananet/multiset.hpp"
#include "mananet/symbol.hpp"

namespace mananet {

struct Arcs {
  Multiset pre;
  Multiset post;
  friend bool operator==(const Arcs&, const Arcs&) = default;
};

/// A Petri net: places plus, for every transition, its input and output
/// multisets over places.
///
/// Net is plain data. Nothing stops a caller from building an inconsistent
/// net; `validate_net` reports what is wrong with it.
class Net {
 public:
  Net& add_place(Symbol p);
  /// Adds or replaces transition `t`.
  Net& add_transition(Symbol t, Multiset pre, Multiset post);

  const std::set<Symbol>& places() const { return places_; }
  const std::map<Symbol, Arcs>& transitions() const { return transitions_; }

  bool has_place(Symbol p) const { return places_.contains(p); }
  bool has_transition(Symbol t) const { return transitions_.contains(t); }

  /// Throws UnknownSymbolError for undeclared transitions.
  const Arcs& arcs(Symbol t) const;
  const Multiset& pre(Symbol t) const { return arcs(t).pre; }
  const Multiset& post(Symbol t) const { return arcs(t).post; }

  friend bool operator==(const Net&, const Net&) = default;

 private:
  std::set<Symbol> places_;
  std::map<Symbol, Arcs> transitions_;
};

/// One broken invariant, with the symbol it concerns.
struct Violation {
  enum class Kind {
    UnknownPlace,        // arc or marking mentions an undeclared place
    UnknownTransition,   // map or policy mentions an undeclared transition
    NameClash,           // symbol is both a place and a transition
    Unmapped,            // morphism/functor leaves a generator without image
    SquareFails,         // morphism square does not commute
    BadImage,            // functor image trace is invalid or has wrong endpoints
    PolicyDomain,        // mana policy not total on transitions
  };
  Kind kind;
  Symbol symbol;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(Violation::Kind kind);
std::string to_string(const Violation& v);

/// Empty iff every arc mentions a declared place and no name is both a
/// place and a transition.
std::vector<Violation> validate_net(const Net& net);

/// Images of places under a place-to-place map.
using PlaceMap = std::map<Symbol, Symbol>;
/// Images of places under a monoidal functor: each place goes to a multiset.
using ObjectMap = std::map<Symbol, Multiset>;

/// Extends a map on places to multisets. Throws UnknownSymbolError when `m`
/// mentions a place outside the map's domain.
Multiset lift_multiset_map(const PlaceMap& g, const Multiset& m);
Multiset lift_multiset_map(const ObjectMap& g, const Multiset& m);

/// Morphism of nets: a transition map and a place map making both the
/// input and the output squares commute.
struct NetMorphism {
  Net source;
  Net target;
  std::map<Symbol, Symbol> transition_map;
  PlaceMap place_map;
};

NetMorphism identity_morphism(const Net& net);
/// `second` after `first`; componentwise composition of the maps.
NetMorphism compose(const NetMorphism& first, const NetMorphism& second);

/// Empty iff both maps are total into the target and, for every source
/// transition u, g(pre(u)) = pre'(f(u)) and g(post(u)) = post'(f(u)).
/// Assumes source and target already pass validate_net.
std::vector<Violation> validate_morphism(const NetMorphism& m);

}  // namespace mananet
