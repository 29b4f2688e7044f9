#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "mananet/error.hpp"
#include "mananet/mana_external.hpp"
#include "mananet/mana_internal.hpp"

namespace mananet {

/// A built net whose mana layer does not have the expected shape, e.g. a
/// transition drawing on another transition's mana.
class ShapeViolationError : public Error {
 public:
  ShapeViolationError(Symbol symbol, const std::string& detail)
      : Error("shape violation at '" + symbol.str() + "': " + detail), symbol_(symbol) {}
  Symbol symbol() const { return symbol_; }

 private:
  Symbol symbol_;
};

/// The single net whose executions are the pairs (marking, pool) moved
/// along the external semantics. Same as generalized_internal_construction.
ManaNet internalize(const Net& net, const ManaPolicy& policy);

/// (X, pool) becomes X plus pool(u) tokens on the mana place of each u.
Marking state_to_object(const ManaNet& mn, const ManaState& s);
/// Inverse of state_to_object. Throws UnknownSymbolError for places of
/// neither layer.
ManaState object_to_state(const ManaNet& mn, const Marking& m);

/// Reads the base net and the policy back off a built net, given which
/// place carries each transition's mana. Ignores `mn.base` and `mn.policy`.
/// Throws ShapeViolationError when the built net is not of the constructed
/// shape.
std::pair<Net, ManaPolicy> externalize(const ManaNet& mn);
std::pair<Net, ManaPolicy> externalize(const Net& built,
                                       const std::map<Symbol, Symbol>& mana_place_of);

/// Mana labeling by naming convention: transition u's mana lives on place
/// `mana:<u>`. Throws ShapeViolationError if some transition lacks one.
std::map<Symbol, Symbol> mana_labeling_by_name(const Net& built, std::size_t layer = 1);

struct EquivalenceReport {
  bool isomorphic = false;
  std::size_t ext_nodes = 0;
  std::size_t int_nodes = 0;
  std::size_t ext_edges = 0;
  std::size_t int_edges = 0;
  bool truncated = false;
  std::optional<std::string> first_discrepancy;
};

/// Explores the external semantics from `init` and the internalized net
/// from state_to_object(init) under the same bounds, then checks that
/// state_to_object is an isomorphism of the two labelled graphs.
EquivalenceReport check_equivalence(const Net& net, const ManaPolicy& policy,
                                    const ManaState& init, std::size_t depth, Count token_bound);

}  // namespace mananet
