#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mananet/functor.hpp"
#include "mananet/law_report.hpp"
#include "mananet/net.hpp"

namespace mananet {

/// How one transition uses the mana pools: it takes `consume` units from
/// its own pool and adds `produce` to any pools.
struct ManaRule {
  Count consume = 1;
  Multiset produce;
  friend bool operator==(const ManaRule&, const ManaRule&) = default;
};

/// Rule per transition; must be total on the net's transitions.
using ManaPolicy = std::map<Symbol, ManaRule>;

/// One unit of own mana per firing, nothing produced.
ManaPolicy plain_policy(const Net& net);
bool is_plain(const ManaPolicy& policy);

/// Empty iff the policy covers exactly the net's transitions and every
/// produced pool belongs to a transition of the net.
std::vector<Violation> validate_policy(const Net& net, const ManaPolicy& policy);

/// Name of the mana place of `transition` in construction layer `layer`:
/// `mana:<t>` for the first layer, `mana<k>:<t>` when a mana-built net is
/// itself rebuilt (layer k >= 2).
Symbol mana_place_name(Symbol transition, std::size_t layer = 1);
std::string mana_prefix(std::size_t layer = 1);

/// A net together with its mana-augmented version.
struct ManaNet {
  Net base;
  Net built;
  std::map<Symbol, Symbol> mana_place_of;
  ManaPolicy policy;
  std::size_t layer = 1;

  friend bool operator==(const ManaNet&, const ManaNet&) = default;
};

/// Adds one mana place per transition, wired according to `policy`: u
/// takes consume(u) tokens from its own mana place and puts produce(u) on
/// the mana places it names. Throws ConstructionError for an invalid net,
/// an invalid policy, or a mana place name that is already taken.
ManaNet generalized_internal_construction(const Net& net, const ManaPolicy& policy,
                                          std::size_t layer = 1);
/// The construction under the plain policy.
ManaNet internal_construction(const Net& net, std::size_t layer = 1);

/// Forgets the mana layer: base places to themselves, mana places to the
/// empty marking, transitions to their one-step executions in the base.
PresentedFunctor counit(const ManaNet& mn);

/// Duplicates the mana layer. The target is the plain construction applied
/// to `mn.built` one layer up; the mana place of u goes to the sum of its
/// two copies. Throws ConstructionError for non-plain policies.
PresentedFunctor comultiplication(const ManaNet& mn);

/// Action of the plain construction on a functor between base nets. The
/// source's mana place of u goes to the occurrence multiset of F(u),
/// rendered on the target's mana places.
PresentedFunctor lift_functor(const PresentedFunctor& f, std::size_t source_layer = 1,
                              std::size_t target_layer = 1);

/// Counit and coassociativity laws for the plain construction on `net`.
LawReport check_comonad_unit_laws(const Net& net);
/// Naturality of counit and comultiplication along one net morphism.
/// `suffix` is appended to the law names to tell samples apart.
LawReport check_comonad_naturality(const NetMorphism& morphism, const std::string& suffix = "");
/// Both of the above; naturality is checked on every sample morphism.
LawReport check_comonad_laws(const Net& net, std::span<const NetMorphism> morphisms = {});

}  // namespace mananet
