#pragma once

#include <cstdint>
#include <random>

#include "mananet/execution.hpp"
#include "mananet/mana_external.hpp"
#include "mananet/mana_internal.hpp"
#include "mananet/net.hpp"

namespace mananet {

// Seeded generators of small nets, policies, states and executions for
// property checks and law sampling. Same seed, same output.

using Rng = std::mt19937_64;

struct RandomNetShape {
  std::size_t max_places = 4;
  std::size_t max_transitions = 3;
  /// Upper bound on the total size of each pre and post multiset.
  Count max_arc_weight = 2;
};

/// Places p0.., transitions t0..; always passes validate_net.
Net random_net(Rng& rng, const RandomNetShape& shape = {});

/// consume(u) <= max_consume, total of produce(u) <= max_produce_total.
ManaPolicy random_policy(Rng& rng, const Net& net, Count max_consume = 2,
                         Count max_produce_total = 3);

/// Random multiset over `symbols` with total size at most `max_total`.
Multiset random_multiset(Rng& rng, const std::vector<Symbol>& symbols, Count max_total);
Marking random_marking(Rng& rng, const Net& net, Count max_total);
Multiset random_pool(Rng& rng, const Net& net, Count max_total);

/// Random walk of at most `max_steps` firings from `initial`; stops early
/// in a deadlock.
Trace random_trace(Rng& rng, const Net& net, const Marking& initial, std::size_t max_steps);

/// Random valid morphism out of `source`: places are merged at random,
/// transitions with equal images may be collapsed, and the target may get
/// extra transitions.
NetMorphism random_morphism(Rng& rng, const Net& source);

}  // namespace mananet
