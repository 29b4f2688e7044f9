#pragma once

#include <optional>
#include <span>

#include "mananet/error.hpp"
#include "mananet/execution.hpp"
#include "mananet/law_report.hpp"
#include "mananet/mana_internal.hpp"
#include "mananet/reach.hpp"

namespace mananet {

/// A marking of the base net together with a mana pool over transitions.
struct ManaState {
  Marking marking;
  Multiset pool;

  friend bool operator==(const ManaState&, const ManaState&) = default;
  friend auto operator<=>(const ManaState&, const ManaState&) = default;
};

/// Componentwise sum of two states.
ManaState combine(const ManaState& a, const ManaState& b);
/// Tokens in the marking plus units in the pool.
Count total_tokens(const ManaState& s);

/// The span  T+ <-(- + consume)- T+ -(- + produce)-> T+  on pools: it
/// relates `z + consume` to `z + produce` for every pool z.
struct AffineSpan {
  Multiset consume;
  Multiset produce;
  friend bool operator==(const AffineSpan&, const AffineSpan&) = default;
};

inline AffineSpan identity_span() { return {}; }

/// ({u: consume(u)}, produce(u)). Throws UnknownSymbolError if u has no rule.
AffineSpan span_of_transition(const ManaPolicy& policy, Symbol u);
/// Composite of two affine spans; offsets add up.
AffineSpan compose_spans(const AffineSpan& a, const AffineSpan& b);
/// The pool related to `pool` by the span, if any.
std::optional<Multiset> apply_span(const AffineSpan& span, const Multiset& pool);
/// Fold of span_of_transition over the steps.
AffineSpan span_of_trace(const ManaPolicy& policy, const Trace& trace);

/// Merges the pool knowledge of two token groups.
Multiset laxator(const Multiset& left, const Multiset& right);

/// Compound inputs present and enough of u's own mana in the pool.
bool mana_enabled(const Net& net, const ManaPolicy& policy, const ManaState& s, Symbol u);

/// Raised by mana_fire; says which layer blocked the firing.
class NotManaEnabledError : public NotEnabledError {
 public:
  NotManaEnabledError(Symbol transition, bool compound_missing, bool mana_missing);
  bool compound_missing() const { return compound_missing_; }
  bool mana_missing() const { return mana_missing_; }

 private:
  bool compound_missing_;
  bool mana_missing_;
};

/// Fires u on the marking and moves the pool along u's span.
ManaState mana_fire(const Net& net, const ManaPolicy& policy, const ManaState& s, Symbol u);

/// Reachable mana states; `token_bound` applies to total_tokens.
ReachGraph<ManaState> mana_reach(const Net& net, const ManaPolicy& policy, const ManaState& init,
                                 std::size_t depth_bound, Count token_bound);

/// Identity law on the empty execution at every sample's initial marking,
/// and composition law at every split point of every sample.
LawReport check_functor_laws(const Net& net, const ManaPolicy& policy,
                             std::span<const Trace> samples);

struct LaxatorSample {
  Trace left;
  Trace right;
  Multiset left_pool;
  Multiset right_pool;
};

/// For each sample: the span of the parallel execution is the composite of
/// the two spans, and moving each pool along its own span then merging
/// agrees with merging first and moving along the parallel span.
LawReport check_laxator_naturality(const Net& net, const ManaPolicy& policy,
                                   std::span<const LaxatorSample> samples);

}  // namespace mananet
