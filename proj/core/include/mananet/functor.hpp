#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mananet/execution.hpp"
#include "mananet/net.hpp"

namespace mananet {

/// Strict monoidal functor between the execution categories of two nets,
/// given by its action on generators: each source place goes to a marking
/// of the target, each source transition to an execution of the target.
///
/// The execution categories are free, so this data determines the functor
/// and two functors are equal iff they agree on generators.
struct PresentedFunctor {
  Net source;
  Net target;
  ObjectMap object_map;
  std::map<Symbol, Trace> morphism_map;

  friend bool operator==(const PresentedFunctor&, const PresentedFunctor&) = default;
};

PresentedFunctor identity_functor(const Net& net);
/// The functor induced by a net morphism: places to singletons, transitions
/// to one-step executions.
PresentedFunctor functor_of(const NetMorphism& m);

/// Empty iff both maps are total and every u goes to a valid execution of
/// the target from g(pre(u)) to g(post(u)).
std::vector<Violation> validate_functor(const PresentedFunctor& f);

/// Image of an execution of `f.source`: the lifted initial marking followed
/// by the image of every step in turn. Throws NotEnabledError when `trace`
/// is not valid in the source, and Error when the image fails to replay.
Trace apply_presented_functor(const PresentedFunctor& f, const Trace& trace);

/// `second` after `first`, computed on generators.
PresentedFunctor compose(const PresentedFunctor& first, const PresentedFunctor& second);

/// Outcome of comparing two presentations generator by generator.
struct FunctorComparison {
  TraceEquivalence verdict = TraceEquivalence::Equivalent;
  /// First generator where the two differ or could not be decided.
  std::optional<std::string> discrepancy;
};

/// Compares the source and target nets, the object maps, and the morphism
/// images up to `trace_equivalent`.
FunctorComparison compare_functors(const PresentedFunctor& a, const PresentedFunctor& b);

}  // namespace mananet
