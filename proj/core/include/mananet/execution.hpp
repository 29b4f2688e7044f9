#pragma once

#include <cstddef>
#include <vector>

#include "mananet/multiset.hpp"
#include "mananet/net.hpp"

namespace mananet {

/// A marking is a multiset over the places of some net.
using Marking = Multiset;

/// An execution: an initial marking and the transitions fired from it, in
/// order. Stands for a morphism of the net's free commutative monoidal
/// category; the net itself is passed alongside wherever it matters.
struct Trace {
  Marking initial;
  std::vector<Symbol> steps;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Sequential composition: `second` continues from where `first` ends.
/// The result starts at first.initial; second.initial is not checked.
Trace concat(const Trace& first, const Trace& second);
/// Monoidal product: both executions side by side from the summed marking.
Trace tensor(const Trace& a, const Trace& b);

/// Whether `pre(u) <= m`. Throws UnknownSymbolError for undeclared u.
bool enabled(const Net& net, const Marking& m, Symbol u);
/// `(m - pre(u)) + post(u)`. Throws NotEnabledError if u is not enabled.
Marking fire(const Net& net, const Marking& m, Symbol u);
/// Final marking of a replay. Throws NotEnabledError carrying the index of
/// the first step that could not fire.
Marking run_trace(const Net& net, const Trace& trace);
/// How many times each transition occurs in the trace.
Multiset occurrence_multiset(const Trace& trace);

enum class TraceEquivalence { Equivalent, NotEquivalent, Inconclusive };

/// Default longest trace the swap search handles exactly.
inline constexpr std::size_t kDefaultSwapSearchBound = 8;

/// Approximates equality of two executions as morphisms.
///
/// Traces that differ in initial marking, final marking or occurrence
/// multiset are NotEquivalent. Otherwise the second is searched for among
/// the reorderings of the first obtained by swapping adjacent steps that
/// could fire concurrently. Beyond `bound` steps the search is skipped and
/// the answer is Inconclusive.
TraceEquivalence trace_equivalent(const Net& net, const Trace& a, const Trace& b,
                                  std::size_t bound = kDefaultSwapSearchBound);

}  // namespace mananet
