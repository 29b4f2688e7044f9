#include "mananet/execution.hpp"

#include <deque>
#include <set>

#include "mananet/error.hpp"

namespace mananet {

Trace concat(const Trace& first, const Trace& second) {
  Trace out = first;
  out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  return out;
}

Trace tensor(const Trace& a, const Trace& b) {
  Trace out{sum(a.initial, b.initial), a.steps};
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  return out;
}

bool enabled(const Net& net, const Marking& m, Symbol u) { return leq(net.pre(u), m); }

Marking fire(const Net& net, const Marking& m, Symbol u) {
  const Arcs& arcs = net.arcs(u);
  auto rest = difference(m, arcs.pre);
  if (!rest) throw NotEnabledError(u);
  return sum(*rest, arcs.post);
}

Marking run_trace(const Net& net, const Trace& trace) {
  Marking m = trace.initial;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Arcs& arcs = net.arcs(trace.steps[i]);
    auto rest = difference(m, arcs.pre);
    if (!rest) throw NotEnabledError(trace.steps[i], i);
    m = sum(*rest, arcs.post);
  }
  return m;
}

Multiset occurrence_multiset(const Trace& trace) {
  std::vector<Multiset::Entry> raw;
  raw.reserve(trace.steps.size());
  for (Symbol s : trace.steps) raw.emplace_back(s, 1);
  return Multiset::from_entries(std::move(raw));
}

namespace {

// Markings before each step of a valid sequence.
std::vector<Marking> intermediate_markings(const Net& net, const Marking& initial,
                                           const std::vector<Symbol>& steps) {
  std::vector<Marking> out;
  out.reserve(steps.size());
  Marking m = initial;
  for (Symbol s : steps) {
    out.push_back(m);
    m = fire(net, m, s);
  }
  return out;
}

}  // namespace

TraceEquivalence trace_equivalent(const Net& net, const Trace& a, const Trace& b,
                                  std::size_t bound) {
  if (a.initial != b.initial) return TraceEquivalence::NotEquivalent;
  if (occurrence_multiset(a) != occurrence_multiset(b)) return TraceEquivalence::NotEquivalent;
  if (run_trace(net, a) != run_trace(net, b)) return TraceEquivalence::NotEquivalent;
  if (a.steps == b.steps) return TraceEquivalence::Equivalent;
  if (a.steps.size() > bound) return TraceEquivalence::Inconclusive;

  // Adjacent steps u;v commute when the marking before u covers both
  // inputs, i.e. u and v could have fired as one parallel step.
  std::set<std::vector<Symbol>> seen{a.steps};
  std::deque<std::vector<Symbol>> queue{a.steps};
  while (!queue.empty()) {
    std::vector<Symbol> current = std::move(queue.front());
    queue.pop_front();
    auto before = intermediate_markings(net, a.initial, current);
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      if (current[i] == current[i + 1]) continue;
      if (!leq(sum(net.pre(current[i]), net.pre(current[i + 1])), before[i])) continue;
      std::vector<Symbol> next = current;
      std::swap(next[i], next[i + 1]);
      if (next == b.steps) return TraceEquivalence::Equivalent;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return TraceEquivalence::NotEquivalent;
}

}  // namespace mananet
