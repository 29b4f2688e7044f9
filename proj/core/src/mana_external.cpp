#include "mananet/mana_external.hpp"

#include "mananet/error.hpp"
#include "mananet/json_io.hpp"

namespace mananet {

ManaState combine(const ManaState& a, const ManaState& b) {
  return {sum(a.marking, b.marking), sum(a.pool, b.pool)};
}

Count total_tokens(const ManaState& s) { return checked_add(s.marking.total(), s.pool.total()); }

AffineSpan span_of_transition(const ManaPolicy& policy, Symbol u) {
  auto it = policy.find(u);
  if (it == policy.end()) throw UnknownSymbolError("transition", u);
  return {Multiset::singleton(u, it->second.consume), it->second.produce};
}

AffineSpan compose_spans(const AffineSpan& a, const AffineSpan& b) {
  return {sum(a.consume, b.consume), sum(a.produce, b.produce)};
}

std::optional<Multiset> apply_span(const AffineSpan& span, const Multiset& pool) {
  auto rest = difference(pool, span.consume);
  if (!rest) return std::nullopt;
  return sum(*rest, span.produce);
}

AffineSpan span_of_trace(const ManaPolicy& policy, const Trace& trace) {
  AffineSpan out = identity_span();
  for (Symbol u : trace.steps) out = compose_spans(out, span_of_transition(policy, u));
  return out;
}

Multiset laxator(const Multiset& left, const Multiset& right) { return sum(left, right); }

bool mana_enabled(const Net& net, const ManaPolicy& policy, const ManaState& s, Symbol u) {
  return enabled(net, s.marking, u) && leq(span_of_transition(policy, u).consume, s.pool);
}

NotManaEnabledError::NotManaEnabledError(Symbol transition, bool compound_missing,
                                         bool mana_missing)
    : NotEnabledError(transition), compound_missing_(compound_missing), mana_missing_(mana_missing) {}

ManaState mana_fire(const Net& net, const ManaPolicy& policy, const ManaState& s, Symbol u) {
  AffineSpan span = span_of_transition(policy, u);
  bool compound_ok = enabled(net, s.marking, u);
  auto pool = apply_span(span, s.pool);
  if (!compound_ok || !pool) throw NotManaEnabledError(u, !compound_ok, !pool);
  return {fire(net, s.marking, u), *pool};
}

ReachGraph<ManaState> mana_reach(const Net& net, const ManaPolicy& policy, const ManaState& init,
                                 std::size_t depth_bound, Count token_bound) {
  auto successors = [&](const ManaState& s) {
    std::vector<std::pair<Symbol, ManaState>> out;
    for (const auto& [u, arcs] : net.transitions())
      if (mana_enabled(net, policy, s, u)) out.emplace_back(u, mana_fire(net, policy, s, u));
    return out;
  };
  return explore(init, depth_bound, token_bound, successors,
                 [](const ManaState& s) { return total_tokens(s); },
                 [](const ManaState& s) { return canonical_json(s); });
}

namespace {

std::string describe(const AffineSpan& s) {
  return "(" + to_string(s.consume) + ", " + to_string(s.produce) + ")";
}

std::string describe_steps(const std::vector<Symbol>& steps) {
  std::string out = "[";
  for (std::size_t i = 0; i < steps.size(); ++i) out += (i ? "," : "") + steps[i].str();
  return out + "]";
}

}  // namespace

LawReport check_functor_laws(const Net& net, const ManaPolicy& policy,
                             std::span<const Trace> samples) {
  LawReport report;
  std::optional<std::string> identity_failure;
  std::optional<std::string> composition_failure;
  for (const Trace& trace : samples) {
    run_trace(net, trace);
    if (!identity_failure) {
      AffineSpan id = span_of_trace(policy, Trace{trace.initial, {}});
      if (id != identity_span())
        identity_failure = "empty execution at " + to_string(trace.initial) + " maps to " +
                           describe(id);
    }
    if (composition_failure) continue;
    AffineSpan whole = span_of_trace(policy, trace);
    for (std::size_t k = 0; k <= trace.steps.size() && !composition_failure; ++k) {
      Trace head{trace.initial, {trace.steps.begin(), trace.steps.begin() + k}};
      Trace tail{run_trace(net, head), {trace.steps.begin() + k, trace.steps.end()}};
      AffineSpan composed = compose_spans(span_of_trace(policy, head), span_of_trace(policy, tail));
      if (composed != whole)
        composition_failure = describe_steps(trace.steps) + " split at " + std::to_string(k) +
                              ": " + describe(whole) + " vs " + describe(composed);
    }
  }
  report.add("functor_identity", identity_failure ? LawStatus::Fail : LawStatus::Pass,
             identity_failure);
  report.add("functor_composition", composition_failure ? LawStatus::Fail : LawStatus::Pass,
             composition_failure);
  return report;
}

LawReport check_laxator_naturality(const Net& net, const ManaPolicy& policy,
                                   std::span<const LaxatorSample> samples) {
  LawReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const LaxatorSample& s = samples[i];
    std::string law = "laxator_naturality#" + std::to_string(i);
    run_trace(net, s.left);
    run_trace(net, s.right);
    Trace parallel = tensor(s.left, s.right);
    run_trace(net, parallel);

    AffineSpan left = span_of_trace(policy, s.left);
    AffineSpan right = span_of_trace(policy, s.right);
    AffineSpan both = span_of_trace(policy, parallel);
    if (both != compose_spans(left, right)) {
      report.add(law, LawStatus::Fail,
                 "span of parallel execution " + describe(both) + " differs from " +
                     describe(compose_spans(left, right)));
      continue;
    }
    // Apply separately then merge, versus merge then apply. The merged side
    // may be defined when a separate side is not: that is the laxness.
    auto moved_left = apply_span(left, s.left_pool);
    auto moved_right = apply_span(right, s.right_pool);
    auto merged = apply_span(both, laxator(s.left_pool, s.right_pool));
    if (moved_left && moved_right) {
      if (!merged || *merged != laxator(*moved_left, *moved_right)) {
        report.add(law, LawStatus::Fail,
                   "pools " + to_string(s.left_pool) + " and " + to_string(s.right_pool) +
                       ": separate-then-merge " + to_string(laxator(*moved_left, *moved_right)) +
                       " vs merge-then-apply " + (merged ? to_string(*merged) : "undefined"));
        continue;
      }
    }
    report.add(law, LawStatus::Pass);
  }
  return report;
}

}  // namespace mananet
