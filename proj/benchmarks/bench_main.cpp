#include <benchmark/benchmark.h>

#include <mananet/mananet.hpp>

using namespace mananet;

namespace {

Net generalized_net() {
  Net n;
  for (const char* p : {"p1", "p2", "p3", "p4"}) n.add_place(p);
  n.add_transition("u1", {{"p1", 1}}, {{"p2", 1}, {"p3", 1}});
  n.add_transition("u2", {{"p2", 1}}, {{"p4", 1}});
  n.add_transition("u3", {{"p3", 1}}, {});
  n.add_transition("u4", {{"p4", 1}}, {});
  return n;
}

ManaPolicy generalized_policy() {
  return {{Symbol("u1"), ManaRule{0, {}}},
          {Symbol("u2"), ManaRule{2, {{"u4", 1}}}},
          {Symbol("u3"), ManaRule{1, {{"u3", 1}}}},
          {Symbol("u4"), ManaRule{1, {{"u2", 1}, {"u3", 1}}}}};
}

// A ring of places with one transition per hop; tokens circulate forever.
Net ring(int size) {
  Net n;
  for (int i = 0; i < size; ++i) n.add_place("r" + std::to_string(i));
  for (int i = 0; i < size; ++i)
    n.add_transition("h" + std::to_string(i), Multiset::singleton("r" + std::to_string(i)),
                     Multiset::singleton("r" + std::to_string((i + 1) % size)));
  return n;
}

void BM_ReachRing(benchmark::State& state) {
  const int tokens = static_cast<int>(state.range(0));
  Net n = ring(5);
  Marking init = Multiset::singleton("r0", static_cast<Count>(tokens));
  std::size_t nodes = 0;
  for (auto _ : state) {
    auto g = reach(n, init, 64, 64);
    nodes = g.nodes.size();
    benchmark::DoNotOptimize(g);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ReachRing)->Arg(2)->Arg(4)->Arg(6);

void BM_ManaReachGeneralized(benchmark::State& state) {
  Net n = generalized_net();
  ManaPolicy p = generalized_policy();
  ManaState init{Multiset::singleton("p1", static_cast<Count>(state.range(0))),
                 {{"u2", 4}, {"u3", 2}, {"u4", 2}}};
  for (auto _ : state) benchmark::DoNotOptimize(mana_reach(n, p, init, 12, 64));
}
BENCHMARK(BM_ManaReachGeneralized)->Arg(2)->Arg(4)->Arg(6);

void BM_CheckEquivalence(benchmark::State& state) {
  Net n = generalized_net();
  ManaPolicy p = generalized_policy();
  ManaState init{Multiset::singleton("p1", static_cast<Count>(state.range(0))),
                 {{"u2", 4}, {"u3", 2}, {"u4", 2}}};
  for (auto _ : state) benchmark::DoNotOptimize(check_equivalence(n, p, init, 10, 64));
}
BENCHMARK(BM_CheckEquivalence)->Arg(2)->Arg(4);

void BM_TraceEquivalentWorstOrder(benchmark::State& state) {
  // Independent steps on disjoint places: every permutation is reachable by swaps.
  const int len = static_cast<int>(state.range(0));
  Net n;
  Marking init;
  Trace a, b;
  for (int i = 0; i < len; ++i) {
    std::string s = std::to_string(i);
    n.add_place("a" + s).add_place("b" + s);
    n.add_transition("t" + s, Multiset::singleton("a" + s), Multiset::singleton("b" + s));
    init = sum(init, Multiset::singleton("a" + s));
    a.steps.push_back("t" + s);
  }
  a.initial = b.initial = init;
  b.steps.assign(a.steps.rbegin(), a.steps.rend());
  for (auto _ : state) benchmark::DoNotOptimize(trace_equivalent(n, a, b, 8));
}
BENCHMARK(BM_TraceEquivalentWorstOrder)->DenseRange(4, 8, 2);

void BM_RoundTrip(benchmark::State& state) {
  Rng rng(1);
  std::vector<std::pair<Net, ManaPolicy>> samples;
  for (int i = 0; i < 64; ++i) {
    Net n = random_net(rng, {5, 4, 2});
    samples.emplace_back(n, random_policy(rng, n));
  }
  for (auto _ : state)
    for (const auto& [n, p] : samples) benchmark::DoNotOptimize(externalize(internalize(n, p)));
}
BENCHMARK(BM_RoundTrip);

}  // namespace

BENCHMARK_MAIN();
