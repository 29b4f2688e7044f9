#include "doctest.h"
#include "helpers.hpp"

using namespace mananet;
using namespace testing_support;

TEST_CASE("enabled and fire on the ATP net") {
  Net n = atp_net();
  CHECK(enabled(n, {{"ATP", 2}, {"H2O", 1}}, "hydrolysis"));
  CHECK_FALSE(enabled(n, {{"ATP", 1}}, "hydrolysis"));
  CHECK(enabled(n, {{"ATP", 5}, {"H2O", 3}, {"Pi", 1}}, "hydrolysis"));
  CHECK(fire(n, {{"ATP", 2}, {"H2O", 1}}, "hydrolysis") ==
        Multiset{{"ATP", 1}, {"ADP", 1}, {"Pi", 1}});
  CHECK_THROWS_AS(fire(n, {{"ATP", 1}}, "hydrolysis"), NotEnabledError);
  CHECK_THROWS_AS(enabled(n, {}, "nope"), UnknownSymbolError);
}

TEST_CASE("fire on other nets") {
  CHECK(fire(enzyme_net(), {{"A", 1}, {"B", 1}}, "u") == Multiset{{"C", 1}});
  Net loop;
  loop.add_place("A");
  loop.add_transition("s", {{"A", 1}}, {{"A", 1}});
  CHECK(fire(loop, {{"A", 2}}, "s") == Multiset{{"A", 2}});
}

TEST_CASE("run_trace") {
  Net n = execution_figure_net();
  CHECK(run_trace(n, Trace{{{"p1", 1}}, {}}) == Multiset{{"p1", 1}});
  CHECK(run_trace(n, Trace{{{"p1", 1}, {"p2", 1}, {"p3", 2}}, {"t", "v", "u"}}) ==
        Multiset{{"p2", 1}, {"p3", 2}, {"p4", 2}});
  CHECK(run_trace(n, Trace{{{"p1", 1}}, {"t"}}) == fire(n, {{"p1", 1}}, "t"));
  try {
    run_trace(n, Trace{{{"p1", 1}}, {"t", "t"}});
    FAIL("expected NotEnabledError");
  } catch (const NotEnabledError& e) {
    CHECK(e.step() == std::optional<std::size_t>(1));
    CHECK(e.transition() == Symbol("t"));
  }
}

TEST_CASE("occurrence_multiset") {
  CHECK(occurrence_multiset(Trace{}).empty());
  CHECK(occurrence_multiset(Trace{{}, {"t", "v", "u"}}) == Multiset{{"t", 1}, {"v", 1}, {"u", 1}});
  CHECK(occurrence_multiset(Trace{{}, {"u", "u"}}) == Multiset{{"u", 2}});
}

TEST_CASE("trace_equivalent examples") {
  Net disjoint;
  disjoint.add_place("A").add_place("B").add_place("C").add_place("D");
  disjoint.add_transition("u", {{"A", 1}}, {{"B", 1}});
  disjoint.add_transition("v", {{"C", 1}}, {{"D", 1}});
  Marking m{{"A", 1}, {"C", 1}};
  CHECK(trace_equivalent(disjoint, {m, {"u", "v"}}, {m, {"v", "u"}}) ==
        TraceEquivalence::Equivalent);

  Net parallel;
  parallel.add_place("A").add_place("B");
  parallel.add_transition("u", {{"A", 1}}, {{"B", 1}});
  parallel.add_transition("v", {{"A", 1}}, {{"B", 1}});
  CHECK(trace_equivalent(parallel, {{{"A", 1}}, {"u"}}, {{{"A", 1}}, {"v"}}) ==
        TraceEquivalence::NotEquivalent);

  Net fig = execution_figure_net();
  Marking init{{"p1", 1}, {"p2", 1}, {"p3", 2}};
  CHECK(trace_equivalent(fig, {init, {"t", "v", "u"}}, {init, {"t", "u", "v"}}) ==
        TraceEquivalence::Equivalent);
  // The swap oracle agrees.
  CHECK(oracle::swap_connected(to_network(fig), to_bag(init), {"t", "v", "u"}, {"t", "u", "v"}));
}

TEST_CASE("steps whose inputs are jointly present commute") {
  Net fig = execution_figure_net();
  Marking init{{"p1", 1}, {"p2", 1}};
  CHECK(trace_equivalent(fig, {init, {"t", "v"}}, {init, {"v", "t"}}) ==
        TraceEquivalence::Equivalent);
  Marking tight{{"p1", 1}};
  CHECK(trace_equivalent(fig, {tight, {"t", "v"}}, {tight, {"t", "v"}}) ==
        TraceEquivalence::Equivalent);
  CHECK(trace_equivalent(fig, {init, {"t"}}, {tight, {"t"}}) == TraceEquivalence::NotEquivalent);
}

TEST_CASE("trace_equivalent beyond the bound") {
  Net loops;
  loops.add_place("A");
  loops.add_transition("r", {{"A", 1}}, {{"A", 1}});
  loops.add_transition("s", {{"A", 1}}, {{"A", 1}});
  Marking one{{"A", 1}};
  std::vector<Symbol> rs{"r", "s", "s", "s", "s", "s", "s", "s", "s"};
  std::vector<Symbol> sr{"s", "s", "s", "s", "s", "s", "s", "s", "r"};
  CHECK(trace_equivalent(loops, {one, rs}, {one, sr}) == TraceEquivalence::Inconclusive);
  CHECK(trace_equivalent(loops, {one, rs}, {one, rs}) == TraceEquivalence::Equivalent);
  std::vector<Symbol> ss(9, Symbol("s"));
  CHECK(trace_equivalent(loops, {one, rs}, {one, ss}) == TraceEquivalence::NotEquivalent);
  // Within the bound the single token forces a strict sequence: no swap applies.
  CHECK(trace_equivalent(loops, {one, {"r", "s"}}, {one, {"s", "r"}}) ==
        TraceEquivalence::NotEquivalent);
  Marking two{{"A", 2}};
  CHECK(trace_equivalent(loops, {two, {"r", "s"}}, {two, {"s", "r"}}) ==
        TraceEquivalence::Equivalent);
}

TEST_CASE("trace_equivalent agrees with the permutation oracle") {
  Rng rng(17);
  int equivalent = 0;
  for (int i = 0; i < 300; ++i) {
    Net n = random_net(rng, {3, 3, 1});
    Marking init = random_marking(rng, n, 4);
    Trace a = random_trace(rng, n, init, 5);
    std::vector<Symbol> perm = a.steps;
    std::shuffle(perm.begin(), perm.end(), rng);
    Trace b{init, perm};
    bool b_valid = true;
    try {
      run_trace(n, b);
    } catch (const NotEnabledError&) {
      b_valid = false;
    }
    if (!b_valid) continue;
    std::vector<std::string> sa, sb;
    for (Symbol s : a.steps) sa.push_back(s.str());
    for (Symbol s : b.steps) sb.push_back(s.str());
    bool expected = oracle::swap_connected(to_network(n), to_bag(init), sa, sb);
    auto got = trace_equivalent(n, a, b);
    CHECK(got == (expected ? TraceEquivalence::Equivalent : TraceEquivalence::NotEquivalent));
    CHECK(trace_equivalent(n, b, a) == got);
    CHECK(trace_equivalent(n, a, a) == TraceEquivalence::Equivalent);
    equivalent += expected;
  }
  CHECK(equivalent > 50);
}

TEST_CASE("execution properties on random nets") {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    Net n = random_net(rng);
    Marking init = random_marking(rng, n, 5);
    Trace t1 = random_trace(rng, n, init, 4);
    Marking mid = run_trace(n, t1);
    Trace t2 = random_trace(rng, n, mid, 4);
    Trace both = concat(t1, t2);
    CHECK(run_trace(n, both) == run_trace(n, t2));
    CHECK(occurrence_multiset(both) == sum(occurrence_multiset(t1), occurrence_multiset(t2)));
    for (const auto& [u, arcs] : n.transitions()) {
      if (!enabled(n, init, u)) continue;
      Marking after = fire(n, init, u);
      CHECK(after.total() + arcs.pre.total() == init.total() + arcs.post.total());
    }
  }
}

TEST_CASE("tensor runs both traces side by side") {
  Net n = execution_figure_net();
  Trace a{{{"p1", 1}}, {"t"}};
  Trace b{{{"p3", 1}}, {"u"}};
  Trace ab = tensor(a, b);
  CHECK(ab.initial == Multiset{{"p1", 1}, {"p3", 1}});
  CHECK(run_trace(n, ab) == sum(run_trace(n, a), run_trace(n, b)));
}

TEST_CASE("reach examples") {
  auto g = reach(atp_net(), {{"ATP", 2}, {"H2O", 1}}, 2, 100);
  CHECK(g.nodes.size() == 2);
  CHECK(g.edges.size() == 1);
  CHECK_FALSE(g.truncated());

  auto empty = reach(execution_figure_net(), {}, 5, 10);
  CHECK(empty.nodes.size() == 1);
  CHECK(empty.edges.empty());

  Net loop;
  loop.add_place("A");
  loop.add_transition("s", {{"A", 1}}, {{"A", 1}});
  auto self = reach(loop, {{"A", 1}}, 3, 10);
  CHECK(self.nodes.size() == 1);
  REQUIRE(self.edges.size() == 1);
  CHECK(self.edges[0].from == self.edges[0].to);
}

TEST_CASE("reach reports truncation") {
  Net grow;
  grow.add_place("A");
  grow.add_transition("g", {{"A", 1}}, {{"A", 2}});
  auto by_depth = reach(grow, {{"A", 1}}, 3, 100);
  CHECK(by_depth.depth_truncated);
  CHECK(by_depth.nodes.size() == 4);
  auto by_tokens = reach(grow, {{"A", 1}}, 10, 3);
  CHECK(by_tokens.token_truncated);
  CHECK_FALSE(by_tokens.depth_truncated);
  CHECK(by_tokens.nodes.size() == 3);
}

TEST_CASE("reach agrees with the BFS oracle and is deterministic") {
  Rng rng(29);
  for (int i = 0; i < 150; ++i) {
    Net n = random_net(rng);
    Marking init = random_marking(rng, n, 3);
    auto g = reach(n, init, 5, 8);
    auto o = oracle::explore(to_network(n), to_bag(init), {}, false, 5, 8);
    CHECK(g.nodes.size() == o.nodes);
    CHECK(g.edges.size() == o.edges);
    CHECK(g == reach(n, init, 5, 8));
    for (const auto& e : g.edges) CHECK(fire(n, g.nodes[e.from], e.transition) == g.nodes[e.to]);
  }
}
