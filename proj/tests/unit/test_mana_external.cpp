#include "doctest.h"
#include "helpers.hpp"

using namespace mananet;
using namespace testing_support;

namespace {

ManaPolicy catalyst_policy(const Net& n) {
  ManaPolicy p = plain_policy(n);
  p[Symbol("u3")] = ManaRule{1, {{"u3", 1}}};
  return p;
}

Net catalyst_net() {
  Net n;
  n.add_place("X").add_place("Y");
  n.add_transition("u3", {{"X", 1}}, {{"Y", 1}});
  return n;
}

// Closed form of the span of a trace: scale each rule by its occurrence count.
AffineSpan closed_form(const ManaPolicy& p, const Trace& tr) {
  AffineSpan s;
  for (const auto& [u, n] : occurrence_multiset(tr)) {
    s.consume = sum(s.consume, Multiset::singleton(u, checked_mul(n, p.at(u).consume)));
    s.produce = sum(s.produce, scale(n, p.at(u).produce));
  }
  return s;
}

}  // namespace

TEST_CASE("span_of_transition") {
  Net n = enzyme_net();
  CHECK(span_of_transition(plain_policy(n), "u") == AffineSpan{{{"u", 1}}, {}});
  CHECK(span_of_transition(catalyst_policy(catalyst_net()), "u3") ==
        AffineSpan{{{"u3", 1}}, {{"u3", 1}}});
  ManaPolicy gen = generalized_policy();
  CHECK(span_of_transition(gen, "u1") == AffineSpan{{}, {}});
  ManaPolicy free_producer{{Symbol("u"), ManaRule{0, {{"u", 2}}}}};
  CHECK(span_of_transition(free_producer, "u") == AffineSpan{{}, {{"u", 2}}});
  CHECK_THROWS_AS(span_of_transition(gen, "nope"), UnknownSymbolError);
}

TEST_CASE("compose_spans") {
  AffineSpan plain_u{{{"u", 1}}, {}};
  CHECK(compose_spans(plain_u, plain_u) == AffineSpan{{{"u", 2}}, {}});
  AffineSpan s{{{"u2", 2}}, {{"u4", 1}}};
  CHECK(compose_spans(s, identity_span()) == s);
  CHECK(compose_spans(identity_span(), s) == s);
  CHECK(compose_spans(s, AffineSpan{{{"u4", 1}}, {{"u2", 1}, {"u3", 1}}}) ==
        AffineSpan{{{"u2", 2}, {"u4", 1}}, {{"u4", 1}, {"u2", 1}, {"u3", 1}}});
}

TEST_CASE("apply_span") {
  AffineSpan s{{{"u", 1}}, {{"v", 2}}};
  CHECK(apply_span(s, {{"u", 3}}) == Multiset{{"u", 2}, {"v", 2}});
  CHECK_FALSE(apply_span(s, {{"v", 3}}).has_value());
}

TEST_CASE("span_of_trace") {
  CHECK(span_of_trace(generalized_policy(), Trace{}) == identity_span());
  Net fig = execution_figure_net();
  Trace tvu{{{"p1", 1}, {"p2", 1}, {"p3", 2}}, {"t", "v", "u"}};
  CHECK(span_of_trace(plain_policy(fig), tvu) == AffineSpan{{{"t", 1}, {"v", 1}, {"u", 1}}, {}});
  Trace u2u2{{{"p2", 2}}, {"u2", "u2"}};
  CHECK(span_of_trace(generalized_policy(), u2u2) == AffineSpan{{{"u2", 4}}, {{"u4", 2}}});
}

TEST_CASE("span_of_trace matches the closed form") {
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    Net n = random_net(rng);
    ManaPolicy p = i % 2 ? random_policy(rng, n) : plain_policy(n);
    Trace tr = random_trace(rng, n, random_marking(rng, n, 5), 6);
    AffineSpan s = span_of_trace(p, tr);
    CHECK(s == closed_form(p, tr));
    if (is_plain(p)) {
      CHECK(s.consume == occurrence_multiset(tr));
      CHECK(s.produce.empty());
    }
    std::vector<Symbol> shuffled = tr.steps;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(span_of_trace(p, Trace{tr.initial, shuffled}) == s);
  }
}

TEST_CASE("spans form a commutative monoid") {
  Rng rng(47);
  std::vector<Symbol> ts{"a", "b", "c"};
  auto draw = [&] { return AffineSpan{random_multiset(rng, ts, 4), random_multiset(rng, ts, 4)}; };
  for (int i = 0; i < 300; ++i) {
    AffineSpan a = draw(), b = draw(), c = draw();
    CHECK(compose_spans(a, b) == compose_spans(b, a));
    CHECK(compose_spans(compose_spans(a, b), c) == compose_spans(a, compose_spans(b, c)));
    CHECK(compose_spans(a, identity_span()) == a);
  }
}

TEST_CASE("mana_enabled on the enzyme example") {
  Net n = enzyme_net();
  ManaPolicy p = plain_policy(n);
  CHECK(mana_enabled(n, p, {{{"A", 1}, {"B", 1}}, {{"u", 2}}}, "u"));
  CHECK_FALSE(mana_enabled(n, p, {{{"A", 1}, {"B", 1}}, {}}, "u"));
  CHECK_FALSE(mana_enabled(n, p, {{{"A", 1}}, {{"u", 4}}}, "u"));
}

TEST_CASE("mana_fire") {
  Net n = enzyme_net();
  ManaPolicy p = plain_policy(n);
  CHECK(mana_fire(n, p, {{{"A", 1}, {"B", 1}}, {{"u", 2}}}, "u") ==
        ManaState{{{"C", 1}}, {{"u", 1}}});

  try {
    mana_fire(n, p, {{{"A", 1}, {"B", 1}}, {}}, "u");
    FAIL("expected NotManaEnabledError");
  } catch (const NotManaEnabledError& e) {
    CHECK(e.mana_missing());
    CHECK_FALSE(e.compound_missing());
  }
  try {
    mana_fire(n, p, {{{"A", 1}}, {{"u", 4}}}, "u");
    FAIL("expected NotManaEnabledError");
  } catch (const NotManaEnabledError& e) {
    CHECK(e.compound_missing());
    CHECK_FALSE(e.mana_missing());
  }

  Net cat = catalyst_net();
  CHECK(mana_fire(cat, catalyst_policy(cat), {{{"X", 1}}, {{"u3", 1}}}, "u3") ==
        ManaState{{{"Y", 1}}, {{"u3", 1}}});

  Net g = generalized_net();
  CHECK(mana_fire(g, generalized_policy(), {{{"p1", 1}}, {}}, "u1") ==
        ManaState{{{"p2", 1}, {"p3", 1}}, {}});
  ManaPolicy producer{{Symbol("u"), ManaRule{0, {{"u", 1}}}}};
  CHECK(mana_fire(n, producer, {{{"A", 1}, {"B", 1}}, {}}, "u") ==
        ManaState{{{"C", 1}}, {{"u", 1}}});
}

TEST_CASE("laxator") {
  CHECK(laxator({{"u", 3}}, {{"u", 1}, {"v", 8}}) == Multiset{{"u", 4}, {"v", 8}});
  CHECK(laxator({}, {{"v", 2}}) == Multiset{{"v", 2}});
  CHECK(laxator({{"a", 1}}, {{"b", 2}}) == laxator({{"b", 2}}, {{"a", 1}}));
}

TEST_CASE("mana firing properties on random states") {
  Rng rng(53);
  for (int i = 0; i < 400; ++i) {
    Net n = random_net(rng);
    bool plain = i % 2 == 0;
    ManaPolicy p = plain ? plain_policy(n) : random_policy(rng, n);
    ManaState s{random_marking(rng, n, 4), random_pool(rng, n, 4)};
    for (const auto& [u, arcs] : n.transitions()) {
      if (!mana_enabled(n, p, s, u)) {
        CHECK_THROWS_AS(mana_fire(n, p, s, u), NotManaEnabledError);
        continue;
      }
      ManaState after = mana_fire(n, p, s, u);
      AffineSpan span = span_of_transition(p, u);
      CHECK(sum(after.pool, span.consume) == sum(s.pool, span.produce));
      CHECK(after.marking == fire(n, s.marking, u));
      if (plain) {
        CHECK(after.pool.count(u) + 1 == s.pool.count(u));
        CHECK(after.pool.filter([&](Symbol v) { return v != u; }) ==
              s.pool.filter([&](Symbol v) { return v != u; }));
      }
    }
  }
}

TEST_CASE("mana_reach agrees with the BFS oracle") {
  Rng rng(59);
  for (int i = 0; i < 150; ++i) {
    Net n = random_net(rng);
    ManaPolicy p = random_policy(rng, n);
    ManaState init{random_marking(rng, n, 3), random_pool(rng, n, 3)};
    auto g = mana_reach(n, p, init, 5, 10);
    auto o = oracle::explore(to_network(n, &p), to_bag(init.marking), to_bag(init.pool), true, 5, 10);
    CHECK(g.nodes.size() == o.nodes);
    CHECK(g.edges.size() == o.edges);
    for (const auto& e : g.edges)
      CHECK(mana_fire(n, p, g.nodes[e.from], e.transition) == g.nodes[e.to]);
  }
}

TEST_CASE("functor laws") {
  Rng rng(61);
  Net g = generalized_net();
  std::vector<Trace> samples;
  for (int i = 0; i < 40; ++i)
    samples.push_back(random_trace(rng, g, random_marking(rng, g, 4), 6));
  LawReport gen = check_functor_laws(g, generalized_policy(), samples);
  CHECK(gen.passed());
  LawReport plain = check_functor_laws(g, plain_policy(g), samples);
  CHECK(plain.passed());
  LawReport empty = check_functor_laws(g, plain_policy(g), std::vector<Trace>{Trace{}});
  CHECK(empty.passed());
  REQUIRE_FALSE(empty.results.empty());
  CHECK(empty.results.front().law == "functor_identity");
}

TEST_CASE("laxator naturality") {
  Net n = execution_figure_net();
  ManaPolicy p = plain_policy(n);
  std::vector<LaxatorSample> samples{
      {Trace{{{"p1", 1}}, {"t"}}, Trace{{{"p3", 1}}, {"u"}}, {{"t", 1}}, {{"u", 2}}},
      {Trace{}, Trace{}, {}, {}},
  };
  LawReport r = check_laxator_naturality(n, p, samples);
  CHECK(r.passed());
  CHECK(r.results.size() == 2);

  Rng rng(67);
  Net g = generalized_net();
  std::vector<LaxatorSample> gen_samples;
  for (int i = 0; i < 100; ++i) {
    gen_samples.push_back({random_trace(rng, g, random_marking(rng, g, 3), 4),
                           random_trace(rng, g, random_marking(rng, g, 3), 4),
                           random_pool(rng, g, 3), random_pool(rng, g, 3)});
  }
  CHECK(check_laxator_naturality(g, generalized_policy(), gen_samples).passed());
}
