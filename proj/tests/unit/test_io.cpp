#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

using namespace mananet;
using namespace testing_support;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(MANANET_TEST_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  std::regex re(pattern);
  return std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator());
}

}  // namespace

TEST_CASE("parse_json on the ATP document") {
  NetDocument doc = parse_json(slurp("atp.json"));
  CHECK(doc.net.places().size() == 4);
  CHECK(doc.net.transitions().size() == 1);
  CHECK(doc.net == atp_net());
  CHECK(doc.marking == Multiset{{"ATP", 2}, {"H2O", 1}});
  CHECK_FALSE(doc.policy.has_value());
}

TEST_CASE("json round trip is byte exact") {
  for (const char* name : {"atp.json", "enzyme.json", "enzyme_internal.json"}) {
    std::string text = slurp(name);
    CHECK(emit_json(parse_json(text)) == text);
  }
  NetDocument doc{generalized_net(), generalized_policy(), Multiset{{"p1", 2}},
                  Multiset{{"u2", 2}, {"u3", 1}, {"u4", 1}}};
  std::string text = emit_json(doc);
  CHECK(parse_json(text) == doc);
  CHECK(emit_json(parse_json(text)) == text);
}

TEST_CASE("internalized enzyme net matches the golden file") {
  ManaNet mn = internalize(enzyme_net(), plain_policy(enzyme_net()));
  CHECK(emit_json(NetDocument{mn.built, {}, {}, {}}) == slurp("enzyme_internal.json"));
}

TEST_CASE("parse_json errors") {
  CHECK(parse_json(R"({"places":[],"transitions":{}})").net == Net{});

  try {
    parse_json(R"({"places":["A"],"transitions":{"u":{"pre":{"A":1},"post":{}}},"pool":{"ghost":1}})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("ghost") != std::string::npos);
  }

  try {
    parse_json("{\"places\":[],\n \"transitions\":{},\n \"extra\":1}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("extra") != std::string::npos);
  }

  try {
    parse_json("{\"places\":[\n  \"A\",,]}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  CHECK_THROWS_AS(parse_json(R"({"places":["A","A"],"transitions":{}})"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"places":["A"],"transitions":{"u":{"pre":{"A":0},"post":{}}}})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_json(R"({"places":["A"],"transitions":{"u":{"pre":{},"post":{}}},"mana":{}})"),
      ParseError);
}

TEST_CASE("json helpers") {
  CHECK(canonical_json(Multiset{{"b", 1}, {"a", 2}}) == R"({"a":2,"b":1})");
  ManaState s{{{"C", 1}}, {{"u", 1}}};
  CHECK(canonical_json(s) == R"({"marking":{"C":1},"pool":{"u":1}})");
  CHECK(mana_state_from_json(to_json(s)) == s);
  Trace t{{{"p1", 1}}, {"t", "v"}};
  CHECK(to_json(t).dump() == R"({"initial":{"p1":1},"steps":["t","v"]})");
  CHECK(trace_from_json(to_json(t)) == t);
  CHECK(to_json(AffineSpan{{{"u", 1}}, {}}).dump() == R"({"consume":{"u":1},"produce":{}})");
}

TEST_CASE("reach graph json is deterministic") {
  auto g = reach(atp_net(), {{"ATP", 2}, {"H2O", 1}}, 2, 100);
  CHECK(to_json(g).dump() == to_json(reach(atp_net(), {{"ATP", 2}, {"H2O", 1}}, 2, 100)).dump());
  CHECK(to_json(g)["edges"].size() == 1);
  CHECK(to_json(g)["edges"][0][1] == "hydrolysis");
}

TEST_CASE("reaction dsl examples") {
  NetDocument atp = parse_reaction_dsl("hydrolysis: ATP + H2O -> ADP + Pi\n");
  CHECK(atp.net.pre("hydrolysis") == Multiset{{"ATP", 1}, {"H2O", 1}});
  CHECK(atp.net.post("hydrolysis") == Multiset{{"ADP", 1}, {"Pi", 1}});
  CHECK_FALSE(atp.policy.has_value());

  NetDocument enzyme = parse_reaction_dsl("u: A + B -> C mana: consume 1\npool: u=2\n");
  CHECK(enzyme.net == enzyme_net());
  CHECK(enzyme.policy == plain_policy(enzyme_net()));
  CHECK(enzyme.pool == Multiset{{"u", 2}});

  NetDocument cat = parse_reaction_dsl("u3: X -> Y mana: consume 1, produce {u3:1}");
  CHECK(cat.policy->at("u3") == ManaRule{1, {{"u3", 1}}});
  CHECK(cat.net.post("u3") == Multiset{{"Y", 1}});

  NetDocument coeff = parse_reaction_dsl("r: 2 A + B -> 3 C  # comment\nmarking: 4 A + B\n");
  CHECK(coeff.net.pre("r") == Multiset{{"A", 2}, {"B", 1}});
  CHECK(coeff.net.post("r") == Multiset{{"C", 3}});
  CHECK(coeff.marking == Multiset{{"A", 4}, {"B", 1}});
}

TEST_CASE("reaction dsl output validates") {
  for (const char* name : {"atp.rxn", "enzyme.rxn", "generalized.rxn"}) {
    std::ifstream in(std::string(MANANET_SAMPLE_DATA_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    NetDocument doc = parse_document(ss.str());
    CHECK(validate_document(doc).empty());
    CHECK(validate_net(doc.net).empty());
    if (doc.policy) CHECK(validate_policy(doc.net, *doc.policy).empty());
  }
}

TEST_CASE("reaction dsl errors carry positions") {
  auto position = [](const char* text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_reaction_dsl(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(position("u: A -> B\nv A -> B\n").first == 2);
  CHECK(position("u: A -> B mana: eat 1").second == 17);
  CHECK(position("u: 0 A -> B").first == 1);
  CHECK(position("u: A -> B\nu: B -> A\n").first == 2);
  CHECK(position("u: A -> u\n").first != 0);
  CHECK(position("u: A -> B\npool: w=1\n").first == 2);
  CHECK(position("u: A -> B $").second == 11);
}

TEST_CASE("dot export") {
  NetDocument atp{atp_net(), {}, {}, {}};
  std::string dot = export_dot(atp);
  CHECK(count_matches(dot, R"(shape=(circle|box|doublecircle))") == 5);
  CHECK(dot == export_dot(atp));

  ManaNet mn = internalize(enzyme_net(), plain_policy(enzyme_net()));
  std::string built = export_dot(mn);
  CHECK(built.find(R"("p:mana:u" [label="mana:u", shape=doublecircle])") != std::string::npos);
  CHECK(count_matches(built, "doublecircle") == 1);
  CHECK(export_dot(NetDocument{mn.built, {}, {}, {}}) == built);

  auto g = reach(atp_net(), {{"ATP", 2}, {"H2O", 1}}, 2, 100);
  std::string rdot = export_dot(g);
  CHECK(count_matches(rdot, "shape=box") == g.nodes.size());
  CHECK(count_matches(rdot, "->") == g.edges.size());
}
