#include "mananet/equivalence.hpp"

#include <future>
#include <set>

#include "mananet/json_io.hpp"

namespace mananet {

ManaNet internalize(const Net& net, const ManaPolicy& policy) {
  return generalized_internal_construction(net, policy);
}

Marking state_to_object(const ManaNet& mn, const ManaState& s) {
  return sum(s.marking, lift_multiset_map(mn.mana_place_of, s.pool));
}

ManaState object_to_state(const ManaNet& mn, const Marking& m) {
  std::map<Symbol, Symbol> owner;
  for (const auto& [u, place] : mn.mana_place_of) owner.emplace(place, u);
  std::vector<Multiset::Entry> marking, pool;
  for (const auto& [p, n] : m) {
    if (auto it = owner.find(p); it != owner.end())
      pool.emplace_back(it->second, n);
    else if (mn.base.has_place(p))
      marking.emplace_back(p, n);
    else
      throw UnknownSymbolError("place", p);
  }
  return {Multiset::from_entries(std::move(marking)), Multiset::from_entries(std::move(pool))};
}

std::pair<Net, ManaPolicy> externalize(const Net& built,
                                       const std::map<Symbol, Symbol>& mana_place_of) {
  std::map<Symbol, Symbol> owner;
  for (const auto& [u, place] : mana_place_of) {
    if (!built.has_transition(u)) throw ShapeViolationError(u, "labelled but not a transition");
    if (!built.has_place(place))
      throw ShapeViolationError(u, "mana place '" + place.str() + "' missing");
    if (!owner.emplace(place, u).second)
      throw ShapeViolationError(u, "mana place '" + place.str() + "' shared");
  }
  auto is_mana = [&](Symbol p) { return owner.contains(p); };

  Net base;
  for (Symbol p : built.places())
    if (!is_mana(p)) base.add_place(p);
  ManaPolicy policy;
  for (const auto& [u, arcs] : built.transitions()) {
    auto own = mana_place_of.find(u);
    if (own == mana_place_of.end()) throw ShapeViolationError(u, "transition has no mana place");
    for (const auto& [p, n] : arcs.pre)
      if (is_mana(p) && p != own->second)
        throw ShapeViolationError(u, "consumes mana of '" + owner.at(p).str() + "'");
    std::vector<Multiset::Entry> produce;
    for (const auto& [p, n] : arcs.post)
      if (is_mana(p)) produce.emplace_back(owner.at(p), n);
    policy.emplace(u, ManaRule{arcs.pre.count(own->second), Multiset::from_entries(std::move(produce))});
    base.add_transition(u, arcs.pre.filter([&](Symbol p) { return !is_mana(p); }),
                        arcs.post.filter([&](Symbol p) { return !is_mana(p); }));
  }
  return {std::move(base), std::move(policy)};
}

std::pair<Net, ManaPolicy> externalize(const ManaNet& mn) {
  return externalize(mn.built, mn.mana_place_of);
}

std::map<Symbol, Symbol> mana_labeling_by_name(const Net& built, std::size_t layer) {
  std::map<Symbol, Symbol> out;
  for (const auto& [u, arcs] : built.transitions()) {
    Symbol place = mana_place_name(u, layer);
    if (!built.has_place(place)) throw ShapeViolationError(u, "no place named '" + place.str() + "'");
    out.emplace(u, place);
  }
  return out;
}

EquivalenceReport check_equivalence(const Net& net, const ManaPolicy& policy,
                                    const ManaState& init, std::size_t depth, Count token_bound) {
  ManaNet mn = internalize(net, policy);
  auto external = std::async(std::launch::async, [&] {
    return mana_reach(net, policy, init, depth, token_bound);
  });
  ReachGraph<Marking> internal = reach(mn.built, state_to_object(mn, init), depth, token_bound);
  ReachGraph<ManaState> ext = external.get();

  EquivalenceReport report;
  report.ext_nodes = ext.nodes.size();
  report.int_nodes = internal.nodes.size();
  report.ext_edges = ext.edges.size();
  report.int_edges = internal.edges.size();
  report.truncated = ext.truncated() || internal.truncated();

  auto fail = [&](std::string why) {
    report.isomorphic = false;
    report.first_discrepancy = std::move(why);
    return report;
  };

  std::map<Marking, std::size_t> internal_index;
  for (std::size_t i = 0; i < internal.nodes.size(); ++i) internal_index.emplace(internal.nodes[i], i);

  std::vector<std::size_t> image(ext.nodes.size());
  std::set<std::size_t> hit;
  for (std::size_t i = 0; i < ext.nodes.size(); ++i) {
    Marking object = state_to_object(mn, ext.nodes[i]);
    auto it = internal_index.find(object);
    if (it == internal_index.end())
      return fail("state " + canonical_json(ext.nodes[i]) + " has no internal counterpart " +
                  canonical_json(object));
    image[i] = it->second;
    hit.insert(it->second);
  }
  if (hit.size() != ext.nodes.size()) return fail("state_to_object is not injective on the graph");
  if (hit.size() != internal.nodes.size()) {
    for (std::size_t j = 0; j < internal.nodes.size(); ++j)
      if (!hit.contains(j))
        return fail("internal marking " + canonical_json(internal.nodes[j]) +
                    " has no external counterpart");
  }
  if (image[ext.root] != internal.root) return fail("roots do not correspond");

  using Edge = ReachGraph<Marking>::Edge;
  std::set<Edge> mapped;
  for (const auto& e : ext.edges) mapped.insert(Edge{image[e.from], e.transition, image[e.to]});
  std::set<Edge> expected(internal.edges.begin(), internal.edges.end());
  for (const auto& e : mapped)
    if (!expected.contains(e))
      return fail("external firing of '" + e.transition.str() + "' from " +
                  canonical_json(internal.nodes[e.from]) + " has no internal counterpart");
  for (const auto& e : expected)
    if (!mapped.contains(e))
      return fail("internal firing of '" + e.transition.str() + "' from " +
                  canonical_json(internal.nodes[e.from]) + " has no external counterpart");
  if (ext.truncated() != internal.truncated()) return fail("truncation differs");

  report.isomorphic = true;
  return report;
}

}  // namespace mananet
