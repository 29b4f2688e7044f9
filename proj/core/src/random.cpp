#include "mananet/random.hpp"

#include <map>

namespace mananet {
namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<Symbol> names(std::string_view prefix, std::size_t n) {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(std::string(prefix) + std::to_string(i));
  return out;
}

std::vector<Symbol> transitions_of(const Net& net) {
  std::vector<Symbol> out;
  for (const auto& [u, arcs] : net.transitions()) out.push_back(u);
  return out;
}

}  // namespace

Multiset random_multiset(Rng& rng, const std::vector<Symbol>& symbols, Count max_total) {
  if (symbols.empty()) return {};
  std::vector<Multiset::Entry> entries;
  Count total = uniform(rng, 0, max_total);
  for (Count i = 0; i < total; ++i) entries.emplace_back(symbols[uniform(rng, 0, symbols.size() - 1)], 1);
  return Multiset::from_entries(std::move(entries));
}

Net random_net(Rng& rng, const RandomNetShape& shape) {
  Net net;
  auto places = names("p", uniform(rng, 1, std::max<std::size_t>(1, shape.max_places)));
  for (Symbol p : places) net.add_place(p);
  for (Symbol u : names("t", uniform(rng, 0, shape.max_transitions)))
    net.add_transition(u, random_multiset(rng, places, shape.max_arc_weight),
                       random_multiset(rng, places, shape.max_arc_weight));
  return net;
}

ManaPolicy random_policy(Rng& rng, const Net& net, Count max_consume, Count max_produce_total) {
  ManaPolicy policy;
  auto ts = transitions_of(net);
  for (Symbol u : ts)
    policy.emplace(u, ManaRule{uniform(rng, 0, max_consume), random_multiset(rng, ts, max_produce_total)});
  return policy;
}

Marking random_marking(Rng& rng, const Net& net, Count max_total) {
  return random_multiset(rng, {net.places().begin(), net.places().end()}, max_total);
}

Multiset random_pool(Rng& rng, const Net& net, Count max_total) {
  return random_multiset(rng, transitions_of(net), max_total);
}

Trace random_trace(Rng& rng, const Net& net, const Marking& initial, std::size_t max_steps) {
  Trace trace{initial, {}};
  Marking m = initial;
  std::size_t length = uniform(rng, 0, max_steps);
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Symbol> ready;
    for (const auto& [u, arcs] : net.transitions())
      if (leq(arcs.pre, m)) ready.push_back(u);
    if (ready.empty()) break;
    Symbol u = ready[uniform(rng, 0, ready.size() - 1)];
    m = fire(net, m, u);
    trace.steps.push_back(u);
  }
  return trace;
}

NetMorphism random_morphism(Rng& rng, const Net& source) {
  NetMorphism m{source, {}, {}, {}};
  auto targets = names("q", uniform(rng, 1, source.places().size() + 1));
  for (Symbol q : targets) m.target.add_place(q);
  for (Symbol p : source.places()) m.place_map.emplace(p, targets[uniform(rng, 0, targets.size() - 1)]);

  // Transitions with identical images may share one target transition.
  std::map<Arcs, Symbol, decltype([](const Arcs& a, const Arcs& b) {
             return std::tie(a.pre, a.post) < std::tie(b.pre, b.post);
           })>
      shared;
  std::size_t next = 0;
  for (const auto& [u, arcs] : source.transitions()) {
    Arcs image{lift_multiset_map(m.place_map, arcs.pre), lift_multiset_map(m.place_map, arcs.post)};
    auto it = shared.find(image);
    if (it != shared.end() && uniform(rng, 0, 1) == 1) {
      m.transition_map.emplace(u, it->second);
      continue;
    }
    Symbol v("s" + std::to_string(next++));
    m.target.add_transition(v, image.pre, image.post);
    m.transition_map.emplace(u, v);
    shared.emplace(image, v);
  }
  for (std::size_t extra = uniform(rng, 0, 1); extra > 0; --extra)
    m.target.add_transition(Symbol("s" + std::to_string(next++)), random_multiset(rng, targets, 2),
                            random_multiset(rng, targets, 2));
  return m;
}

}  // namespace mananet
