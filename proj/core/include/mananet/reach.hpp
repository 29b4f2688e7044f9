#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mananet/execution.hpp"

namespace mananet {

/// Finite window onto the reachable states of a net.
///
/// Nodes are sorted by their canonical serialization and edges by
/// (from, transition, to), so two explorations of the same input compare
/// equal and serialize identically.
template <class State>
struct ReachGraph {
  struct Edge {
    std::size_t from;
    Symbol transition;
    std::size_t to;
    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  std::vector<State> nodes;
  std::vector<Edge> edges;
  std::size_t root = 0;
  std::size_t depth_bound = 0;
  Count token_bound = 0;
  /// Some node at the depth limit still had an enabled transition.
  bool depth_truncated = false;
  /// Some successor was dropped for exceeding the token bound.
  bool token_truncated = false;

  bool truncated() const { return depth_truncated || token_truncated; }
  friend bool operator==(const ReachGraph&, const ReachGraph&) = default;
};

/// Breadth-first exploration shared by plain and mana-aware semantics.
///
/// `successors(s)` yields (transition, state) pairs for every enabled
/// transition. `tokens(s)` is the size compared against `token_bound`, and
/// `key(s)` the canonical string that fixes node order. The root is always
/// kept, even when it is itself over the token bound.
template <class State, class Successors, class Tokens, class Key>
ReachGraph<State> explore(const State& init, std::size_t depth_bound, Count token_bound,
                          Successors successors, Tokens tokens, Key key) {
  ReachGraph<State> g;
  g.depth_bound = depth_bound;
  g.token_bound = token_bound;

  std::map<State, std::size_t> index{{init, 0}};
  std::vector<State> discovered{init};
  std::vector<typename ReachGraph<State>::Edge> edges;
  std::vector<std::size_t> frontier{0};
  if (tokens(init) > token_bound) g.token_truncated = true;

  for (std::size_t depth = 0; !frontier.empty(); ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t id : frontier) {
      auto succ = successors(discovered[id]);
      if (depth == depth_bound) {
        if (!succ.empty()) g.depth_truncated = true;
        continue;
      }
      for (auto& [label, state] : succ) {
        if (tokens(state) > token_bound) {
          g.token_truncated = true;
          continue;
        }
        auto [it, inserted] = index.try_emplace(state, discovered.size());
        if (inserted) {
          discovered.push_back(state);
          next.push_back(it->second);
        }
        edges.push_back({id, label, it->second});
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<std::string, std::size_t>> order;
  order.reserve(discovered.size());
  for (std::size_t i = 0; i < discovered.size(); ++i) order.emplace_back(key(discovered[i]), i);
  std::sort(order.begin(), order.end());
  std::vector<std::size_t> renumber(discovered.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    renumber[order[rank].second] = rank;
    g.nodes.push_back(std::move(discovered[order[rank].second]));
  }
  for (auto& e : edges) {
    e.from = renumber[e.from];
    e.to = renumber[e.to];
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  g.root = renumber[0];
  return g;
}

/// Reachable markings of `net` from `init` under the plain token game.
ReachGraph<Marking> reach(const Net& net, const Marking& init, std::size_t depth_bound,
                          Count token_bound);

}  // namespace mananet
