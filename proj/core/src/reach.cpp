#include "mananet/reach.hpp"

#include "mananet/json_io.hpp"

namespace mananet {

ReachGraph<Marking> reach(const Net& net, const Marking& init, std::size_t depth_bound,
                          Count token_bound) {
  auto successors = [&](const Marking& m) {
    std::vector<std::pair<Symbol, Marking>> out;
    for (const auto& [u, arcs] : net.transitions())
      if (auto rest = difference(m, arcs.pre)) out.emplace_back(u, sum(*rest, arcs.post));
    return out;
  };
  return explore(init, depth_bound, token_bound, successors,
                 [](const Marking& m) { return m.total(); },
                 [](const Marking& m) { return canonical_json(m); });
}

}  // namespace mananet
