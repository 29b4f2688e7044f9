#pragma once

#include <string>

#include "mananet/json_io.hpp"

namespace mananet {

// Graphviz renderings. Places are circles, mana places double circles,
// transitions boxes; arcs carry their multiplicity as a label. Output is
// a pure function of the input.

/// Places named `mana:<t>` for a transition t are drawn as mana places.
std::string export_dot(const NetDocument& doc);
std::string export_dot(const ManaNet& mn);
std::string export_dot(const ReachGraph<Marking>& g);
std::string export_dot(const ReachGraph<ManaState>& g);

}  // namespace mananet
