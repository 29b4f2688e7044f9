#include "mananet/dot.hpp"

#include <set>
#include <sstream>

namespace mananet {
namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string net_dot(const Net& net, const std::set<Symbol>& mana_places, const Marking* marking) {
  std::ostringstream os;
  os << "digraph net {\n  rankdir=LR;\n";
  for (Symbol p : net.places()) {
    std::string label = p.str();
    if (marking && marking->contains(p)) label += "\n" + std::to_string(marking->count(p));
    os << "  " << quote("p:" + p.str()) << " [label=" << quote(label)
       << ", shape=" << (mana_places.contains(p) ? "doublecircle" : "circle") << "];\n";
  }
  for (const auto& [u, arcs] : net.transitions())
    os << "  " << quote("t:" + u.str()) << " [label=" << quote(u.str()) << ", shape=box];\n";
  for (const auto& [u, arcs] : net.transitions()) {
    for (const auto& [p, n] : arcs.pre)
      os << "  " << quote("p:" + p.str()) << " -> " << quote("t:" + u.str()) << " [label=\"" << n
         << "\"];\n";
    for (const auto& [p, n] : arcs.post)
      os << "  " << quote("t:" + u.str()) << " -> " << quote("p:" + p.str()) << " [label=\"" << n
         << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

template <class State, class Render>
std::string graph_dot(const ReachGraph<State>& g, Render render) {
  std::ostringstream os;
  os << "digraph reach {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  n" << i << " [label=" << quote(render(g.nodes[i])) << ", shape=box";
    if (i == g.root) os << ", peripheries=2";
    os << "];\n";
  }
  for (const auto& e : g.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=" << quote(e.transition.str()) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_dot(const NetDocument& doc) {
  std::set<Symbol> mana_places;
  for (const auto& [u, arcs] : doc.net.transitions()) {
    Symbol candidate = mana_place_name(u);
    if (doc.net.has_place(candidate)) mana_places.insert(candidate);
  }
  return net_dot(doc.net, mana_places, doc.marking ? &*doc.marking : nullptr);
}

std::string export_dot(const ManaNet& mn) {
  std::set<Symbol> mana_places;
  for (const auto& [u, p] : mn.mana_place_of) mana_places.insert(p);
  return net_dot(mn.built, mana_places, nullptr);
}

std::string export_dot(const ReachGraph<Marking>& g) {
  return graph_dot(g, [](const Marking& m) { return to_string(m); });
}

std::string export_dot(const ReachGraph<ManaState>& g) {
  return graph_dot(g, [](const ManaState& s) {
    return to_string(s.marking) + "\npool " + to_string(s.pool);
  });
}

}  // namespace mananet
