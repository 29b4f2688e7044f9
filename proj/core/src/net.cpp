#include "mananet/net.hpp"

#include "mananet/error.hpp"

namespace mananet {

NotEnabledError::NotEnabledError(Symbol transition, std::optional<std::size_t> step)
    : Error("transition '" + transition.str() + "' is not enabled" +
            (step ? " at step " + std::to_string(*step) : std::string())),
      transition_(transition),
      step_(step) {}

Net& Net::add_place(Symbol p) {
  places_.insert(p);
  return *this;
}

Net& Net::add_transition(Symbol t, Multiset pre, Multiset post) {
  transitions_.insert_or_assign(t, Arcs{std::move(pre), std::move(post)});
  return *this;
}

const Arcs& Net::arcs(Symbol t) const {
  auto it = transitions_.find(t);
  if (it == transitions_.end()) throw UnknownSymbolError("transition", t);
  return it->second;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::UnknownPlace: return "UnknownPlace";
    case Violation::Kind::UnknownTransition: return "UnknownTransition";
    case Violation::Kind::NameClash: return "NameClash";
    case Violation::Kind::Unmapped: return "Unmapped";
    case Violation::Kind::SquareFails: return "SquareFails";
    case Violation::Kind::BadImage: return "BadImage";
    case Violation::Kind::PolicyDomain: return "PolicyDomain";
  }
  return "Unknown";
}

std::string to_string(const Violation& v) {
  std::string out = to_string(v.kind) + "(" + v.symbol.str() + ")";
  if (!v.detail.empty()) out += ": " + v.detail;
  return out;
}

std::vector<Violation> validate_net(const Net& net) {
  std::vector<Violation> out;
  for (const auto& [t, arcs] : net.transitions()) {
    if (net.has_place(t))
      out.push_back({Violation::Kind::NameClash, t, "name is both a place and a transition"});
    for (const auto* side : {&arcs.pre, &arcs.post}) {
      for (const auto& [p, n] : *side) {
        if (!net.has_place(p))
          out.push_back({Violation::Kind::UnknownPlace, p,
                         std::string("referenced by ") + (side == &arcs.pre ? "pre" : "post") +
                             " of '" + t.str() + "'"});
      }
    }
  }
  return out;
}

Multiset lift_multiset_map(const PlaceMap& g, const Multiset& m) {
  std::vector<Multiset::Entry> raw;
  raw.reserve(m.support_size());
  for (const auto& [p, n] : m) {
    auto it = g.find(p);
    if (it == g.end()) throw UnknownSymbolError("place", p);
    raw.emplace_back(it->second, n);
  }
  return Multiset::from_entries(std::move(raw));
}

Multiset lift_multiset_map(const ObjectMap& g, const Multiset& m) {
  Multiset out;
  for (const auto& [p, n] : m) {
    auto it = g.find(p);
    if (it == g.end()) throw UnknownSymbolError("place", p);
    out = sum(out, scale(n, it->second));
  }
  return out;
}

NetMorphism identity_morphism(const Net& net) {
  NetMorphism m{net, net, {}, {}};
  for (const auto& [t, arcs] : net.transitions()) m.transition_map.emplace(t, t);
  for (Symbol p : net.places()) m.place_map.emplace(p, p);
  return m;
}

NetMorphism compose(const NetMorphism& first, const NetMorphism& second) {
  NetMorphism out{first.source, second.target, {}, {}};
  for (const auto& [t, image] : first.transition_map) {
    auto it = second.transition_map.find(image);
    if (it == second.transition_map.end()) throw UnknownSymbolError("transition", image);
    out.transition_map.emplace(t, it->second);
  }
  for (const auto& [p, image] : first.place_map) {
    auto it = second.place_map.find(image);
    if (it == second.place_map.end()) throw UnknownSymbolError("place", image);
    out.place_map.emplace(p, it->second);
  }
  return out;
}

std::vector<Violation> validate_morphism(const NetMorphism& m) {
  std::vector<Violation> out;
  bool total = true;
  for (Symbol p : m.source.places()) {
    auto it = m.place_map.find(p);
    if (it == m.place_map.end()) {
      out.push_back({Violation::Kind::Unmapped, p, "place has no image"});
      total = false;
    } else if (!m.target.has_place(it->second)) {
      out.push_back({Violation::Kind::UnknownPlace, it->second, "image of place '" + p.str() + "'"});
      total = false;
    }
  }
  for (const auto& [u, arcs] : m.source.transitions()) {
    auto it = m.transition_map.find(u);
    if (it == m.transition_map.end()) {
      out.push_back({Violation::Kind::Unmapped, u, "transition has no image"});
      continue;
    }
    if (!m.target.has_transition(it->second)) {
      out.push_back(
          {Violation::Kind::UnknownTransition, it->second, "image of transition '" + u.str() + "'"});
      continue;
    }
    if (!total) continue;
    const Arcs& image = m.target.arcs(it->second);
    if (lift_multiset_map(m.place_map, arcs.pre) != image.pre)
      out.push_back({Violation::Kind::SquareFails, u, "pre"});
    if (lift_multiset_map(m.place_map, arcs.post) != image.post)
      out.push_back({Violation::Kind::SquareFails, u, "post"});
  }
  return out;
}

}  // namespace mananet
