#include "mananet/functor.hpp"

#include "mananet/error.hpp"

namespace mananet {

namespace {

std::string render_steps(const std::vector<Symbol>& steps) {
  std::string out = "[";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ",";
    out += steps[i].str();
  }
  return out + "]";
}

}  // namespace

PresentedFunctor identity_functor(const Net& net) {
  PresentedFunctor f{net, net, {}, {}};
  for (Symbol p : net.places()) f.object_map.emplace(p, Multiset::singleton(p));
  for (const auto& [u, arcs] : net.transitions()) f.morphism_map.emplace(u, Trace{arcs.pre, {u}});
  return f;
}

PresentedFunctor functor_of(const NetMorphism& m) {
  PresentedFunctor f{m.source, m.target, {}, {}};
  for (const auto& [p, image] : m.place_map) f.object_map.emplace(p, Multiset::singleton(image));
  for (const auto& [u, image] : m.transition_map)
    f.morphism_map.emplace(u, Trace{lift_multiset_map(m.place_map, m.source.pre(u)), {image}});
  return f;
}

std::vector<Violation> validate_functor(const PresentedFunctor& f) {
  std::vector<Violation> out;
  bool objects_total = true;
  for (Symbol p : f.source.places()) {
    auto it = f.object_map.find(p);
    if (it == f.object_map.end()) {
      out.push_back({Violation::Kind::Unmapped, p, "place has no image"});
      objects_total = false;
      continue;
    }
    for (const auto& [q, n] : it->second) {
      if (!f.target.has_place(q)) {
        out.push_back({Violation::Kind::UnknownPlace, q, "in image of place '" + p.str() + "'"});
        objects_total = false;
      }
    }
  }
  for (const auto& [u, arcs] : f.source.transitions()) {
    auto it = f.morphism_map.find(u);
    if (it == f.morphism_map.end()) {
      out.push_back({Violation::Kind::Unmapped, u, "transition has no image"});
      continue;
    }
    if (!objects_total) continue;
    const Trace& image = it->second;
    if (image.initial != lift_multiset_map(f.object_map, arcs.pre)) {
      out.push_back({Violation::Kind::BadImage, u, "image does not start at the image of pre"});
      continue;
    }
    try {
      if (run_trace(f.target, image) != lift_multiset_map(f.object_map, arcs.post))
        out.push_back({Violation::Kind::BadImage, u, "image does not end at the image of post"});
    } catch (const Error& e) {
      out.push_back({Violation::Kind::BadImage, u, e.what()});
    }
  }
  return out;
}

Trace apply_presented_functor(const PresentedFunctor& f, const Trace& trace) {
  Marking final_marking = run_trace(f.source, trace);
  Trace out{lift_multiset_map(f.object_map, trace.initial), {}};
  for (Symbol u : trace.steps) {
    auto it = f.morphism_map.find(u);
    if (it == f.morphism_map.end()) throw UnknownSymbolError("transition", u);
    out.steps.insert(out.steps.end(), it->second.steps.begin(), it->second.steps.end());
  }
  Marking image_final;
  try {
    image_final = run_trace(f.target, out);
  } catch (const NotEnabledError& e) {
    throw Error(std::string("functor image does not replay: ") + e.what());
  }
  if (image_final != lift_multiset_map(f.object_map, final_marking))
    throw Error("functor image ends at " + to_string(image_final) + ", expected " +
                to_string(lift_multiset_map(f.object_map, final_marking)));
  return out;
}

PresentedFunctor compose(const PresentedFunctor& first, const PresentedFunctor& second) {
  PresentedFunctor out{first.source, second.target, {}, {}};
  for (const auto& [p, image] : first.object_map)
    out.object_map.emplace(p, lift_multiset_map(second.object_map, image));
  for (const auto& [u, image] : first.morphism_map)
    out.morphism_map.emplace(u, apply_presented_functor(second, image));
  return out;
}

FunctorComparison compare_functors(const PresentedFunctor& a, const PresentedFunctor& b) {
  auto differ = [](std::string why) {
    return FunctorComparison{TraceEquivalence::NotEquivalent, std::move(why)};
  };
  if (a.source != b.source) return differ("source nets differ");
  if (a.target != b.target) return differ("target nets differ");
  for (Symbol p : a.source.places()) {
    auto ia = a.object_map.find(p);
    auto ib = b.object_map.find(p);
    Multiset ma = ia == a.object_map.end() ? Multiset{} : ia->second;
    Multiset mb = ib == b.object_map.end() ? Multiset{} : ib->second;
    if (ia == a.object_map.end() || ib == b.object_map.end())
      return differ("place '" + p.str() + "' unmapped");
    if (ma != mb)
      return differ("place '" + p.str() + "' maps to " + to_string(ma) + " vs " + to_string(mb));
  }
  for (const auto& [u, arcs] : a.source.transitions()) {
    auto ia = a.morphism_map.find(u);
    auto ib = b.morphism_map.find(u);
    if (ia == a.morphism_map.end() || ib == b.morphism_map.end())
      return differ("transition '" + u.str() + "' unmapped");
    switch (trace_equivalent(a.target, ia->second, ib->second)) {
      case TraceEquivalence::Equivalent:
        break;
      case TraceEquivalence::NotEquivalent:
        return differ("transition '" + u.str() + "' maps to " + render_steps(ia->second.steps) +
                      " vs " + render_steps(ib->second.steps));
      case TraceEquivalence::Inconclusive:
        return {TraceEquivalence::Inconclusive,
                "transition '" + u.str() + "': image comparison inconclusive"};
    }
  }
  return {};
}

}  // namespace mananet
