#include "mananet/mana_internal.hpp"

#include <functional>

#include "mananet/error.hpp"

namespace mananet {

ManaPolicy plain_policy(const Net& net) {
  ManaPolicy policy;
  for (const auto& [u, arcs] : net.transitions()) policy.emplace(u, ManaRule{});
  return policy;
}

bool is_plain(const ManaPolicy& policy) {
  for (const auto& [u, rule] : policy)
    if (rule != ManaRule{}) return false;
  return true;
}

std::vector<Violation> validate_policy(const Net& net, const ManaPolicy& policy) {
  std::vector<Violation> out;
  for (const auto& [u, arcs] : net.transitions())
    if (!policy.contains(u))
      out.push_back({Violation::Kind::PolicyDomain, u, "transition has no mana rule"});
  for (const auto& [u, rule] : policy) {
    if (!net.has_transition(u))
      out.push_back({Violation::Kind::UnknownTransition, u, "mana rule for undeclared transition"});
    for (const auto& [v, n] : rule.produce)
      if (!net.has_transition(v))
        out.push_back({Violation::Kind::UnknownTransition, v,
                       "produced by '" + u.str() + "' but not a transition"});
  }
  return out;
}

std::string mana_prefix(std::size_t layer) {
  return layer <= 1 ? std::string("mana:") : "mana" + std::to_string(layer) + ":";
}

Symbol mana_place_name(Symbol transition, std::size_t layer) {
  return Symbol(mana_prefix(layer) + transition.str());
}

ManaNet generalized_internal_construction(const Net& net, const ManaPolicy& policy,
                                          std::size_t layer) {
  if (auto v = validate_net(net); !v.empty())
    throw ConstructionError("invalid net: " + to_string(v.front()));
  if (auto v = validate_policy(net, policy); !v.empty())
    throw ConstructionError("invalid mana policy: " + to_string(v.front()));

  ManaNet mn{net, net, {}, policy, layer};
  for (const auto& [u, arcs] : net.transitions()) {
    Symbol place = mana_place_name(u, layer);
    if (net.has_place(place) || net.has_transition(place))
      throw ConstructionError("mana place name '" + place.str() + "' is already taken");
    mn.mana_place_of.emplace(u, place);
    mn.built.add_place(place);
  }
  for (const auto& [u, arcs] : net.transitions()) {
    const ManaRule& rule = policy.at(u);
    mn.built.add_transition(u, sum(arcs.pre, Multiset::singleton(mn.mana_place_of.at(u), rule.consume)),
                            sum(arcs.post, lift_multiset_map(mn.mana_place_of, rule.produce)));
  }
  return mn;
}

ManaNet internal_construction(const Net& net, std::size_t layer) {
  return generalized_internal_construction(net, plain_policy(net), layer);
}

PresentedFunctor counit(const ManaNet& mn) {
  PresentedFunctor f{mn.built, mn.base, {}, {}};
  for (Symbol p : mn.base.places()) f.object_map.emplace(p, Multiset::singleton(p));
  for (const auto& [u, place] : mn.mana_place_of) f.object_map.emplace(place, Multiset{});
  for (const auto& [u, arcs] : mn.base.transitions())
    f.morphism_map.emplace(u, Trace{arcs.pre, {u}});
  return f;
}

PresentedFunctor comultiplication(const ManaNet& mn) {
  if (!is_plain(mn.policy))
    throw ConstructionError("comultiplication is only defined for the plain mana policy");
  ManaNet outer = internal_construction(mn.built, mn.layer + 1);
  PresentedFunctor f{mn.built, outer.built, {}, {}};
  for (Symbol p : mn.base.places()) f.object_map.emplace(p, Multiset::singleton(p));
  for (const auto& [u, place] : mn.mana_place_of)
    f.object_map.emplace(place, sum(Multiset::singleton(place),
                                    Multiset::singleton(outer.mana_place_of.at(u))));
  for (const auto& [u, arcs] : outer.built.transitions())
    f.morphism_map.emplace(u, Trace{arcs.pre, {u}});
  return f;
}

PresentedFunctor lift_functor(const PresentedFunctor& f, std::size_t source_layer,
                              std::size_t target_layer) {
  if (auto v = validate_functor(f); !v.empty())
    throw ConstructionError("invalid functor: " + to_string(v.front()));
  ManaNet source = internal_construction(f.source, source_layer);
  ManaNet target = internal_construction(f.target, target_layer);

  PresentedFunctor lifted{source.built, target.built, f.object_map, {}};
  for (const auto& [u, image] : f.morphism_map)
    lifted.object_map.emplace(source.mana_place_of.at(u),
                              lift_multiset_map(target.mana_place_of, occurrence_multiset(image)));
  for (const auto& [u, image] : f.morphism_map)
    lifted.morphism_map.emplace(
        u, Trace{lift_multiset_map(lifted.object_map, source.built.pre(u)), image.steps});
  return lifted;
}

namespace {

constexpr const char* kComultiplicationNote =
    "comultiplication sends the mana place of u to one copy of u's mana in each of the two "
    "construction layers (inner mana:<u>, outer mana2:<u>)";

// Evaluates both sides lazily so a failing construction is reported
// against the law that needed it.
void check_equal(LawReport& report, const std::string& law,
                 const std::function<PresentedFunctor()>& lhs,
                 const std::function<PresentedFunctor()>& rhs) {
  try {
    FunctorComparison cmp = compare_functors(lhs(), rhs());
    switch (cmp.verdict) {
      case TraceEquivalence::Equivalent:
        report.add(law, LawStatus::Pass);
        break;
      case TraceEquivalence::NotEquivalent:
        report.add(law, LawStatus::Fail, cmp.discrepancy);
        break;
      case TraceEquivalence::Inconclusive:
        report.add(law, LawStatus::Inconclusive, cmp.discrepancy);
        break;
    }
  } catch (const Error& e) {
    report.add(law, LawStatus::Fail, std::string(e.what()));
  }
}

}  // namespace

LawReport check_comonad_unit_laws(const Net& net) {
  LawReport report;
  report.note = kComultiplicationNote;
  ManaNet once = internal_construction(net, 1);
  ManaNet twice = internal_construction(once.built, 2);
  PresentedFunctor delta = comultiplication(once);
  PresentedFunctor epsilon = counit(once);

  check_equal(report, "counit_left",
              [&] { return compose(delta, lift_functor(epsilon, 2, 1)); },
              [&] { return identity_functor(once.built); });
  check_equal(report, "counit_right",
              [&] { return compose(delta, counit(twice)); },
              [&] { return identity_functor(once.built); });
  check_equal(report, "coassociativity",
              [&] { return compose(delta, comultiplication(twice)); },
              [&] { return compose(delta, lift_functor(delta, 2, 3)); });
  return report;
}

LawReport check_comonad_naturality(const NetMorphism& morphism, const std::string& suffix) {
  LawReport report;
  report.note = kComultiplicationNote;
  if (auto v = validate_morphism(morphism); !v.empty()) {
    report.add("morphism_valid" + suffix, LawStatus::Fail, to_string(v.front()));
    return report;
  }
  PresentedFunctor h = functor_of(morphism);
  ManaNet source = internal_construction(morphism.source);
  ManaNet target = internal_construction(morphism.target);

  check_equal(report, "counit_naturality" + suffix,
              [&] { return compose(lift_functor(h), counit(target)); },
              [&] { return compose(counit(source), h); });
  check_equal(report,
              "comultiplication_naturality" + suffix,
              [&] { return compose(lift_functor(h), comultiplication(target)); },
              [&] { return compose(comultiplication(source), lift_functor(lift_functor(h), 2, 2)); });
  return report;
}

LawReport check_comonad_laws(const Net& net, std::span<const NetMorphism> morphisms) {
  LawReport report = check_comonad_unit_laws(net);
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    report.append(check_comonad_naturality(morphisms[i], "#" + std::to_string(i)));
  return report;
}

}  // namespace mananet
