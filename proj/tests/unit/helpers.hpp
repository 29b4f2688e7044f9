#pragma once

#include <mananet/mananet.hpp>

#include "oracle.hpp"

namespace testing_support {

using namespace mananet;

inline oracle::Bag to_bag(const Multiset& m) {
  oracle::Bag b;
  for (const auto& [s, n] : m) b[s.str()] = static_cast<long long>(n);
  return b;
}

inline oracle::Network to_network(const Net& net, const ManaPolicy* policy = nullptr) {
  oracle::Network out;
  for (const auto& [u, arcs] : net.transitions()) {
    oracle::Reaction r{to_bag(arcs.pre), to_bag(arcs.post), 1, {}};
    if (policy) {
      r.consume = static_cast<long long>(policy->at(u).consume);
      r.produce = to_bag(policy->at(u).produce);
    }
    out.emplace(u.str(), r);
  }
  return out;
}

inline Net atp_net() {
  Net n;
  for (const char* p : {"ATP", "H2O", "ADP", "Pi"}) n.add_place(p);
  n.add_transition("hydrolysis", {{"ATP", 1}, {"H2O", 1}}, {{"ADP", 1}, {"Pi", 1}});
  return n;
}

inline Net enzyme_net() {
  Net n;
  for (const char* p : {"A", "B", "C"}) n.add_place(p);
  n.add_transition("u", {{"A", 1}, {"B", 1}}, {{"C", 1}});
  return n;
}

/// The three-transition net of the execution diagram: t, v, u.
inline Net execution_figure_net() {
  Net n;
  for (const char* p : {"p1", "p2", "p3", "p4"}) n.add_place(p);
  n.add_transition("t", {{"p1", 1}}, {{"p2", 1}});
  n.add_transition("v", {{"p2", 1}}, {{"p3", 1}, {"p4", 1}});
  n.add_transition("u", {{"p3", 1}}, {{"p4", 1}});
  return n;
}

/// The four-transition net with cross-feeding mana.
inline Net generalized_net() {
  Net n;
  for (const char* p : {"p1", "p2", "p3", "p4"}) n.add_place(p);
  n.add_transition("u1", {{"p1", 1}}, {{"p2", 1}, {"p3", 1}});
  n.add_transition("u2", {{"p2", 1}}, {{"p4", 1}});
  n.add_transition("u3", {{"p3", 1}}, {});
  n.add_transition("u4", {{"p4", 1}}, {});
  return n;
}

inline ManaPolicy generalized_policy() {
  return {{Symbol("u1"), ManaRule{0, {}}},
          {Symbol("u2"), ManaRule{2, {{"u4", 1}}}},
          {Symbol("u3"), ManaRule{1, {{"u3", 1}}}},
          {Symbol("u4"), ManaRule{1, {{"u2", 1}, {"u3", 1}}}}};
}

inline std::vector<Symbol> transition_symbols(const Net& net) {
  std::vector<Symbol> out;
  for (const auto& [u, arcs] : net.transitions()) out.push_back(u);
  return out;
}

}  // namespace testing_support
