// mananet: command-line front end for nets with mana.
//
// Every subcommand reads a net document (JSON or reaction DSL) named by its
// first positional argument and prints JSON on stdout. Diagnostics go to
// stderr. Exit status: 0 ok, 1 check failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mananet/mananet.hpp"

namespace {

using nlohmann::json;
using namespace mananet;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << contents;
}

NetDocument load(const std::string& path) { return parse_document(read_file(path)); }

NetDocument load_valid(const std::string& path) {
  NetDocument doc = load(path);
  if (auto v = validate_document(doc); !v.empty())
    throw UsageError("invalid document: " + to_string(v.front()));
  return doc;
}

ManaPolicy policy_of(const NetDocument& doc) {
  return doc.policy ? *doc.policy : plain_policy(doc.net);
}

ManaState state_of(const NetDocument& doc) {
  return {doc.marking.value_or(Marking{}), doc.pool.value_or(Multiset{})};
}

void print(const json& j) { std::cout << j.dump() << '\n'; }

struct Options {
  std::string file;
  std::string output;
  std::string transition;
  std::size_t steps = 10;
  std::optional<std::uint64_t> seed;
  std::string choice = "lex";
  bool mana = false;
  std::size_t depth = 6;
  Count max_tokens = 12;
  bool comonad = false, functor = false, laxator = false;
  std::size_t samples = 100;
  bool dot_internalize = false, dot_reach = false;
};

int cmd_validate(const Options& o) {
  NetDocument doc = load(o.file);
  auto violations = validate_document(doc);
  print({{"valid", violations.empty()}, {"violations", to_json(violations)}});
  return violations.empty() ? kOk : kCheckFailed;
}

int cmd_fire(const Options& o) {
  NetDocument doc = load_valid(o.file);
  Symbol u(o.transition);
  if (!doc.net.has_transition(u)) throw UsageError("unknown transition '" + o.transition + "'");
  if (!o.mana) {
    Marking m = doc.marking.value_or(Marking{});
    if (!enabled(doc.net, m, u)) {
      print({{"enabled", false}, {"transition", u.str()}, {"marking", to_json(m)}});
      return kCheckFailed;
    }
    print({{"enabled", true}, {"transition", u.str()}, {"marking", to_json(fire(doc.net, m, u))}});
    return kOk;
  }
  ManaPolicy policy = policy_of(doc);
  ManaState s = state_of(doc);
  try {
    ManaState next = mana_fire(doc.net, policy, s, u);
    print({{"enabled", true}, {"transition", u.str()}, {"state", to_json(next)}});
    return kOk;
  } catch (const NotManaEnabledError& e) {
    print({{"enabled", false},
           {"transition", u.str()},
           {"state", to_json(s)},
           {"compound_missing", e.compound_missing()},
           {"mana_missing", e.mana_missing()}});
    return kCheckFailed;
  }
}

int cmd_run(const Options& o) {
  NetDocument doc = load_valid(o.file);
  ManaPolicy policy = policy_of(doc);
  ManaState s = state_of(doc);
  if (!o.mana) s.pool = {};
  bool random = o.choice == "random" || o.seed.has_value();
  Rng rng(o.seed.value_or(0));

  Trace trace{s.marking, {}};
  bool deadlocked = false;
  for (std::size_t i = 0; i < o.steps; ++i) {
    std::vector<Symbol> ready;
    for (const auto& [u, arcs] : doc.net.transitions())
      if (o.mana ? mana_enabled(doc.net, policy, s, u) : enabled(doc.net, s.marking, u))
        ready.push_back(u);
    if (ready.empty()) {
      deadlocked = true;
      break;
    }
    Symbol u = random ? ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)]
                      : ready.front();
    s = o.mana ? mana_fire(doc.net, policy, s, u) : ManaState{fire(doc.net, s.marking, u), {}};
    trace.steps.push_back(u);
  }
  json out = {{"trace", to_json(trace)},
              {"final", o.mana ? to_json(s) : json{{"marking", to_json(s.marking)}}},
              {"deadlocked", deadlocked},
              {"mana", o.mana},
              {"policy", random ? "random" : "lex"}};
  if (random) out["seed"] = o.seed.value_or(0);
  print(out);
  return kOk;
}

int cmd_reach(const Options& o) {
  NetDocument doc = load_valid(o.file);
  if (o.mana)
    print(to_json(mana_reach(doc.net, policy_of(doc), state_of(doc), o.depth, o.max_tokens)));
  else
    print(to_json(reach(doc.net, doc.marking.value_or(Marking{}), o.depth, o.max_tokens)));
  return kOk;
}

int cmd_internalize(const Options& o) {
  NetDocument doc = load_valid(o.file);
  ManaNet mn = internalize(doc.net, policy_of(doc));
  NetDocument out{mn.built, std::nullopt, std::nullopt, std::nullopt};
  if (doc.marking || doc.pool) out.marking = state_to_object(mn, state_of(doc));
  write_file(o.output, emit_json(out));
  print({{"output", o.output},
         {"places", mn.built.places().size()},
         {"transitions", mn.built.transitions().size()}});
  return kOk;
}

int cmd_externalize(const Options& o) {
  NetDocument doc = load(o.file);
  if (auto v = validate_net(doc.net); !v.empty())
    throw UsageError("invalid net: " + to_string(v.front()));
  ManaNet mn;
  mn.built = doc.net;
  mn.mana_place_of = mana_labeling_by_name(doc.net);
  auto [base, policy] = externalize(mn);
  mn.base = base;
  mn.policy = policy;
  NetDocument out{base, policy, std::nullopt, std::nullopt};
  if (doc.marking) {
    ManaState s = object_to_state(mn, *doc.marking);
    out.marking = s.marking;
    out.pool = s.pool;
  }
  write_file(o.output, emit_json(out));
  print({{"output", o.output}, {"plain", is_plain(policy)}});
  return kOk;
}

int cmd_check_laws(const Options& o) {
  NetDocument doc = load_valid(o.file);
  bool all = !o.comonad && !o.functor && !o.laxator;
  std::uint64_t seed = o.seed.value_or(0);
  Rng rng(seed);
  ManaPolicy policy = policy_of(doc);
  auto initial = [&] { return doc.marking ? *doc.marking : random_marking(rng, doc.net, 3); };

  LawReport report;
  if (all || o.comonad) {
    std::vector<NetMorphism> morphisms;
    for (std::size_t i = 0; i < o.samples; ++i) morphisms.push_back(random_morphism(rng, doc.net));
    LawReport comonad = check_comonad_laws(doc.net, morphisms);
    report.note = comonad.note;
    report.append(comonad);
  }
  if (all || o.functor) {
    std::vector<Trace> traces;
    for (std::size_t i = 0; i < o.samples; ++i)
      traces.push_back(random_trace(rng, doc.net, initial(), 6));
    report.append(check_functor_laws(doc.net, policy, traces));
  }
  if (all || o.laxator) {
    std::vector<LaxatorSample> samples;
    for (std::size_t i = 0; i < o.samples; ++i) {
      Trace left = random_trace(rng, doc.net, initial(), 3);
      Trace right = random_trace(rng, doc.net, initial(), 3);
      samples.push_back({left, right, random_pool(rng, doc.net, 3), random_pool(rng, doc.net, 3)});
    }
    report.append(check_laxator_naturality(doc.net, policy, samples));
  }
  json out = to_json(report);
  out["seed"] = seed;
  out["samples"] = o.samples;
  print(out);
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_equiv(const Options& o) {
  NetDocument doc = load_valid(o.file);
  EquivalenceReport r = check_equivalence(doc.net, policy_of(doc), state_of(doc), o.depth, o.max_tokens);
  print(to_json(r));
  return r.isomorphic ? kOk : kCheckFailed;
}

int cmd_export_dot(const Options& o) {
  NetDocument doc = load_valid(o.file);
  std::string dot;
  if (o.dot_reach && o.mana)
    dot = export_dot(mana_reach(doc.net, policy_of(doc), state_of(doc), o.depth, o.max_tokens));
  else if (o.dot_reach)
    dot = export_dot(reach(doc.net, doc.marking.value_or(Marking{}), o.depth, o.max_tokens));
  else if (o.dot_internalize)
    dot = export_dot(internalize(doc.net, policy_of(doc)));
  else
    dot = export_dot(doc);
  write_file(o.output, dot);
  print({{"output", o.output}, {"bytes", dot.size()}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Petri nets with mana: simulation, constructions and law checks"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Net document (JSON or reaction DSL)")->required();
  };
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--depth", o.depth, "Exploration depth bound")->capture_default_str();
    sub->add_option("--max-tokens", o.max_tokens, "Token bound per state")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "Check net, policy and state invariants");
  add_file(validate);

  auto* fire_cmd = app.add_subcommand("fire", "Fire one transition from the document's state");
  add_file(fire_cmd);
  fire_cmd->add_option("--transition", o.transition, "Transition to fire")->required();
  fire_cmd->add_flag("--mana", o.mana, "Respect mana pools");

  auto* run = app.add_subcommand("run", "Fire transitions until deadlock or the step limit");
  add_file(run);
  run->add_option("--steps", o.steps, "Maximum number of firings")->capture_default_str();
  auto* seed_opt = run->add_option("--seed", o.seed, "Choose among enabled transitions at random");
  run->add_option("--policy", o.choice, "Choice policy")
      ->check(CLI::IsMember({"lex", "random"}))
      ->excludes(seed_opt);
  run->add_flag("--mana", o.mana, "Respect mana pools");

  auto* reach_cmd = app.add_subcommand("reach", "Bounded reachability graph");
  add_file(reach_cmd);
  add_bounds(reach_cmd);
  reach_cmd->add_flag("--mana", o.mana, "Explore (marking, pool) states");

  auto* internalize_cmd = app.add_subcommand("internalize", "Write the mana-built net");
  add_file(internalize_cmd);
  internalize_cmd->add_option("-o,--output", o.output, "Output file")->required();

  auto* externalize_cmd =
      app.add_subcommand("externalize", "Recover base net and mana policy from a built net");
  add_file(externalize_cmd);
  externalize_cmd->add_option("-o,--output", o.output, "Output file")->required();

  auto* laws = app.add_subcommand("check-laws", "Check comonad, functor and laxator laws");
  add_file(laws);
  laws->add_flag("--comonad", o.comonad, "Comonad laws of the plain construction");
  laws->add_flag("--functor", o.functor, "Functor laws of the external semantics");
  laws->add_flag("--laxator", o.laxator, "Laxator naturality");
  laws->add_option("--samples", o.samples, "Random samples per law")->capture_default_str();
  laws->add_option("--seed", o.seed, "Sampling seed (default 0)");

  auto* equiv = app.add_subcommand("equiv", "Check internal/external equivalence on a bounded window");
  add_file(equiv);
  add_bounds(equiv);

  auto* dot = app.add_subcommand("export-dot", "Write a Graphviz rendering");
  add_file(dot);
  dot->add_option("-o,--output", o.output, "Output file")->required();
  dot->add_flag("--internalize", o.dot_internalize, "Render the mana-built net");
  dot->add_flag("--reach", o.dot_reach, "Render the reachability graph");
  dot->add_flag("--mana", o.mana, "With --reach, explore (marking, pool) states");
  add_bounds(dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*fire_cmd) return cmd_fire(o);
    if (*run) return cmd_run(o);
    if (*reach_cmd) return cmd_reach(o);
    if (*internalize_cmd) return cmd_internalize(o);
    if (*externalize_cmd) return cmd_externalize(o);
    if (*laws) return cmd_check_laws(o);
    if (*equiv) return cmd_equiv(o);
    if (*dot) return cmd_export_dot(o);
  } catch (const UsageError& e) {
    std::cerr << "mananet: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "mananet: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
