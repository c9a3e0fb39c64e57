// Copyright 2026 The hoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hoq: command-line front end.
//
// Exit codes: 0 pass, 1 fail, 2 usage / I/O / validation error, 3 undecided.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hoq/config.hpp"
#include "hoq/errors.hpp"
#include "hoq/io.hpp"
#include "hoq/membership.hpp"
#include "hoq/network.hpp"
#include "hoq/processes.hpp"
#include "hoq/sectors.hpp"

namespace {

using namespace hoq;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kExitUndecided = 3;

struct Globals {
  std::string config_path;
  std::string registry_inline;
  bool json = false;
  std::uint64_t seed = 0;
  std::string hierarchy = "bistoch";
  std::string output;
};

struct Context {
  Config cfg;
  Hierarchy hierarchy = Hierarchy::kBistoch;
};

Context make_context(const Globals& g) {
  Context ctx;
  std::string path = g.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("HOQ_CONFIG"); env != nullptr) path = env;
  }
  if (!path.empty()) ctx.cfg = load_config(path);
  if (!g.registry_inline.empty()) {
    SystemRegistry extra = SystemRegistry::parse_inline(g.registry_inline);
    for (const auto& [label, dim] : extra.entries()) ctx.cfg.registry.add(label, dim);
  }
  ctx.hierarchy = parse_hierarchy(g.hierarchy);
  return ctx;
}

void emit_text(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
  } else {
    write_file(g.output, text);
  }
}

void emit_json(const Globals& g, const Json& j) { emit_text(g, j.dump(2) + "\n"); }

// Named shortcuts for the process types: "time-flip", "lc", "bspN".
std::string resolve_type(const std::string& s, SystemRegistry& reg) {
  if (s == "time-flip") return time_flip_type();
  if (s == "lc") return lc_type();
  if (s.size() > 3 && s.rfind("bsp", 0) == 0 &&
      s.find_first_not_of("0123456789", 3) == std::string::npos) {
    for (const char* l : {"P", "F"}) {
      if (!reg.contains(l)) reg.add(l, 1);
    }
    return bsp_type(std::stoi(s.substr(3)));
  }
  return s;
}

// Adds the operator's factors to the registry and brings the operator onto
// `systems`: missing one-dimensional factors are inserted, extra
// one-dimensional factors traced out.
LabeledOperator fit_to(const LabeledOperator& op, const std::vector<Factor>& systems) {
  LabeledOperator out = op;
  std::set<std::string> wanted, extra;
  for (const auto& f : systems) wanted.insert(f.label);
  for (const auto& f : op.factors()) {
    if (!wanted.count(f.label) && f.dim == 1) extra.insert(f.label);
  }
  if (!extra.empty()) out = partial_trace(out, extra);
  for (const auto& f : systems) {
    if (!out.has(f.label) && f.dim == 1) {
      out = embed_identity(out, f, static_cast<int>(out.factors().size()));
    }
  }
  return out;
}

void register_factors(SystemRegistry& reg, const std::vector<Factor>& fs) {
  for (const auto& f : fs) {
    if (f.label != kTrivialLabel) reg.add(f.label, f.dim);
  }
}

NetworkSpec load_spec(const std::string& arg) {
  Json j;
  const std::string text = (!arg.empty() && arg.front() == '{') ? arg : read_file(arg);
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("network spec is not valid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("spec")) return spec_from_json(j["spec"]);
  return spec_from_json(j);
}

// -----------------------------------------------------------------------------

int cmd_lambda(const Globals& g, const std::string& type_text) {
  Context ctx = make_context(g);
  const TypeExpr t = parse_type(resolve_type(type_text, ctx.cfg.registry), ctx.cfg.registry);
  const Characterization c = characterize(t, ctx.cfg.registry, ctx.hierarchy, ctx.cfg.limits.recursion);
  if (g.json) {
    emit_json(g, {{"type", print_type(t)},
                  {"hierarchy", hierarchy_name(ctx.hierarchy)},
                  {"lambda", c.lambda.str()},
                  {"lambda_value", c.lambda.to_double()}});
  } else {
    emit_text(g, c.lambda.str() + "\n");
  }
  return kExitPass;
}

int cmd_delta(const Globals& g, const std::string& type_text) {
  Context ctx = make_context(g);
  const TypeExpr t = parse_type(resolve_type(type_text, ctx.cfg.registry), ctx.cfg.registry);
  const Characterization c = characterize(t, ctx.cfg.registry, ctx.hierarchy, ctx.cfg.limits.recursion);
  std::vector<std::string> pats;
  for (Pattern p : c.delta.patterns()) pats.push_back(c.delta.pattern_string(p));
  if (g.json) {
    emit_json(g, {{"type", print_type(t)},
                  {"hierarchy", hierarchy_name(ctx.hierarchy)},
                  {"systems", labels_of(c.systems)},
                  {"lambda", c.lambda.str()},
                  {"patterns", pats}});
  } else {
    std::string out;
    for (const auto& p : pats) out += p + "\n";
    emit_text(g, out);
  }
  return kExitPass;
}

struct CheckArgs {
  std::vector<std::string> positional;
  std::string network_spec;
  bool admissible = false;
};

int cmd_check(const Globals& g, const CheckArgs& a) {
  Context ctx = make_context(g);
  if (a.positional.empty() || a.positional.size() > 2) {
    throw ConfigError("check expects [TYPE] FILE");
  }
  const std::string file = a.positional.back();
  OperatorFile f = read_operator(file);
  SystemRegistry& reg = ctx.cfg.registry;
  register_factors(reg, f.op.factors());

  if (!a.network_spec.empty()) {
    if (a.admissible) throw ConfigError("--admissible cannot be combined with --network-spec");
    NetworkSpec spec = load_spec(a.network_spec);
    const Characterization c = network_characterization(spec, reg);
    CheckReport r = check_characterization(fit_to(f.op, c.systems), c, ctx.cfg.tol,
                                           "network of " + std::to_string(spec.slot_types.size()) +
                                               " slots");
    if (g.json) emit_json(g, report_to_json(r)); else emit_text(g, report_to_text(r));
    return r.pass ? kExitPass : kExitFail;
  }

  std::string type_text;
  if (a.positional.size() == 2) {
    type_text = a.positional.front();
  } else if (f.type) {
    type_text = *f.type;
  } else {
    throw ConfigError("no type given and '" + file + "' carries none");
  }
  const TypeExpr t = parse_type(resolve_type(type_text, reg), reg);
  const Characterization c = characterize(t, reg, ctx.hierarchy, ctx.cfg.limits.recursion);
  const LabeledOperator op = fit_to(f.op, c.systems);

  if (a.admissible) {
    AdmissibilityOptions opt;
    opt.tol = ctx.cfg.tol;
    opt.max_iter = ctx.cfg.limits.max_iter;
    AdmissibilityResult r = is_admissible(op, t, reg, ctx.hierarchy, opt);
    if (g.json) {
      emit_json(g, admissibility_to_json(r));
    } else {
      emit_text(g, std::string(admissibility_name(r.verdict)) + "  " + r.reason + "\n");
    }
    switch (r.verdict) {
      case Admissibility::kFeasible: return kExitPass;
      case Admissibility::kNotAdmissible: return kExitFail;
      case Admissibility::kUndecided: return kExitUndecided;
    }
  }
  CheckReport r = check_characterization(op, c, ctx.cfg.tol, print_type(t), ctx.hierarchy);
  if (g.json) emit_json(g, report_to_json(r)); else emit_text(g, report_to_text(r));
  return r.pass ? kExitPass : kExitFail;
}

int cmd_classify(const Globals& g, const std::vector<std::string>& args) {
  Context ctx = make_context(g);
  if (args.empty() || args.size() > 2) throw ConfigError("classify expects [TYPE] FILE");
  OperatorFile f = read_operator(args.back());
  SystemRegistry& reg = ctx.cfg.registry;
  register_factors(reg, f.op.factors());
  std::string type_text = args.size() == 2 ? args.front() : f.type.value_or("");
  if (type_text.empty()) throw ConfigError("no type given and the file carries none");
  const TypeExpr t = parse_type(resolve_type(type_text, reg), reg);
  const Characterization c = characterize(t, reg, Hierarchy::kBistoch, ctx.cfg.limits.recursion);
  Classification cl = classify(fit_to(f.op, c.systems), t, reg, ctx.cfg.tol);
  if (g.json) emit_json(g, classification_to_json(cl)); else emit_text(g, classification_to_text(cl));
  return cl.verdict == ClassVerdict::kNeither ? kExitFail : kExitPass;
}

struct MakeArgs {
  std::string process;
  int d = 2;
  int n = 2;
  int x = 0;
  int y = 1;
  int k = 2;
  int tail_in = 1;
  int tail_out = 1;
};

int cmd_make(const Globals& g, const MakeArgs& a) {
  Context ctx = make_context(g);
  LabeledOperator op;
  std::string type;
  auto canonical = [&](const LabeledOperator& r) {
    SystemRegistry reg = registry_of(r);
    return align_to(r, characterize(parse_type(type, reg), reg, Hierarchy::kBistoch).systems);
  };
  if (a.process == "time-flip") {
    type = time_flip_type();
    op = canonical(merge_target_control(time_flip_choi(a.d)));
  } else if (a.process == "n-time-flip") {
    LabeledOperator r = merge_target_control(n_time_flip_choi(a.n, a.d, ctx.cfg.limits.max_dim));
    std::vector<std::string> order{"P"};
    for (int i = 1; i <= a.n; ++i) {
      order.push_back("A" + std::to_string(i));
      order.push_back("B" + std::to_string(i));
    }
    order.push_back("F");
    op = permute_systems(r, order);
  } else if (a.process == "flip-switch") {
    type = bsp_type(2);
    op = canonical(merge_target_control(flippable_switch_choi(a.d)));
  } else if (a.process == "lc23") {
    type = lc_type();
    op = canonical(lc_23_process(a.n));
  } else if (a.process == "lc22") {
    type = lc_type();
    op = canonical(lc_22_process(a.d, a.x, a.y));
  } else if (a.process == "random-bistoch") {
    op = random_bistochastic_channel(a.d, a.tail_in, a.tail_out, a.k, g.seed);
    type = print_type(TypeExpr::bistoch("A", a.tail_in > 1 ? std::vector<std::string>{"E0"}
                                                           : std::vector<std::string>{},
                                        "B", a.tail_out > 1 ? std::vector<std::string>{"E1"}
                                                            : std::vector<std::string>{}));
    op = canonical(op);
  } else {
    throw ConfigError("unknown process '" + a.process + "'");
  }
  if (op.dim() > ctx.cfg.limits.max_dim) {
    throw SizeLimit("operator dimension " + std::to_string(op.dim()) + " exceeds limit " +
                    std::to_string(ctx.cfg.limits.max_dim));
  }
  emit_text(g, operator_to_json(op, type).dump() + "\n");
  return kExitPass;
}

int cmd_compose(const Globals& g, const std::string& bundle_path) {
  Context ctx = make_context(g);
  const std::string text = read_file(bundle_path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("bundle is not valid JSON: ") + e.what());
  }
  Bundle b = bundle_from_json(j);
  for (const auto& blk : b.blocks) register_factors(ctx.cfg.registry, blk.factors());
  LabeledOperator r = compose_network(b.blocks, b.spec, ctx.cfg.registry, ctx.cfg.tol);
  emit_text(g, operator_to_json(r).dump() + "\n");
  return kExitPass;
}

int cmd_decompose(const Globals& g, const std::string& file, const std::string& spec_arg,
                  double rank_tol) {
  Context ctx = make_context(g);
  if (spec_arg.empty()) throw ConfigError("decompose needs --network-spec");
  OperatorFile f = read_operator(file);
  NetworkSpec spec = load_spec(spec_arg);
  register_factors(ctx.cfg.registry, f.op.factors());
  DecomposeOptions opt;
  opt.tol = ctx.cfg.tol;
  opt.rank_tol = rank_tol;
  NetworkDecomposition d = decompose_network(f.op, spec, ctx.cfg.registry, opt);
  emit_text(g, bundle_to_json({d.blocks, d.spec}).dump() + "\n");
  return kExitPass;
}

int cmd_apply_flip(const Globals& g, const std::string& channel, const std::string& rho,
                   const std::string& omega) {
  make_context(g);
  LabeledOperator out = time_flip_apply(read_operator(channel).op, read_operator(rho).op,
                                        read_operator(omega).op);
  emit_text(g, operator_to_json(out).dump() + "\n");
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic higher-order quantum maps: characterizations, checks, processes"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--config", g.config_path, "Key-value config file (default: $HOQ_CONFIG)");
  app.add_option("--registry", g.registry_inline, "Inline registry, e.g. A=2,B=2,P=4,F=4");
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--seed", g.seed, "Seed for random constructions");
  app.add_option("--hierarchy", g.hierarchy, "bistoch or standard")
      ->check(CLI::IsMember({"bistoch", "standard", "bistochastic", "ordinary"},
                            CLI::ignore_case));
  app.add_option("-o,--output", g.output, "Write the result to a file (.gz compresses)");

  int rc = kExitPass;
  std::string type_text;

  auto* lambda = app.add_subcommand("lambda", "Identity coefficient of deterministic events");
  lambda->add_option("type", type_text, "Type expression")->required();
  lambda->callback([&] { rc = cmd_lambda(g, type_text); });

  auto* delta = app.add_subcommand("delta", "Pattern list of the traceless part");
  delta->add_option("type", type_text, "Type expression")->required();
  delta->callback([&] { rc = cmd_delta(g, type_text); });

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Check an operator file against a type or network");
  check->add_option("args", check_args.positional, "[TYPE] FILE")->required()->expected(1, 2);
  check->add_option("--network-spec", check_args.network_spec,
                    "Network spec JSON file or inline object");
  check->add_flag("--admissible", check_args.admissible,
                  "Decide admissibility instead of determinism");
  check->callback([&] { rc = cmd_check(g, check_args); });

  std::vector<std::string> classify_args;
  auto* cls = app.add_subcommand("classify", "Bistochastic vs standard classification");
  cls->add_option("args", classify_args, "[TYPE] FILE")->required()->expected(1, 2);
  cls->callback([&] { rc = cmd_classify(g, classify_args); });

  MakeArgs make_args;
  auto* make = app.add_subcommand("make", "Construct a process operator");
  make->add_option("process", make_args.process,
                   "time-flip | n-time-flip | flip-switch | lc23 | lc22 | random-bistoch")
      ->required()
      ->check(CLI::IsMember(
          {"time-flip", "n-time-flip", "flip-switch", "lc23", "lc22", "random-bistoch"}));
  make->add_option("--d", make_args.d, "Local dimension")->check(CLI::Range(1, 64));
  make->add_option("--n", make_args.n, "Levels (lc23) or number of flips")->check(CLI::Range(1, 16));
  make->add_option("--x", make_args.x, "First level (lc22)");
  make->add_option("--y", make_args.y, "Second level (lc22)");
  make->add_option("--k", make_args.k, "Mixture size (random-bistoch)")->check(CLI::Range(1, 64));
  make->add_option("--tail-in", make_args.tail_in, "Input tail dimension")->check(CLI::Range(1, 64));
  make->add_option("--tail-out", make_args.tail_out, "Output tail dimension")
      ->check(CLI::Range(1, 64));
  make->callback([&] { rc = cmd_make(g, make_args); });

  std::string bundle_path;
  auto* compose = app.add_subcommand("compose", "Link a bundle of blocks into one network");
  compose->add_option("bundle", bundle_path, "Bundle JSON")->required();
  compose->callback([&] { rc = cmd_compose(g, bundle_path); });

  std::string decomp_file, decomp_spec;
  double rank_tol = 1e-9;
  auto* decompose = app.add_subcommand("decompose", "Split a network operator into blocks");
  decompose->add_option("file", decomp_file, "Operator JSON")->required();
  decompose->add_option("--network-spec", decomp_spec, "Network spec JSON file or inline object")
      ->required();
  decompose->add_option("--rank-tol", rank_tol, "Relative support threshold");
  decompose->callback([&] { rc = cmd_decompose(g, decomp_file, decomp_spec, rank_tol); });

  std::string ch, rho, omega;
  auto* flip = app.add_subcommand("apply-flip", "Apply the time flip to a channel and states");
  flip->add_option("channel", ch, "Channel Choi operator (input factor first)")->required();
  flip->add_option("rho", rho, "Target state")->required();
  flip->add_option("omega", omega, "Control qubit state")->required();
  flip->callback([&] { rc = cmd_apply_flip(g, ch, rho, omega); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  } catch (const hoq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return rc;
}
