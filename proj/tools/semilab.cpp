#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semilab/cli/commands.hpp"

using namespace semilab;

namespace {

struct VerifyFlags {
  std::string config;
  std::string instance, inequality, dist, engine, orientation, z0, z1, out, format;
  std::size_t n = 0;
  std::uint64_t budget = 0, seed = 0, samples = 0;
  std::size_t workers = 0;
  std::vector<std::pair<std::string, std::string>> params;  // flag name, param key
  std::vector<std::string> values;
};

const std::vector<std::pair<std::string, std::string>> kParamFlags{
    {"--t", "t"},         {"--s", "s"},       {"--K", "K"},         {"--k", "k"},
    {"--n-i", "n_i"},     {"--alpha", "alpha"}, {"--beta", "beta"}, {"--m", "m"},
    {"--a", "a"},         {"--b", "b"},       {"--variant", "variant"}, {"--p", "p"}};

RunConfig assemble(const CLI::App& cmd, const VerifyFlags& f) {
  RunConfig config;
  if (!f.config.empty()) config = config_from_json(load_json_file(f.config));
  auto given = [&](const char* name) { return cmd.count(name) > 0; };
  if (given("--instance")) config.instance = f.instance;
  if (given("--inequality")) config.inequality = f.inequality;
  if (given("--dist")) config.dists = f.dist;
  if (given("--n")) config.n = f.n;
  if (given("--orientation")) config.orientation = parse_orientation(f.orientation);
  if (given("--z0")) config.z0 = f.z0;
  if (given("--z1")) config.z1 = f.z1;
  if (given("--out")) config.out = f.out;
  if (given("--format")) config.format = f.format;
  if (given("--parallelism")) config.workers = f.workers;
  for (std::size_t i = 0; i < kParamFlags.size(); ++i) {
    if (given(kParamFlags[i].first.c_str())) set_param(config, kParamFlags[i].second, f.values[i]);
  }
  if (given("--strengthened")) config.params["strengthened"] = true;

  std::string type = engine_type(config.engine);
  if (given("--engine")) type = f.engine;
  if (type == "exact") {
    ExactEngine e = is_exact(config.engine) ? std::get<ExactEngine>(config.engine) : ExactEngine{};
    if (given("--budget")) e.budget = f.budget;
    config.engine = e;
  } else if (type == "mc") {
    MonteCarloEngine e =
        is_exact(config.engine) ? MonteCarloEngine{} : std::get<MonteCarloEngine>(config.engine);
    if (given("--seed")) e.seed = f.seed;
    if (given("--samples")) e.samples = f.samples;
    config.engine = e;
  } else {
    throw InvalidArgument("engine must be exact or mc");
  }
  if (config.instance.empty()) throw InvalidArgument("--instance is required");
  if (config.inequality.empty()) throw InvalidArgument("--inequality is required");
  if (config.dists.empty()) throw InvalidArgument("--dist is required");
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric semigroup inequality laboratory"};
  app.require_subcommand(1);

  auto* instances = app.add_subcommand("instances", "Built-in instance catalog");
  instances->require_subcommand(1);
  auto* list = instances->add_subcommand("list", "List instances with their annotations");
  std::string show_name;
  auto* show = instances->add_subcommand("show", "Describe one instance");
  show->add_option("name", show_name, "Instance name")->required();

  InvarianceArgs inv;
  bool exhaustive = false;
  std::int64_t bound = 5;
  std::uint64_t inv_samples = 10'000, inv_seed = 0;
  double tol = 0.0;
  auto* invariance = app.add_subcommand("invariance", "Check an invariance property");
  invariance->add_option("--instance", inv.instance)->required();
  invariance->add_option("--kind", inv.kind, "left, right, bi, strong-left, strong-right")->required();
  invariance->add_flag("--exhaustive", exhaustive, "Scan every tuple of the slice");
  invariance->add_option("--bound", bound, "Slice bound for --exhaustive");
  invariance->add_option("--samples", inv_samples);
  invariance->add_option("--seed", inv_seed);
  invariance->add_option("--tol", tol);
  invariance->add_option("--format", inv.format, "text or json");

  VerifyFlags vf;
  vf.values.resize(kParamFlags.size());
  auto* verify = app.add_subcommand("verify", "Check one inequality and emit its report");
  verify->add_option("--config", vf.config, "JSON config or report to re-run");
  verify->add_option("--instance", vf.instance);
  verify->add_option("--inequality", vf.inequality);
  verify->add_option("--dist", vf.dist, "codec:weight,... per variable, ';' between variables");
  verify->add_option("--n", vf.n, "Replicate a single law n times");
  for (std::size_t i = 0; i < kParamFlags.size(); ++i) {
    verify->add_option(kParamFlags[i].first, vf.values[i]);
  }
  verify->add_flag("--strengthened");
  verify->add_option("--engine", vf.engine, "exact or mc");
  verify->add_option("--budget", vf.budget);
  verify->add_option("--seed", vf.seed);
  verify->add_option("--samples", vf.samples);
  verify->add_option("--orientation", vf.orientation, "left or right");
  verify->add_option("--z0", vf.z0);
  verify->add_option("--z1", vf.z1);
  verify->add_option("--out", vf.out);
  verify->add_option("--format", vf.format, "json or csv");
  verify->add_option("--parallelism", vf.workers);

  SuiteArgs suite_args;
  std::string suite_out;
  auto* suite = app.add_subcommand("suite", "Run the acceptance criteria");
  suite->add_option("--seed", suite_args.seed);
  suite->add_option("--out", suite_out);
  suite->add_option("--parallelism", suite_args.workers);
  suite->add_option("--criterion", suite_args.criteria, "Run only these criteria");

  EmbedArgs embed_args;
  auto* embed = app.add_subcommand("embed", "Adjoin an identity");
  embed->add_option("--instance", embed_args.instance)->required();
  embed->add_option("--seed", embed_args.seed);
  embed->add_option("--samples", embed_args.samples, "Preflight sample count");

  StressArgs stress_args;
  auto* stress = app.add_subcommand("stress", "Random search for violations");
  stress->add_option("--instance", stress_args.instance)->required();
  stress->add_option("--inequality", stress_args.checker, "Battery checker name")->required();
  stress->add_option("--seed", stress_args.seed);
  stress->add_option("--trials", stress_args.trials);
  stress->add_option("--parallelism", stress_args.workers);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (*list) return cmd_instances_list(std::cout);
  if (*show) return cmd_instances_show(show_name, std::cout, std::cerr);
  if (*invariance) {
    if (exhaustive) {
      inv.mode = Exhaustive{bound};
    } else {
      inv.mode = Sampled{inv_samples, inv_seed};
    }
    if (invariance->count("--tol")) inv.tolerance = tol;
    return cmd_invariance(inv, std::cout, std::cerr);
  }
  if (*verify) {
    RunConfig config;
    try {
      config = assemble(*verify, vf);
    } catch (const IoError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitIo;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitConfig;
    }
    return cmd_verify(config, std::cout, std::cerr);
  }
  if (*suite) {
    if (!suite_out.empty()) suite_args.out = suite_out;
    return cmd_suite(suite_args, std::cout, std::cerr);
  }
  if (*embed) return cmd_embed(embed_args, std::cout, std::cerr);
  if (*stress) return cmd_stress(stress_args, std::cout, std::cerr);
  return kExitConfig;
}
