// Copyright 2026 The Authors.
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

#include "prophet/cli.h"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "prophet/errors.h"
#include "prophet/generators.h"
#include "prophet/hardness.h"
#include "prophet/instance_io.h"

namespace prophet {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

struct Common {
  std::string instance;
  std::string alg = "dynamic";
  std::size_t trials = 100000;
  std::optional<std::uint64_t> seed;
  std::size_t budget = ExpectationOptions{}.budget;
  std::size_t mc_samples = ExpectationOptions{}.mc_samples;
  std::size_t k_samples = MatroidPricingOptions{}.k_samples;
  std::size_t grid = 100;
  int workers = 0;
  std::string out;
};

std::uint64_t resolve_seed(const Common& c, const char* env_seed) {
  if (c.seed) return *c.seed;
  if (env_seed != nullptr && *env_seed != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env_seed, &used);
      if (used == std::string(env_seed).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("SEED is not an unsigned integer: ") + env_seed);
  }
  throw UsageError("a seed is required: pass --seed or set SEED");
}

SimConfig make_config(const Common& c, std::uint64_t seed) {
  SimConfig config;
  config.trials = c.trials;
  config.seed = seed;
  config.algorithm = algorithm_from_string(c.alg);
  config.expectation.budget = c.budget;
  config.expectation.mc_samples = c.mc_samples;
  config.matroid.k_samples = c.k_samples;
  config.matroid.exact_budget = std::min(c.budget, MatroidPricingOptions{}.exact_budget);
  config.q_grid = c.grid;
  config.workers = c.workers;
  return config;
}

// Writes to --out when given, otherwise to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ValidationError("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void add_instance_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--instance", c.instance, "Instance JSON file")->required();
  cmd->add_option("--alg", c.alg, "dynamic or fta")->check(CLI::IsMember({"dynamic", "fta"}));
  cmd->add_option("--seed", c.seed, "Seed (falls back to env SEED)");
  cmd->add_option("--budget", c.budget, "Exact enumeration cap on product support size");
  cmd->add_option("--mc-samples", c.mc_samples, "Monte Carlo draws beyond the cap");
  cmd->add_option("--k-samples", c.k_samples, "Matroid price panel size");
  cmd->add_option("--out", c.out, "Write output here instead of stdout");
}

int run_simulate(const Common& c, std::ostream& out, const char* env_seed) {
  const std::uint64_t seed = resolve_seed(c, env_seed);
  const Instance inst = load_instance(c.instance);
  const RatioReport report = run_trials(inst, make_config(c, seed));
  Sink sink(c.out, out);
  sink.get() << kReportHeader << "\n" << report_csv_row(report) << "\n";
  return kExitOk;
}

int run_prices(const Common& c, std::ostream& out, const char* env_seed) {
  const std::uint64_t seed = resolve_seed(c, env_seed);
  const Instance inst = load_instance(c.instance);
  const SimConfig config = make_config(c, seed);
  const auto mech = make_mechanism(inst, config.algorithm, mechanism_options(config));
  const std::vector<double> prices = mech->posted_prices();
  Sink sink(c.out, out);
  sink.get() << "instance,kind,alg,item,price\n";
  for (std::size_t j = 0; j < prices.size(); ++j) {
    sink.get() << inst.name << "," << to_string(inst.kind) << "," << c.alg << "," << j << ","
               << num(prices[j]) << "\n";
  }
  return kExitOk;
}

int run_qcurve(const Common& c, std::ostream& out, const char* env_seed) {
  const std::uint64_t seed = resolve_seed(c, env_seed);
  const Instance inst = load_instance(c.instance);
  const SimConfig config = make_config(c, seed);
  const auto mech = make_mechanism(inst, config.algorithm, mechanism_options(config));
  const QCurve curve = track_q(*mech, config);
  Sink sink(c.out, out);
  sink.get() << "item,t,q,q_se,residual\n";
  for (std::size_t j = 0; j < curve.q.size(); ++j) {
    for (std::size_t g = 0; g < curve.grid.size(); ++g) {
      sink.get() << j << "," << num(curve.grid[g]) << "," << num(curve.q[j][g]) << ","
                 << num(curve.std_error[j][g]) << ","
                 << (curve.residual.empty() ? std::string() : num(curve.residual[g])) << "\n";
    }
  }
  return kExitOk;
}

int run_opt(const Common& c, std::ostream& out, const char* env_seed) {
  const Instance inst = load_instance(c.instance);
  const SimConfig base = make_config(c, 0);
  // Exact enumeration needs no seed; only ask for one when sampling.
  const bool exact = product_size(inst.support_sizes()) <= base.expectation.budget;
  const std::uint64_t seed = exact ? (c.seed ? *c.seed : 0) : resolve_seed(c, env_seed);
  const ExpectationEstimate opt = expected_opt(inst, base.expectation, seed);
  Sink sink(c.out, out);
  sink.get() << "instance,kind,opt_mean,opt_se,method,samples\n";
  sink.get() << inst.name << "," << to_string(inst.kind) << "," << num(opt.mean) << ","
             << num(opt.std_error) << "," << to_string(opt.method) << "," << opt.samples << "\n";
  return kExitOk;
}

struct HardnessArgs {
  std::vector<std::size_t> n{100, 1000, 10000};
  std::size_t resolution = 1000;
  std::string out;
};

int run_hardness(const HardnessArgs& h, std::ostream& out) {
  Sink sink(h.out, out);
  sink.get() << "n,best_ratio,argmax_p,bound\n";
  const double bound = 1.0 - 1.0 / std::numbers::e;
  for (std::size_t n : h.n) {
    const SweepResult r = fta_sweep(n, h.resolution);
    sink.get() << n << "," << num(r.best_ratio) << "," << num(r.argmax_p) << "," << num(bound)
               << "\n";
  }
  return kExitOk;
}

struct GenArgs {
  std::string family;
  std::size_t n = 3;
  std::size_t m = 3;
  std::size_t rank = 2;
  std::size_t blocks = 3;
  std::size_t support = 3;
  std::size_t clauses = 2;
  double max_value = 10.0;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int run_gen(const GenArgs& g, std::ostream& out, const char* env_seed) {
  Instance inst;
  if (g.family == "hard") {
    inst = hard_iid_instance(g.n);
  } else {
    Common c;
    c.seed = g.seed;
    const std::uint64_t seed = resolve_seed(c, env_seed);
    GeneratorOptions options;
    options.max_support = g.support;
    options.max_value = g.max_value;
    options.clauses = g.clauses;
    if (g.family == "single") {
      inst = random_single_item(g.n, options, seed);
    } else if (g.family == "uniform") {
      inst = random_matroid_instance(Matroid::uniform(g.n, g.rank), options, seed);
    } else if (g.family == "partition") {
      if (g.blocks == 0 || g.n % g.blocks != 0) {
        throw ValidationError("partition family needs --n divisible by --blocks");
      }
      inst = random_matroid_instance(uniform_blocks_partition(g.blocks, g.n / g.blocks, g.rank),
                                     options, seed);
    } else if (g.family == "graphic") {
      inst = random_matroid_instance(k4_graphic(), options, seed);
    } else if (g.family == "matching") {
      inst = random_matching(g.n, g.m, options, seed);
    } else {
      inst = random_xos(g.n, g.m, options, seed);
    }
  }
  if (g.out.empty()) {
    out << serialize_instance(inst);
  } else {
    save_instance(inst, g.out);
  }
  return kExitOk;
}

}  // namespace

std::string report_csv_row(const RatioReport& r) {
  std::ostringstream s;
  s << r.instance << "," << to_string(r.kind) << "," << to_string(r.algorithm) << "," << r.trials
    << "," << r.seed << "," << num(r.alg_mean) << "," << num(r.alg_std_error) << ","
    << num(r.opt.mean) << "," << num(r.opt.std_error) << "," << num(r.ratio) << ","
    << num(r.ci_lo) << "," << num(r.ci_hi);
  return s.str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const char* env_seed) {
  CLI::App app{"Posted-price mechanisms under random arrival order", "prophet"};
  app.require_subcommand(1);

  Common sim, prices, qcurve, opt;
  auto* sim_cmd = app.add_subcommand("simulate", "Estimate E[ALG] / E[OPT] by Monte Carlo");
  add_instance_flags(sim_cmd, sim);
  sim_cmd->add_option("--trials", sim.trials, "Number of trials")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--workers", sim.workers, "Worker threads (0 = all)");

  auto* prices_cmd = app.add_subcommand("prices", "Print base prices or fixed thresholds");
  add_instance_flags(prices_cmd, prices);

  auto* q_cmd = app.add_subcommand("qcurve", "Empirical unsold probabilities over time");
  add_instance_flags(q_cmd, qcurve);
  q_cmd->add_option("--trials", qcurve.trials, "Number of trials")->check(CLI::PositiveNumber);
  q_cmd->add_option("--grid", qcurve.grid, "Grid intervals")->check(CLI::PositiveNumber);
  q_cmd->add_option("--workers", qcurve.workers, "Worker threads (0 = all)");

  auto* opt_cmd = app.add_subcommand("opt", "Expected offline optimum");
  add_instance_flags(opt_cmd, opt);

  HardnessArgs hard;
  auto* hard_cmd = app.add_subcommand("hardness", "Fixed-threshold sweep on the hard iid instance");
  hard_cmd->add_option("--n", hard.n, "Buyer counts")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 40));
  hard_cmd->add_option("--resolution", hard.resolution, "Skip-probability grid size")
      ->check(CLI::Range(std::size_t{1000}, std::size_t{1} << 30));
  hard_cmd->add_option("--out", hard.out, "Write output here instead of stdout");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a random instance as JSON");
  gen_cmd->add_option("--family", gen.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"single", "uniform", "partition", "graphic", "matching", "xos", "hard"}));
  gen_cmd->add_option("--n", gen.n, "Buyers (ground size for matroids)");
  gen_cmd->add_option("--m", gen.m, "Items");
  gen_cmd->add_option("--rank", gen.rank, "Uniform rank or partition block capacity");
  gen_cmd->add_option("--blocks", gen.blocks, "Partition blocks");
  gen_cmd->add_option("--support", gen.support, "Maximum support size");
  gen_cmd->add_option("--clauses", gen.clauses, "Maximum XOS clauses");
  gen_cmd->add_option("--max-value", gen.max_value, "Values drawn from [0, max]");
  gen_cmd->add_option("--seed", gen.seed, "Seed (falls back to env SEED)");
  gen_cmd->add_option("--out", gen.out, "Write the instance here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*sim_cmd) return run_simulate(sim, out, env_seed);
    if (*prices_cmd) return run_prices(prices, out, env_seed);
    if (*q_cmd) return run_qcurve(qcurve, out, env_seed);
    if (*opt_cmd) return run_opt(opt, out, env_seed);
    if (*hard_cmd) return run_hardness(hard, out);
    if (*gen_cmd) return run_gen(gen, out, env_seed);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace prophet
