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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Runs under ctest as a single test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "prophet/cli.h"
#include "prophet/config_lp.h"
#include "prophet/generators.h"
#include "prophet/hardness.h"
#include "prophet/matroid.h"
#include "prophet/offline.h"
#include "prophet/online.h"
#include "prophet/pricing.h"
#include "prophet/simulation.h"

namespace prophet {
namespace {

const double kBound = 1.0 - 1.0 / std::numbers::e;

struct Totals {
  std::size_t trials = 0;
  std::size_t accounting = 0;
  std::size_t feasibility = 0;
};
Totals g_totals;

RatioReport run(const Instance& inst, Algorithm alg, std::size_t trials, std::uint64_t seed) {
  SimConfig config;
  config.trials = trials;
  config.seed = seed;
  config.algorithm = alg;
  const RatioReport r = run_trials(inst, config);
  g_totals.trials += r.summary.trials;
  g_totals.accounting += r.summary.accounting_violations;
  g_totals.feasibility += r.summary.feasibility_violations;
  return r;
}

class Report {
 public:
  void add(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s [%d] %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    failures_ += pass ? 0 : 1;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// Shared by the dynamic and fixed-threshold single-item criteria.
std::vector<Instance> single_item_suite() {
  const std::size_t sizes[] = {2, 5, 10};
  GeneratorOptions opts;
  opts.max_support = 5;
  opts.max_value = 10.0;
  std::vector<Instance> suite;
  for (std::uint64_t k = 0; k < 20; ++k) suite.push_back(random_single_item(sizes[k % 3], opts, 1000 + k));
  return suite;
}

void criterion_single_dynamic(Report& out) {
  bool ok = true;
  double worst = 1e9;
  std::string worst_name;
  for (const Instance& inst : single_item_suite()) {
    const RatioReport r = run(inst, Algorithm::kDynamic, 200000, 11);
    const double slack = r.ratio - (0.632 - (4.0 * r.ratio_std_error + 0.003));
    if (slack < worst) {
      worst = slack;
      worst_name = inst.name + fmt(" ratio %.4f se %.4f", r.ratio, r.ratio_std_error);
    }
    ok &= slack >= 0.0;
  }
  out.add(1, "single-item dynamic prices", ok,
          fmt("20 instances x 200000 trials; tightest %s (margin %.4f)", worst_name.c_str(), worst));
}

void criterion_matroid(Report& out) {
  GeneratorOptions opts;
  opts.max_support = 3;
  const std::vector<Instance> suite{
      random_matroid_instance(Matroid::uniform(6, 3), opts, 21),
      random_matroid_instance(uniform_blocks_partition(3, 2, 1), opts, 22),
      random_matroid_instance(k4_graphic(), opts, 23)};
  const char* labels[] = {"uniform(6,3)", "partition 3x1", "graphic K4"};
  bool ok = true;
  std::string detail;
  for (std::size_t k = 0; k < suite.size(); ++k) {
    const RatioReport r = run(suite[k], Algorithm::kDynamic, 100000, 12);
    ok &= r.ratio >= kBound - 0.02;
    detail += fmt("%s %.4f; ", labels[k], r.ratio);
  }
  out.add(2, "matroid dynamic prices", ok, detail + fmt("threshold %.4f", kBound - 0.02));
}

void criterion_matching(Report& out) {
  bool ok = true;
  double worst = 1e9;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::uint64_t s = 0; s < 3; ++s) {
      const RatioReport r = run(random_matching(n, n, {}, 300 + 10 * n + s), Algorithm::kDynamic, 100000, 13);
      ok &= r.opt.method == EstimateMethod::kExact && r.ratio >= kBound - 0.02;
      worst = std::min(worst, r.ratio);
    }
  }
  out.add(3, "matching dynamic prices", ok,
          fmt("n = m in 2..6, 3 instances each, 100000 trials; min ratio %.4f vs %.4f", worst,
              kBound - 0.02));
}

void criterion_xos(Report& out) {
  GeneratorOptions opts;
  opts.max_support = 3;
  opts.clauses = 3;
  const std::pair<std::size_t, std::size_t> shapes[] = {{2, 2}, {2, 5}, {3, 3}, {3, 4}, {4, 4}, {4, 5}};
  bool ok = true;
  double worst = 1e9, worst_gap = 0.0, worst_slack = 1e9;
  std::uint64_t seed = 400;
  for (const auto& [n, m] : shapes) {
    const Instance inst = random_xos(n, m, opts, seed++);
    const ConfigLpSolution lp = solve_configuration_lp(inst);
    const auto b = xos_base_prices(inst, lp);
    const double gap = std::abs(std::accumulate(b.begin(), b.end(), 0.0) - lp.objective_value());
    const double opt = expected_opt(inst, {}, 0).mean;
    const RatioReport r = run(inst, Algorithm::kDynamic, 100000, 14);
    ok &= gap <= 1e-6 && lp.objective_value() >= opt - 1e-9 && r.ratio >= kBound - 0.02;
    worst = std::min(worst, r.ratio);
    worst_gap = std::max(worst_gap, gap);
    worst_slack = std::min(worst_slack, lp.objective_value() - opt);
  }
  out.add(4, "XOS configuration-LP prices", ok,
          fmt("6 instances, clause-credited min ratio %.4f; max |sum b - LP| %.2e; min LP - E[OPT] %.2e",
              worst, worst_gap, worst_slack));
}

void criterion_fta_single(Report& out) {
  bool ratio_ok = true, nosale_ok = true, q_ok = true;
  double worst = 1e9, worst_z = 0.0, worst_q = 1e9;
  for (const Instance& inst : single_item_suite()) {
    const RatioReport r = run(inst, Algorithm::kFixedThreshold, 200000, 15);
    ratio_ok &= r.ratio >= kBound - 0.02;
    worst = std::min(worst, r.ratio);
    const double target = std::exp(-1.0);
    const double se = std::sqrt(target * (1.0 - target) / r.trials);
    const double z = std::abs(r.summary.no_sale_fraction - target) / se;
    nosale_ok &= z <= 4.0;
    worst_z = std::max(worst_z, z);

    SimConfig config;
    config.trials = 200000;
    config.seed = 15;
    config.algorithm = Algorithm::kFixedThreshold;
    config.q_grid = 100;
    const auto mech = make_mechanism(inst, config.algorithm, mechanism_options(config));
    const QCurve c = track_q(*mech, config);
    for (std::size_t g = 0; g < c.grid.size(); ++g) {
      const double slack = c.q[0][g] - (std::exp(-c.grid[g]) - 4.0 * c.std_error[0][g]);
      q_ok &= slack >= 0.0;
      worst_q = std::min(worst_q, slack);
    }
  }
  out.add(5, "single-item fixed threshold", ratio_ok && nosale_ok && q_ok,
          fmt("min ratio %.4f vs %.4f; max |no-sale - 1/e| %.2f sigma; min q(t) - (e^-t - 4se) %.4f",
              worst, kBound - 0.02, worst_z, worst_q));
}

void criterion_hardness(Report& out) {
  bool ok = true;
  std::string detail;
  double worst_non_atom = 0.0;
  for (std::size_t n : {100, 1000, 10000}) {
    const SweepResult r = fta_sweep(n, 1000);
    ok &= r.best_ratio >= kBound - 0.01 && r.best_ratio <= kBound + 10.0 / n;
    ok &= r.regime == HardRegime::kAtLowAtom;
    // Both non-atom regimes stay below 1 - 1/e; the between-atoms regime
    // approaches 1/(e-1) ~ 0.582 from above.
    ok &= r.best_non_atom_ratio < kBound && r.best_non_atom_ratio <= 1.0 / (std::numbers::e - 1.0) + 10.0 / n;
    worst_non_atom = std::max(worst_non_atom, r.best_non_atom_ratio);
    detail += fmt("n=%zu best %.5f at p=%.5f; ", n, r.best_ratio, r.argmax_p);
  }
  const HardInstance h = hard_parameters(2);
  const double p = h.p_high;
  const double enumerated =
      (1 - p) * (1 - p) * h.low + 2 * p * (1 - p) * h.high + p * p * h.high;
  const double err = std::abs(hard_exact_opt(2) - enumerated);
  ok &= err <= 1e-12;
  out.add(6, "fixed-threshold hardness sweep", ok,
          detail + fmt("max non-atom ratio %.5f (bound 1/(e-1)+10/n; (e-2)/(e-1)=%.5f is not "
                       "attainable); n=2 E[OPT] error %.1e",
                       worst_non_atom, (std::numbers::e - 2) / (std::numbers::e - 1), err));
}

void criterion_fta_matching(Report& out) {
  bool ok = true;
  double worst = 1e9;
  std::size_t count = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::uint64_t s = 0; s < 3; ++s) {
      const Instance inst = random_matching(n, n, {}, 500 + 10 * n + s);
      const auto policy = fta_matching_prepare(inst, {}, 0);
      const RatioReport r = run(inst, Algorithm::kFixedThreshold, 100000, 16);
      ok &= policy.method == EstimateMethod::kExact && r.ratio >= kBound - 0.03;
      worst = std::min(worst, r.ratio);
      ++count;
    }
  }
  out.add(7, "matching fixed thresholds", ok,
          fmt("%zu instances n = m in 2..4, exact candidate probabilities; min ratio %.4f vs %.4f",
              count, worst, kBound - 0.03));
}

// --- property suites -------------------------------------------------------

Matroid random_matroid(RandomStream& rng, std::size_t n) {
  const double pick = rng.uniform();
  if (pick < 1.0 / 3.0) return Matroid::uniform(n, static_cast<std::size_t>(rng.uniform() * (n + 1)));
  if (pick < 2.0 / 3.0) {
    const std::size_t blocks = 1 + static_cast<std::size_t>(rng.uniform() * 3);
    std::vector<std::size_t> block_of(n), caps(blocks);
    for (auto& b : block_of) b = static_cast<std::size_t>(rng.uniform() * blocks);
    for (auto& c : caps) c = static_cast<std::size_t>(rng.uniform() * 3);
    return Matroid::partition(block_of, caps);
  }
  const std::size_t vertices = 2 + static_cast<std::size_t>(rng.uniform() * 4);
  std::vector<std::pair<std::size_t, std::size_t>> edges(n);
  for (auto& [u, v] : edges) {
    u = static_cast<std::size_t>(rng.uniform() * vertices);
    v = static_cast<std::size_t>(rng.uniform() * vertices);
  }
  return Matroid::graphic(vertices, edges);
}

std::size_t critical_value_violations() {
  RandomStream rng(47, 1);
  std::size_t bad = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 9);
    const Matroid m = random_matroid(rng, n);
    std::vector<double> w(n);
    for (double& x : w) x = rng.uniform() < 0.15 ? 0.0 : 10.0 * rng.uniform();
    ElementSet a = 0, v = 0;
    for (std::size_t e = 0; e < n; ++e) {
      if (rng.uniform() < 0.25 && m.is_independent(a | singleton(e))) a |= singleton(e);
    }
    for (std::size_t e = 0; e < n; ++e) {
      if (!has_element(a, e) && rng.uniform() < 0.6 && m.is_independent(a | v | singleton(e))) {
        v |= singleton(e);
      }
    }
    const double r = remaining_value(m, a, w);
    double lhs = 0.0;
    for (std::size_t e = 0; e < n; ++e) {
      if (has_element(v, e)) lhs += r - remaining_value(m, a | singleton(e), w);
    }
    bad += lhs > r + 1e-9;
  }
  return bad;
}

std::size_t coupling_violations() {
  RandomStream rng(2024, 1);
  std::size_t bad = 0;
  for (int c = 0; c < 1000; ++c) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 5);
    const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 4);
    std::vector<double> b(m);
    for (double& x : b) x = 5.0 * rng.uniform();
    WeightMatrix v(n, std::vector<double>(m));
    for (auto& row : v) {
      for (double& x : row) x = rng.uniform() < 0.3 ? 0.0 : 6.0 * rng.uniform();
    }
    const auto arrivals = sample_arrivals(n, rng);
    const auto original = run_matching_dynamic(b, v, arrivals);
    const std::size_t moved = static_cast<std::size_t>(rng.uniform() * n);
    auto delayed = arrivals;
    double new_time = 0.0;
    for (Arrival& a : delayed) {
      if (a.buyer == moved) new_time = a.time += (1.0 - a.time) * rng.uniform();
    }
    std::stable_sort(delayed.begin(), delayed.end(),
                     [](const Arrival& x, const Arrival& y) { return x.time < y.time; });
    const auto later = run_matching_dynamic(b, v, delayed);
    for (const Sale& s : later.sales) {
      if (s.time >= new_time) continue;
      const bool found = std::any_of(original.sales.begin(), original.sales.end(), [&](const Sale& o) {
        return o.item == s.item && o.time <= s.time;
      });
      bad += !found;
    }
  }
  return bad;
}

std::size_t ode_violations() {
  std::size_t bad = 0;
  const double h = 1e-5;
  for (int k = 1; k <= 1000; ++k) {
    const double t = k / 1001.0;
    const double d = (discount(t + h) - discount(t - h)) / (2 * h);
    bad += std::abs(1.0 - discount(t) + d) > 1e-6;
  }
  return bad;
}

double brute_matroid(const Matroid& m, const std::vector<double>& w) {
  double best = 0.0;
  for (ElementSet s = 0; s < (ElementSet{1} << m.ground_size()); ++s) {
    if (!m.is_independent(s)) continue;
    double t = 0.0;
    for (std::size_t e = 0; e < w.size(); ++e) t += has_element(s, e) ? w[e] : 0.0;
    best = std::max(best, t);
  }
  return best;
}

double brute_matching(const WeightMatrix& w, std::size_t i, std::vector<bool>& used) {
  if (i == w.size()) return 0.0;
  double best = brute_matching(w, i + 1, used);
  for (std::size_t j = 0; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    best = std::max(best, w[i][j] + brute_matching(w, i + 1, used));
    used[j] = false;
  }
  return best;
}

double brute_xos(const std::vector<XosValuation>& v, std::size_t i, ItemSet remaining) {
  if (i == v.size()) return 0.0;
  double best = 0.0;
  for (ItemSet s = remaining;; s = (s - 1) & remaining) {
    best = std::max(best, value(v[i], s) + brute_xos(v, i + 1, remaining & ~s));
    if (s == 0) break;
  }
  return best;
}

std::size_t oracle_mismatches() {
  RandomStream rng(5150, 0);
  std::size_t bad = 0;
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 10);
    const Matroid m = random_matroid(rng, n);
    std::vector<double> w(n);
    for (double& x : w) x = rng.uniform() < 0.2 ? 0.0 : std::floor(8.0 * rng.uniform());
    bad += std::abs(greedy_opt(m, w, 0).total - brute_matroid(m, w)) > 1e-9;
  }
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 5);
    const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 5);
    WeightMatrix w(n, std::vector<double>(m));
    for (auto& row : w) {
      for (double& x : row) x = rng.uniform() < 0.3 ? 0.0 : 10.0 * rng.uniform();
    }
    std::vector<bool> used(m, false);
    bad += std::abs(max_weight_matching(w).value - brute_matching(w, 0, used)) > 1e-9;
  }
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 3);
    const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 5);
    std::vector<XosValuation> vals;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<AdditiveClause> clauses(1 + static_cast<std::size_t>(rng.uniform() * 3), AdditiveClause(m));
      for (auto& cl : clauses) {
        for (double& x : cl) x = rng.uniform() < 0.3 ? 0.0 : 5.0 * rng.uniform();
      }
      vals.emplace_back(clauses);
    }
    bad += std::abs(xos_welfare_opt(vals, m).value - brute_xos(vals, 0, (ItemSet{1} << m) - 1)) > 1e-9;
  }
  return bad;
}

bool reports_independent_of_workers() {
  const std::vector<std::pair<Instance, Algorithm>> cases{
      {random_single_item(5, {}, 1), Algorithm::kFixedThreshold},
      {random_matching(4, 4, {}, 2), Algorithm::kDynamic},
      {random_xos(3, 3, {}, 3), Algorithm::kDynamic},
      {random_matroid_instance(k4_graphic(), {}, 4), Algorithm::kDynamic}};
  bool same = true;
  for (const auto& [inst, alg] : cases) {
    std::vector<std::string> rows;
    for (int workers : {1, 2, 4}) {
      SimConfig config;
      config.trials = 80000;
      config.seed = 31;
      config.algorithm = alg;
      config.workers = workers;
      rows.push_back(report_csv_row(run_trials(inst, config)));
    }
    const auto mech = make_mechanism(inst, alg, {.seed = 31});
    const TrialSummary serial = simulate_serial(*mech, 80000, 31);
    RatioReport r = make_report(*mech, serial, expected_opt(inst, {}, 31), 31);
    rows.push_back(report_csv_row(r));
    same &= std::all_of(rows.begin(), rows.end(), [&](const std::string& s) { return s == rows[0]; });
  }
  return same;
}

void criterion_properties(Report& out) {
  const std::size_t critical = critical_value_violations();
  const std::size_t coupling = coupling_violations();
  const std::size_t ode = ode_violations();
  const std::size_t oracles = oracle_mismatches();
  const bool deterministic = reports_independent_of_workers();
  const bool ok = g_totals.accounting == 0 && g_totals.feasibility == 0 && critical == 0 &&
                  coupling == 0 && ode == 0 && oracles == 0 && deterministic && g_totals.trials > 0;
  out.add(8, "property suites", ok,
          fmt("accounting %zu / feasibility %zu violations over %zu trials; critical-value bad=%zu of "
              "%d; coupling bad=%zu of 1000 cases; ODE bad=%zu of 1000; oracle mismatches %zu; "
              "worker-count determinism %s",
              g_totals.accounting, g_totals.feasibility, g_totals.trials, critical, 10000, coupling,
              ode, oracles, deterministic ? "yes" : "no"));
}

}  // namespace
}  // namespace prophet

int main() {
  using namespace prophet;
  const std::vector<std::function<void(Report&)>> criteria{
      criterion_single_dynamic, criterion_matroid,   criterion_matching,     criterion_xos,
      criterion_fta_single,     criterion_hardness, criterion_fta_matching, criterion_properties};
  Report report;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    try {
      c(report);
    } catch (const std::exception& e) {
      report.add(0, "criterion raised", false, e.what());
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria failed (%.1f s)\n", report.failures(), criteria.size(), secs);
  return report.failures() == 0 ? 0 : 1;
}
