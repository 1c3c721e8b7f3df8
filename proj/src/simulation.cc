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

#include "prophet/simulation.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include <omp.h>

#include "prophet/errors.h"

namespace prophet {

std::vector<Arrival> sample_arrivals(std::size_t n, RandomStream& rng) {
  std::vector<Arrival> arrivals(n);
  for (std::size_t i = 0; i < n; ++i) arrivals[i] = {i, rng.uniform()};
  std::sort(arrivals.begin(), arrivals.end(), [](const Arrival& a, const Arrival& b) {
    return a.time < b.time || (a.time == b.time && a.buyer < b.buyer);
  });
  return arrivals;
}

MechanismOptions mechanism_options(const SimConfig& config) {
  return {config.expectation, config.matroid, config.seed};
}

TrialOutcome run_one_trial(const Mechanism& mech, std::uint64_t seed, std::size_t trial) {
  RandomStream rng(seed, trial);
  const Instance& inst = mech.instance();
  const ValueProfile profile = sample_profile(inst, rng);
  const std::vector<Arrival> arrivals = sample_arrivals(inst.buyer_count(), rng);
  return mech.run(profile, arrivals, rng);
}

void MomentAccumulator::add(double x) {
  ++count_;
  sum_.add(x);
  sum_sq_.add(x * x);
}

SampleMoments MomentAccumulator::moments() const {
  SampleMoments out;
  if (count_ == 0) return out;
  const double n = static_cast<double>(count_);
  out.mean = sum_.value() / n;
  if (count_ < 2) return out;
  const double var = std::max(0.0, (sum_sq_.value() - n * out.mean * out.mean) / (n - 1.0));
  out.std_error = std::sqrt(var / n);
  return out;
}

namespace {

struct TrialRecord {
  double welfare = 0.0;
  double revenue = 0.0;
  double utility = 0.0;
  double true_welfare = 0.0;
  bool sold = false;
  bool accounting_ok = true;
  bool feasible = true;
};

TrialRecord summarize(const Instance& inst, const TrialOutcome& o) {
  return {o.welfare, o.revenue,          o.utility_total,        o.true_welfare,
          !o.sales.empty(), accounting_holds(o), is_feasible(inst, o)};
}

class SummaryBuilder {
 public:
  void add(const TrialRecord& r) {
    welfare_.add(r.welfare);
    revenue_.add(r.revenue);
    utility_.add(r.utility);
    true_welfare_.add(r.true_welfare);
    if (!r.sold) ++unsold_;
    if (!r.accounting_ok) ++accounting_;
    if (!r.feasible) ++feasibility_;
  }

  TrialSummary build() const {
    TrialSummary s;
    s.trials = welfare_.count();
    s.welfare = welfare_.moments();
    s.revenue = revenue_.moments();
    s.utility = utility_.moments();
    s.true_welfare = true_welfare_.moments();
    s.no_sale_fraction = s.trials == 0 ? 0.0 : static_cast<double>(unsold_) / s.trials;
    s.accounting_violations = accounting_;
    s.feasibility_violations = feasibility_;
    return s;
  }

 private:
  MomentAccumulator welfare_, revenue_, utility_, true_welfare_;
  std::size_t unsold_ = 0;
  std::size_t accounting_ = 0;
  std::size_t feasibility_ = 0;
};

// Trials are processed in blocks so memory stays bounded; within a block
// records land in trial-indexed slots and are folded in order afterwards.
constexpr std::size_t kBlock = 1 << 16;

void check_trials(std::size_t trials) {
  if (trials == 0) throw ValidationError("trials must be at least 1");
}

}  // namespace

TrialSummary simulate(const Mechanism& mech, std::size_t trials, std::uint64_t seed,
                      int workers) {
  check_trials(trials);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const Instance& inst = mech.instance();
  SummaryBuilder builder;
  std::vector<TrialRecord> block;
  for (std::size_t start = 0; start < trials; start += kBlock) {
    const std::size_t count = std::min(kBlock, trials - start);
    block.assign(count, TrialRecord{});
    std::exception_ptr error;
#pragma omp parallel for num_threads(threads) schedule(dynamic, 256)
    for (std::size_t k = 0; k < count; ++k) {
      try {
        block[k] = summarize(inst, run_one_trial(mech, seed, start + k));
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    for (const TrialRecord& r : block) builder.add(r);
  }
  return builder.build();
}

TrialSummary simulate_serial(const Mechanism& mech, std::size_t trials, std::uint64_t seed) {
  check_trials(trials);
  SummaryBuilder builder;
  for (std::size_t t = 0; t < trials; ++t) {
    builder.add(summarize(mech.instance(), run_one_trial(mech, seed, t)));
  }
  return builder.build();
}

void fill_ratio(double alg_mean, double alg_se, const ExpectationEstimate& opt, RatioReport& out) {
  out.alg_mean = alg_mean;
  out.alg_std_error = alg_se;
  out.opt = opt;
  const double o = opt.mean;
  if (o == 0.0) {
    out.ratio = alg_mean == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    out.ratio_std_error = 0.0;
  } else {
    out.ratio = alg_mean / o;
    const double a_term = alg_se / o;
    const double o_term = alg_mean * opt.std_error / (o * o);
    out.ratio_std_error = std::sqrt(a_term * a_term + o_term * o_term);
  }
  out.ci_lo = out.ratio - 1.96 * out.ratio_std_error;
  out.ci_hi = out.ratio + 1.96 * out.ratio_std_error;
}

RatioReport make_report(const Mechanism& mech, const TrialSummary& summary,
                        const ExpectationEstimate& opt, std::uint64_t seed) {
  RatioReport r;
  r.instance = mech.instance().name;
  r.kind = mech.instance().kind;
  r.algorithm = mech.algorithm();
  r.trials = summary.trials;
  r.seed = seed;
  r.summary = summary;
  fill_ratio(summary.welfare.mean, summary.welfare.std_error, opt, r);
  return r;
}

RatioReport run_trials(const Mechanism& mech, const SimConfig& config) {
  const TrialSummary summary = simulate(mech, config.trials, config.seed, config.workers);
  const ExpectationEstimate opt = expected_opt(mech.instance(), config.expectation, config.seed);
  return make_report(mech, summary, opt, config.seed);
}

RatioReport run_trials(const Instance& inst, const SimConfig& config) {
  const auto mech = make_mechanism(inst, config.algorithm, mechanism_options(config));
  return run_trials(*mech, config);
}

QCurve track_q(const Mechanism& mech, const SimConfig& config) {
  check_trials(config.trials);
  if (config.q_grid == 0) throw ValidationError("q grid needs at least one interval");
  const Instance& inst = mech.instance();
  const std::size_t items = inst.kind == SettingKind::kSingleItem ? 1
                            : inst.kind == SettingKind::kMatroid  ? inst.buyer_count()
                                                                  : inst.items;
  const std::size_t g_count = config.q_grid + 1;
  QCurve curve;
  curve.trials = config.trials;
  curve.grid.resize(g_count);
  for (std::size_t g = 0; g < g_count; ++g) {
    curve.grid[g] = static_cast<double>(g) / static_cast<double>(config.q_grid);
  }
  curve.grid.back() = 1.0;

  // first_sold[j][g]: trials whose item j sale time s has t_g as the first
  // grid point with s < t_g. Integer counts make the reduction exact.
  std::vector<std::vector<std::size_t>> first_sold(items, std::vector<std::size_t>(g_count + 1, 0));
  const int threads = config.workers > 0 ? config.workers : omp_get_max_threads();
  std::exception_ptr error;
#pragma omp parallel num_threads(threads)
  {
    std::vector<std::vector<std::size_t>> local(items, std::vector<std::size_t>(g_count + 1, 0));
#pragma omp for schedule(dynamic, 256)
    for (std::size_t t = 0; t < config.trials; ++t) {
      try {
        const TrialOutcome o = run_one_trial(mech, config.seed, t);
        for (std::size_t j = 0; j < items; ++j) {
          if (!o.item_sale_time[j]) continue;
          const double s = *o.item_sale_time[j];
          const auto it = std::upper_bound(curve.grid.begin(), curve.grid.end(), s);
          ++local[j][static_cast<std::size_t>(it - curve.grid.begin())];
        }
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
#pragma omp critical
    for (std::size_t j = 0; j < items; ++j) {
      for (std::size_t g = 0; g <= g_count; ++g) first_sold[j][g] += local[j][g];
    }
  }
  if (error) std::rethrow_exception(error);

  const double n = static_cast<double>(config.trials);
  curve.q.assign(items, std::vector<double>(g_count, 1.0));
  curve.std_error.assign(items, std::vector<double>(g_count, 0.0));
  for (std::size_t j = 0; j < items; ++j) {
    std::size_t sold = 0;
    for (std::size_t g = 0; g < g_count; ++g) {
      sold += first_sold[j][g];
      const double q = 1.0 - static_cast<double>(sold) / n;
      curve.q[j][g] = q;
      curve.std_error[j][g] = std::sqrt(q * (1.0 - q) / n);
    }
  }
  const std::vector<double> b = mech.item_base_prices();
  if (b.size() == items) {
    curve.residual.assign(g_count, 0.0);
    for (std::size_t g = 0; g < g_count; ++g) {
      CompensatedSum r;
      for (std::size_t j = 0; j < items; ++j) r.add(curve.q[j][g] * b[j]);
      curve.residual[g] = r.value();
    }
  }
  return curve;
}

}  // namespace prophet
