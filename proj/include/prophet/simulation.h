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

#ifndef PROPHET_SIMULATION_H_
#define PROPHET_SIMULATION_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "prophet/distributions.h"
#include "prophet/instance.h"
#include "prophet/offline.h"
#include "prophet/online.h"
#include "prophet/pricing.h"
#include "prophet/random.h"
#include "prophet/stats.h"

namespace prophet {

// n iid uniform arrival times sorted ascending (ties by buyer index).
std::vector<Arrival> sample_arrivals(std::size_t n, RandomStream& rng);

struct SimConfig {
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::kDynamic;
  ExpectationOptions expectation;
  MatroidPricingOptions matroid;
  std::size_t q_grid = 100;  // grid intervals G, giving G + 1 points
  int workers = 0;           // 0 lets OpenMP decide
};

MechanismOptions mechanism_options(const SimConfig& config);

// Trial i draws its profile, arrivals and auxiliary coins from stream
// (seed, i), in that order.
TrialOutcome run_one_trial(const Mechanism& mech, std::uint64_t seed, std::size_t trial);

// Streaming mean / standard error from compensated sums of x and x^2.
class MomentAccumulator {
 public:
  void add(double x);
  std::size_t count() const { return count_; }
  SampleMoments moments() const;

 private:
  std::size_t count_ = 0;
  CompensatedSum sum_;
  CompensatedSum sum_sq_;
};

struct TrialSummary {
  std::size_t trials = 0;
  SampleMoments welfare;
  SampleMoments revenue;
  SampleMoments utility;
  SampleMoments true_welfare;
  double no_sale_fraction = 0.0;
  std::size_t accounting_violations = 0;
  std::size_t feasibility_violations = 0;
};

// Runs trials 0..trials-1 in parallel. Records are reduced in trial order,
// so the result does not depend on the worker count.
TrialSummary simulate(const Mechanism& mech, std::size_t trials, std::uint64_t seed,
                      int workers = 0);
// Single-threaded reference; identical output to simulate().
TrialSummary simulate_serial(const Mechanism& mech, std::size_t trials, std::uint64_t seed);

struct RatioReport {
  std::string instance;
  SettingKind kind = SettingKind::kSingleItem;
  Algorithm algorithm = Algorithm::kDynamic;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double alg_mean = 0.0;
  double alg_std_error = 0.0;
  ExpectationEstimate opt;
  double ratio = 0.0;
  double ratio_std_error = 0.0;  // delta method over both estimates
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  TrialSummary summary;
};

// ratio = alg / opt; var(ratio) ~ (se_a / o)^2 + (a se_o / o^2)^2; CI at
// +-1.96 standard errors. A zero optimum gives ratio 1 when alg is also 0.
void fill_ratio(double alg_mean, double alg_se, const ExpectationEstimate& opt, RatioReport& out);

RatioReport make_report(const Mechanism& mech, const TrialSummary& summary,
                        const ExpectationEstimate& opt, std::uint64_t seed);

// Prepares the mechanism, simulates, and estimates E[OPT].
RatioReport run_trials(const Instance& inst, const SimConfig& config);
RatioReport run_trials(const Mechanism& mech, const SimConfig& config);

struct QCurve {
  std::vector<double> grid;                    // t_g = g / G
  std::vector<std::vector<double>> q;          // q[j][g]
  std::vector<std::vector<double>> std_error;  // binomial standard error
  std::vector<double> residual;                // sum_j q[j][g] b_j; empty without prices
  std::size_t trials = 0;
};

// q[j][g] = fraction of trials in which item j was not sold strictly
// before t_g. Uses the same trial streams as simulate().
QCurve track_q(const Mechanism& mech, const SimConfig& config);

}  // namespace prophet

#endif  // PROPHET_SIMULATION_H_
