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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "prophet/errors.h"
#include "prophet/generators.h"

namespace prophet {
namespace {

TEST(SampleArrivals, SortedWithUniformMean) {
  RandomStream rng(1, 2);
  const std::size_t n = 100000;
  const auto arrivals = sample_arrivals(n, rng);
  double sum = 0.0;
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    sum += arrivals[k].time;
    seen[arrivals[k].buyer] = true;
    if (k > 0) EXPECT_LE(arrivals[k - 1].time, arrivals[k].time);
  }
  EXPECT_NEAR(sum / n, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / n));
  for (bool s : seen) EXPECT_TRUE(s);
}

TEST(MomentAccumulator, MatchesTwoPass) {
  RandomStream rng(3, 3);
  std::vector<double> xs(5000);
  MomentAccumulator acc;
  for (double& x : xs) {
    x = 10.0 * rng.uniform();
    acc.add(x);
  }
  const SampleMoments a = acc.moments();
  const SampleMoments b = sample_moments(xs);
  EXPECT_EQ(acc.count(), xs.size());
  EXPECT_NEAR(a.mean, b.mean, 1e-12);
  EXPECT_NEAR(a.std_error, b.std_error, 1e-12);
}

TEST(Simulate, DeterministicSingleBuyerRatioIsOne) {
  const Instance inst = Instance::single_item({DiscreteDistribution::point_mass(5.0)}, "one");
  SimConfig config;
  config.trials = 1000;
  config.seed = 4;
  const RatioReport r = run_trials(inst, config);
  EXPECT_EQ(r.alg_mean, 5.0);
  EXPECT_EQ(r.alg_std_error, 0.0);
  EXPECT_EQ(r.opt.mean, 5.0);
  EXPECT_EQ(r.ratio, 1.0);
  EXPECT_EQ(r.ci_lo, 1.0);
  EXPECT_EQ(r.summary.no_sale_fraction, 0.0);
  EXPECT_EQ(r.instance, "one");
}

TEST(Simulate, RejectsZeroTrials) {
  const Instance inst = Instance::single_item({DiscreteDistribution::point_mass(5.0)});
  const auto mech = make_mechanism(inst, Algorithm::kDynamic, {});
  EXPECT_THROW(simulate(*mech, 0, 1), ValidationError);
  SimConfig config;
  config.q_grid = 0;
  EXPECT_THROW(track_q(*mech, config), ValidationError);
}

void expect_same(const SampleMoments& a, const SampleMoments& b) {
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_error, b.std_error);
}

void expect_same(const TrialSummary& a, const TrialSummary& b) {
  EXPECT_EQ(a.trials, b.trials);
  expect_same(a.welfare, b.welfare);
  expect_same(a.revenue, b.revenue);
  expect_same(a.utility, b.utility);
  expect_same(a.true_welfare, b.true_welfare);
  EXPECT_EQ(a.no_sale_fraction, b.no_sale_fraction);
  EXPECT_EQ(a.accounting_violations, b.accounting_violations);
  EXPECT_EQ(a.feasibility_violations, b.feasibility_violations);
}

TEST(Simulate, IndependentOfWorkerCount) {
  const std::vector<Instance> cases{random_single_item(4, {}, 1), random_matching(3, 3, {}, 2),
                                    random_xos(3, 3, {}, 3),
                                    random_matroid_instance(Matroid::uniform(5, 2), {}, 4)};
  for (const Instance& inst : cases) {
    const auto mech = make_mechanism(inst, Algorithm::kDynamic, {.seed = 5});
    const TrialSummary serial = simulate_serial(*mech, 70000, 6);
    expect_same(simulate(*mech, 70000, 6, 1), serial);
    expect_same(simulate(*mech, 70000, 6, 3), serial);
    expect_same(simulate(*mech, 70000, 6, 8), serial);
    EXPECT_EQ(serial.accounting_violations, 0u);
    EXPECT_EQ(serial.feasibility_violations, 0u);
  }
}

TEST(Simulate, TrialsReplayFromTheirOwnStream) {
  const Instance inst = random_matching(3, 2, {}, 8);
  const auto mech = make_mechanism(inst, Algorithm::kFixedThreshold, {});
  const TrialOutcome a = run_one_trial(*mech, 11, 12345);
  const TrialOutcome b = run_one_trial(*mech, 11, 12345);
  EXPECT_EQ(a.welfare, b.welfare);
  EXPECT_EQ(a.sales.size(), b.sales.size());
}

TEST(FillRatio, DeltaMethod) {
  RatioReport r;
  fill_ratio(2.0, 0.1, {4.0, 0.2, EstimateMethod::kMonteCarlo, 100}, r);
  EXPECT_DOUBLE_EQ(r.ratio, 0.5);
  EXPECT_NEAR(r.ratio_std_error, std::sqrt(2.0) * 0.025, 1e-15);
  EXPECT_NEAR(r.ci_hi - r.ratio, 1.96 * r.ratio_std_error, 1e-15);
  EXPECT_NEAR(r.ratio - r.ci_lo, 1.96 * r.ratio_std_error, 1e-15);

  fill_ratio(0.0, 0.0, {0.0, 0.0, EstimateMethod::kExact, 0}, r);
  EXPECT_EQ(r.ratio, 1.0);
  fill_ratio(1.0, 0.0, {0.0, 0.0, EstimateMethod::kExact, 0}, r);
  EXPECT_TRUE(std::isinf(r.ratio));
}

// The delta-method interval should cover the true ratio of two independent
// normal means about 95% of the time.
TEST(FillRatio, CoverageOnSyntheticData) {
  RandomStream rng(9, 9);
  auto normal = [&rng]() {
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  };
  const int reps = 2000;
  int covered = 0;
  for (int k = 0; k < reps; ++k) {
    const double a = 3.0 + 0.2 * normal();
    const double o = 5.0 + 0.3 * normal();
    RatioReport r;
    fill_ratio(a, 0.2, {o, 0.3, EstimateMethod::kMonteCarlo, 1}, r);
    if (r.ci_lo <= 0.6 && 0.6 <= r.ci_hi) ++covered;
  }
  EXPECT_NEAR(static_cast<double>(covered) / reps, 0.95, 4.0 * std::sqrt(0.95 * 0.05 / reps) + 0.01);
}

TEST(TrackQ, SingleBuyerSurvivalIsOneMinusT) {
  // v = b, so the buyer always buys at its arrival time.
  const Instance inst = Instance::single_item({DiscreteDistribution::point_mass(5.0)});
  const auto mech = make_mechanism(inst, Algorithm::kDynamic, {});
  SimConfig config;
  config.trials = 40000;
  config.seed = 2;
  config.q_grid = 20;
  const QCurve c = track_q(*mech, config);
  ASSERT_EQ(c.grid.size(), 21u);
  EXPECT_EQ(c.q[0][0], 1.0);
  for (std::size_t g = 0; g < c.grid.size(); ++g) {
    const double expect = 1.0 - c.grid[g];
    EXPECT_NEAR(c.q[0][g], expect, 4.0 * std::sqrt(expect * (1 - expect) / config.trials) + 1e-12);
    EXPECT_NEAR(c.residual[g], 5.0 * c.q[0][g], 1e-12);
  }
}

TEST(TrackQ, MonotoneAndIndependentOfWorkers) {
  const Instance inst = random_matching(4, 3, {}, 21);
  const auto mech = make_mechanism(inst, Algorithm::kDynamic, {});
  SimConfig config;
  config.trials = 5000;
  config.seed = 8;
  config.workers = 1;
  const QCurve one = track_q(*mech, config);
  config.workers = 4;
  const QCurve four = track_q(*mech, config);
  EXPECT_EQ(one.q, four.q);
  EXPECT_EQ(one.residual, four.residual);
  for (const auto& row : one.q) {
    EXPECT_EQ(row.front(), 1.0);
    for (std::size_t g = 1; g < row.size(); ++g) EXPECT_LE(row[g], row[g - 1]);
  }
}

TEST(TrackQ, UnsellableElementStaysAtOne) {
  // Matroid acceptance is strict, so a buyer worth zero is never taken.
  const Instance inst = Instance::matroid_setting(
      Matroid::uniform(2, 2),
      {DiscreteDistribution({{1.0, 0.5}, {3.0, 0.5}}), DiscreteDistribution::point_mass(0.0)});
  const auto mech = make_mechanism(inst, Algorithm::kDynamic, {});
  SimConfig config;
  config.trials = 3000;
  const QCurve c = track_q(*mech, config);
  for (double q : c.q[1]) EXPECT_EQ(q, 1.0);
  EXPECT_LT(c.q[0].back(), 1.0);
}

}  // namespace
}  // namespace prophet
