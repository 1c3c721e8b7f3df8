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

#include "prophet/config_lp.h"

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "prophet/errors.h"
#include "prophet/generators.h"
#include "prophet/offline.h"

namespace prophet {
namespace {

BuyerValuationDistribution point(XosValuation v) {
  return BuyerValuationDistribution({{std::move(v), 1.0}});
}

double total(const std::vector<double>& b) { return std::accumulate(b.begin(), b.end(), 0.0); }

TEST(ConfigLp, AdditiveSingleBuyer) {
  const Instance inst = Instance::xos(2, {point(XosValuation::additive({3.0, 4.0}))});
  const auto sol = solve_configuration_lp(inst);
  EXPECT_NEAR(sol.objective_value(), 7.0, 1e-9);
  EXPECT_NEAR(sol.x(0, 0, 3), 1.0, 1e-9);
  const auto b = xos_base_prices(inst, sol);
  EXPECT_NEAR(b[0], 3.0, 1e-9);
  EXPECT_NEAR(b[1], 4.0, 1e-9);
}

TEST(ConfigLp, TwoUnitDemandBuyersOneItem) {
  const Instance inst = Instance::xos(
      1, {point(XosValuation::additive({2.0})), point(XosValuation::additive({2.0}))});
  const auto sol = solve_configuration_lp(inst);
  EXPECT_NEAR(sol.objective_value(), 2.0, 1e-9);
  EXPECT_NEAR(total(xos_base_prices(inst, sol)), 2.0, 1e-9);
}

TEST(ConfigLp, TwoClauseBuyerPricesSumToObjective) {
  const Instance inst = Instance::xos(2, {point(XosValuation({{3.0, 0.0}, {0.0, 4.0}}))});
  const auto sol = solve_configuration_lp(inst);
  EXPECT_NEAR(sol.objective_value(), 4.0, 1e-9);
  EXPECT_NEAR(total(xos_base_prices(inst, sol)), 4.0, 1e-9);
}

TEST(ConfigLp, Rejections) {
  const Instance single = Instance::single_item({DiscreteDistribution::point_mass(1.0)});
  EXPECT_THROW(build_configuration_lp(single), ValidationError);
  const Instance wide = Instance::xos(9, {point(XosValuation::additive(std::vector<double>(9, 1.0)))});
  EXPECT_THROW(build_configuration_lp(wide), CapacityError);
  EXPECT_NO_THROW(build_configuration_lp(wide, 512));
}

TEST(ConfigLp, DrawSetFollowsConditionalMass) {
  // Two identical buyers share one item; the split between them is up to
  // the solver, but each buyer's conditional masses must sum to one.
  const Instance inst = Instance::xos(
      1, {point(XosValuation::additive({2.0})), point(XosValuation::additive({2.0}))});
  const auto sol = solve_configuration_lp(inst);
  for (std::size_t i = 0; i < 2; ++i) {
    const double share = sol.x(i, 0, 1);
    EXPECT_NEAR(share + sol.x(i, 0, 0), 1.0, 1e-9);
    if (share > 1e-9) EXPECT_EQ(sol.draw_set(i, 0, share * 0.5), 1u);
    EXPECT_EQ(sol.draw_set(i, 0, std::min(0.999999, share + 1e-6)), share > 1.0 - 1e-6 ? 1u : 0u);
  }
}

// Feasibility of the returned point against every row, the identity
// sum_j b_j = objective, and the relaxation bound LP >= E[OPT].
TEST(ConfigLp, RandomInstancesAreConsistent) {
  GeneratorOptions opts;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const std::size_t m = 1 + (seed / 4) % 5;
    const Instance inst = random_xos(n, m, opts, seed);
    const ConfigLp lp = build_configuration_lp(inst);
    const auto sol = solve_configuration_lp(inst);
    std::vector<double> x(lp.problem.objective.size());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < inst.support_size(i); ++k) {
        for (ItemSet s = 0; s < (ItemSet{1} << m); ++s) x[lp.variable(i, k, s)] = sol.x(i, k, s);
      }
    }
    for (double xi : x) EXPECT_GE(xi, 0.0);
    for (const auto& row : lp.problem.constraints) {
      double lhs = 0.0;
      for (std::size_t c = 0; c < x.size(); ++c) lhs += row.coeffs[c] * x[c];
      if (row.relation == Relation::kLessEqual) EXPECT_LE(lhs, row.rhs + 1e-7);
      if (row.relation == Relation::kEqual) EXPECT_NEAR(lhs, row.rhs, 1e-7);
    }
    const auto b = xos_base_prices(inst, sol);
    EXPECT_NEAR(total(b), sol.objective_value(), 1e-6) << inst.name;
    const double opt = expected_opt(inst, {}, seed).mean;
    EXPECT_GE(sol.objective_value(), opt - 1e-7) << inst.name;
  }
}

}  // namespace
}  // namespace prophet
