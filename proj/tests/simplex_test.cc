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

#include "prophet/simplex.h"

#include <gtest/gtest.h>

#include <cmath>
#include <optional>
#include <vector>

#include "prophet/errors.h"
#include "prophet/random.h"

namespace prophet {
namespace {

LpConstraint le(std::vector<double> c, double rhs) { return {std::move(c), Relation::kLessEqual, rhs}; }

TEST(SolveLp, Examples) {
  const LpSolution a = solve_lp({{1.0}, {le({1.0}, 3.0)}});
  EXPECT_NEAR(a.objective, 3.0, 1e-9);
  EXPECT_NEAR(a.x[0], 3.0, 1e-9);
  EXPECT_NEAR(solve_lp({{1.0, 1.0}, {le({1.0, 1.0}, 1.0)}}).objective, 1.0, 1e-9);
  const LpSolution c =
      solve_lp({{3.0, 4.0}, {le({1.0, 0.0}, 1.0), le({0.0, 1.0}, 1.0), le({1.0, 1.0}, 1.0)}});
  EXPECT_NEAR(c.objective, 4.0, 1e-9);
  EXPECT_NEAR(c.x[0], 0.0, 1e-9);
  EXPECT_NEAR(c.x[1], 1.0, 1e-9);
}

TEST(SolveLp, EqualityAndGreaterRows) {
  // max x + 2y  s.t. x + y = 2, x >= 0.5, y <= 1.2.
  const LpSolution s = solve_lp({{1.0, 2.0},
                                 {{{1.0, 1.0}, Relation::kEqual, 2.0},
                                  {{1.0, 0.0}, Relation::kGreaterEqual, 0.5},
                                  le({0.0, 1.0}, 1.2)}});
  EXPECT_NEAR(s.objective, 0.8 + 2.4, 1e-9);
  // Negative right-hand side: -x <= -1 means x >= 1; min x via max -x.
  const LpSolution t = solve_lp({{-1.0}, {le({-1.0}, -1.0)}});
  EXPECT_NEAR(t.x[0], 1.0, 1e-9);
}

TEST(SolveLp, InfeasibleAndUnbounded) {
  EXPECT_THROW(solve_lp({{1.0}, {le({1.0}, 1.0), {{1.0}, Relation::kGreaterEqual, 2.0}}}),
               InfeasibleError);
  EXPECT_THROW(solve_lp({{1.0, 0.0}, {le({1.0, -1.0}, 1.0)}}), UnboundedError);
  EXPECT_THROW(solve_lp({{1.0, 0.0}, {le({1.0}, 1.0)}}), ValidationError);
}

TEST(SolveLp, DegenerateCycleProneProblem) {
  // Beale's example cycles under the textbook largest-coefficient rule.
  const LpSolution s = solve_lp({{0.75, -150.0, 0.02, -6.0},
                                 {le({0.25, -60.0, -0.04, 9.0}, 0.0),
                                  le({0.5, -90.0, -0.02, 3.0}, 0.0), le({0.0, 0.0, 1.0, 0.0}, 1.0)}});
  EXPECT_NEAR(s.objective, 0.05, 1e-9);
}

// Solves a k x k system by Gaussian elimination with partial pivoting.
std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t k = b.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-10) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < k; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Best objective over all basic feasible points; nullopt when none exist.
std::optional<double> vertex_enumeration(const LpProblem& p) {
  const std::size_t n = p.objective.size();
  // Rows as equalities a.x = b: the constraints plus the n bounds x_i = 0.
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (const auto& c : p.constraints) {
    rows.push_back(c.coeffs);
    rhs.push_back(c.rhs);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    rows.push_back(e);
    rhs.push_back(0.0);
  }
  std::optional<double> best;
  const std::size_t total = rows.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << total); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n) continue;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t r = 0; r < total; ++r) {
      if ((mask >> r) & 1) {
        a.push_back(rows[r]);
        b.push_back(rhs[r]);
      }
    }
    const auto x = solve_square(a, b);
    if (!x) continue;
    bool feasible = true;
    for (double xi : *x) feasible &= xi >= -1e-9;
    for (const auto& c : p.constraints) {
      double lhs = 0.0;
      for (std::size_t i = 0; i < n; ++i) lhs += c.coeffs[i] * (*x)[i];
      switch (c.relation) {
        case Relation::kLessEqual: feasible &= lhs <= c.rhs + 1e-9; break;
        case Relation::kGreaterEqual: feasible &= lhs >= c.rhs - 1e-9; break;
        case Relation::kEqual: feasible &= std::abs(lhs - c.rhs) <= 1e-9; break;
      }
    }
    if (!feasible) continue;
    double obj = 0.0;
    for (std::size_t i = 0; i < n; ++i) obj += p.objective[i] * (*x)[i];
    if (!best || obj > *best) best = obj;
  }
  return best;
}

TEST(SolveLp, AgreesWithVertexEnumeration) {
  RandomStream rng(101, 0);
  int solved = 0, infeasible = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 4);
    const std::size_t rows = 1 + static_cast<std::size_t>(rng.uniform() * 3);
    LpProblem p;
    for (std::size_t i = 0; i < n; ++i) p.objective.push_back(std::round(10.0 * rng.uniform() - 3.0));
    for (std::size_t r = 0; r < rows; ++r) {
      LpConstraint c;
      for (std::size_t i = 0; i < n; ++i) c.coeffs.push_back(std::round(8.0 * rng.uniform() - 3.0));
      const double u = rng.uniform();
      c.relation = u < 0.6 ? Relation::kLessEqual : u < 0.8 ? Relation::kGreaterEqual : Relation::kEqual;
      c.rhs = std::round(10.0 * rng.uniform() - 2.0);
      p.constraints.push_back(c);
    }
    // A bounding row keeps every feasible region a polytope.
    p.constraints.push_back(le(std::vector<double>(n, 1.0), 10.0));
    const auto expected = vertex_enumeration(p);
    if (!expected) {
      EXPECT_THROW(solve_lp(p), InfeasibleError) << "trial " << trial;
      ++infeasible;
      continue;
    }
    const LpSolution s = solve_lp(p);
    EXPECT_NEAR(s.objective, *expected, 1e-7) << "trial " << trial;
    for (const auto& c : p.constraints) {
      double lhs = 0.0;
      for (std::size_t i = 0; i < n; ++i) lhs += c.coeffs[i] * s.x[i];
      if (c.relation == Relation::kLessEqual) EXPECT_LE(lhs, c.rhs + 1e-7);
      if (c.relation == Relation::kGreaterEqual) EXPECT_GE(lhs, c.rhs - 1e-7);
      if (c.relation == Relation::kEqual) EXPECT_NEAR(lhs, c.rhs, 1e-7);
    }
    for (double xi : s.x) EXPECT_GE(xi, -1e-9);
    ++solved;
  }
  EXPECT_GT(solved, 500);
  EXPECT_GT(infeasible, 50);
}

}  // namespace
}  // namespace prophet
