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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "prophet/errors.h"

namespace prophet {
namespace {

constexpr double kEps = 1e-9;

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0), basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  // Row `rows_` holds reduced costs d_j = c_B B^-1 A_j - c_j and the
  // current objective value in its rhs slot.
  double& reduced(std::size_t c) { return at(rows_, c); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) /= p;
    at(r, c) = 1.0;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  void load_costs(const std::vector<double>& cost) {
    for (std::size_t j = 0; j <= cols_; ++j) {
      double d = 0.0;
      for (std::size_t r = 0; r < rows_; ++r) d += cost[basis_[r]] * at(r, j);
      reduced(j) = j < cols_ ? d - cost[j] : d;
    }
  }

  // Maximizes the loaded costs over columns [0, allowed_cols).
  void optimize(std::size_t allowed_cols) {
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (reduced(j) < -kEps) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return;
      std::size_t leave = rows_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows_; ++r) {
        const double a = at(r, enter);
        if (a <= kEps) continue;
        const double ratio = rhs(r) / a;
        if (leave == rows_ || ratio < best - kEps) {
          best = ratio;
          leave = r;
        } else if (ratio <= best + kEps && basis_[r] < basis_[leave]) {
          // Bland: among tied rows, the smallest basic index leaves.
          best = std::min(best, ratio);
          leave = r;
        }
      }
      if (leave == rows_) throw UnboundedError("linear program is unbounded");
      pivot(leave, enter);
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const std::size_t n = problem.objective.size();
  const std::size_t m = problem.constraints.size();
  for (const auto& c : problem.constraints) {
    if (c.coeffs.size() != n) throw ValidationError("LP constraint has wrong number of coefficients");
    if (!std::isfinite(c.rhs)) throw ValidationError("LP right-hand side is not finite");
    for (double a : c.coeffs) {
      if (!std::isfinite(a)) throw ValidationError("LP coefficient is not finite");
    }
  }
  for (double c : problem.objective) {
    if (!std::isfinite(c)) throw ValidationError("LP objective coefficient is not finite");
  }

  // Normalize to rhs >= 0, then count auxiliary columns.
  std::vector<Relation> rel(m);
  std::vector<double> sign(m, 1.0);
  std::size_t slacks = 0;
  std::size_t artificials = 0;
  for (std::size_t r = 0; r < m; ++r) {
    rel[r] = problem.constraints[r].relation;
    if (problem.constraints[r].rhs < 0.0) {
      sign[r] = -1.0;
      if (rel[r] == Relation::kLessEqual) {
        rel[r] = Relation::kGreaterEqual;
      } else if (rel[r] == Relation::kGreaterEqual) {
        rel[r] = Relation::kLessEqual;
      }
    }
    if (rel[r] != Relation::kEqual) ++slacks;
    if (rel[r] != Relation::kLessEqual) ++artificials;
  }
  const std::size_t first_art = n + slacks;
  const std::size_t cols = first_art + artificials;

  Tableau t(m, cols);
  std::size_t next_slack = n;
  std::size_t next_art = first_art;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = problem.constraints[r];
    for (std::size_t j = 0; j < n; ++j) t.at(r, j) = sign[r] * c.coeffs[j];
    t.rhs(r) = sign[r] * c.rhs;
    if (rel[r] == Relation::kLessEqual) {
      t.at(r, next_slack) = 1.0;
      t.basis()[r] = next_slack++;
    } else {
      if (rel[r] == Relation::kGreaterEqual) t.at(r, next_slack++) = -1.0;
      t.at(r, next_art) = 1.0;
      t.basis()[r] = next_art++;
    }
  }

  if (artificials > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (std::size_t j = first_art; j < cols; ++j) phase1[j] = -1.0;
    t.load_costs(phase1);
    t.optimize(cols);
    double scale = 1.0;
    for (const auto& c : problem.constraints) scale = std::max(scale, std::abs(c.rhs));
    if (t.reduced(cols) < -1e-7 * scale) throw InfeasibleError("linear program is infeasible");
    // Pivot remaining zero-level artificials out of the basis; rows with no
    // usable column are redundant and stay inert.
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis()[r] < first_art) continue;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (std::abs(t.at(r, j)) > kEps) {
          t.pivot(r, j);
          break;
        }
      }
    }
  }

  std::vector<double> phase2(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = problem.objective[j];
  t.load_costs(phase2);
  t.optimize(first_art);

  LpSolution sol;
  sol.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis()[r] < n) sol.x[t.basis()[r]] = t.rhs(r);
  }
  double obj = 0.0;
  for (std::size_t j = 0; j < n; ++j) obj += problem.objective[j] * sol.x[j];
  sol.objective = obj;
  return sol;
}

}  // namespace prophet
