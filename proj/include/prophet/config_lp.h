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

#ifndef PROPHET_CONFIG_LP_H_
#define PROPHET_CONFIG_LP_H_

#include <cstddef>
#include <vector>

#include "prophet/instance.h"
#include "prophet/simplex.h"
#include "prophet/valuations.h"

namespace prophet {

inline constexpr std::size_t kConfigLpSetCap = 256;  // max 2^m

// Expectation version of the configuration LP over x[i][k][S]:
//   max  sum v_i^k(S) x[i][k][S]
//   s.t. sum_{i,k,S containing j} x[i][k][S] <= 1     for every item j
//        sum_S x[i][k][S] == Pr[v_i = v_i^k]          for every (i, k)
// Item rows come first, then one row per (i, k) in buyer-major order.
struct ConfigLp {
  LpProblem problem;
  std::size_t items = 0;
  std::vector<std::vector<std::size_t>> offset;  // variable index of x[i][k][0]

  std::size_t variable(std::size_t buyer, std::size_t k, ItemSet s) const {
    return offset[buyer][k] + s;
  }
};

ConfigLp build_configuration_lp(const Instance& inst, std::size_t set_cap = kConfigLpSetCap);

class ConfigLpSolution {
 public:
  ConfigLpSolution(const Instance& inst, const ConfigLp& lp, const LpSolution& raw);

  std::size_t items() const { return items_; }
  double objective_value() const { return objective_; }
  double x(std::size_t buyer, std::size_t k, ItemSet s) const { return x_[buyer][k][s]; }

  // Draws S* for buyer i with realized support index k from
  // x[i][k][S] / Pr[v_i = v_i^k] using one uniform u; leftover mass maps to
  // the empty set.
  ItemSet draw_set(std::size_t buyer, std::size_t k, double u) const;

 private:
  std::size_t items_;
  double objective_;
  std::vector<std::vector<std::vector<double>>> x_;
  std::vector<std::vector<std::vector<double>>> cumulative_;  // conditional CDF over S
};

ConfigLpSolution solve_configuration_lp(const Instance& inst, std::size_t set_cap = kConfigLpSetCap);

// b_j = sum_{i,k} sum_{S containing j} v_{i,j}^{k,S} x[i][k][S], where
// v^{k,S} is the supporting clause of v_i^k on S.
std::vector<double> xos_base_prices(const Instance& inst, const ConfigLpSolution& sol);

}  // namespace prophet

#endif  // PROPHET_CONFIG_LP_H_
