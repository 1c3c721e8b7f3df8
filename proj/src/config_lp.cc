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

#include <algorithm>
#include <sstream>

#include "prophet/errors.h"
#include "prophet/stats.h"

namespace prophet {

ConfigLp build_configuration_lp(const Instance& inst, std::size_t set_cap) {
  if (inst.is_scalar()) throw ValidationError("configuration LP needs an item setting");
  const std::size_t m = inst.items;
  if (m >= 32 || (std::size_t{1} << m) > set_cap) {
    std::ostringstream msg;
    msg << "configuration LP over 2^" << m << " sets exceeds cap " << set_cap;
    throw CapacityError(msg.str());
  }
  const std::size_t sets = std::size_t{1} << m;
  ConfigLp lp;
  lp.items = m;
  std::size_t vars = 0;
  lp.offset.resize(inst.buyer_count());
  for (std::size_t i = 0; i < inst.buyer_count(); ++i) {
    for (std::size_t k = 0; k < inst.support_size(i); ++k) {
      lp.offset[i].push_back(vars);
      vars += sets;
    }
  }
  lp.problem.objective.assign(vars, 0.0);
  for (std::size_t i = 0; i < inst.buyer_count(); ++i) {
    for (std::size_t k = 0; k < inst.support_size(i); ++k) {
      const auto& v = inst.bundle_buyers[i].valuation(k);
      for (ItemSet s = 0; s < sets; ++s) lp.problem.objective[lp.variable(i, k, s)] = value(v, s);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    LpConstraint row{std::vector<double>(vars, 0.0), Relation::kLessEqual, 1.0};
    for (std::size_t i = 0; i < inst.buyer_count(); ++i) {
      for (std::size_t k = 0; k < inst.support_size(i); ++k) {
        for (ItemSet s = 0; s < sets; ++s) {
          if (contains(s, j)) row.coeffs[lp.variable(i, k, s)] = 1.0;
        }
      }
    }
    lp.problem.constraints.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < inst.buyer_count(); ++i) {
    for (std::size_t k = 0; k < inst.support_size(i); ++k) {
      LpConstraint row{std::vector<double>(vars, 0.0), Relation::kEqual, inst.support_prob(i, k)};
      for (ItemSet s = 0; s < sets; ++s) row.coeffs[lp.variable(i, k, s)] = 1.0;
      lp.problem.constraints.push_back(std::move(row));
    }
  }
  return lp;
}

ConfigLpSolution::ConfigLpSolution(const Instance& inst, const ConfigLp& lp, const LpSolution& raw)
    : items_(lp.items), objective_(raw.objective) {
  const std::size_t sets = std::size_t{1} << items_;
  x_.resize(inst.buyer_count());
  cumulative_.resize(inst.buyer_count());
  for (std::size_t i = 0; i < inst.buyer_count(); ++i) {
    for (std::size_t k = 0; k < inst.support_size(i); ++k) {
      std::vector<double> xs(sets);
      std::vector<double> cdf(sets);
      const double p = inst.support_prob(i, k);
      double run = 0.0;
      for (ItemSet s = 0; s < sets; ++s) {
        xs[s] = std::max(0.0, raw.x[lp.variable(i, k, s)]);
        // The empty set is listed last so rounding leftovers fall on it.
        if (s != 0) {
          run += xs[s] / p;
          cdf[s] = run;
        }
      }
      cdf[0] = 1.0;
      x_[i].push_back(std::move(xs));
      cumulative_[i].push_back(std::move(cdf));
    }
  }
}

ItemSet ConfigLpSolution::draw_set(std::size_t buyer, std::size_t k, double u) const {
  const auto& cdf = cumulative_[buyer][k];
  for (ItemSet s = 1; s < cdf.size(); ++s) {
    if (u < cdf[s]) return s;
  }
  return 0;
}

ConfigLpSolution solve_configuration_lp(const Instance& inst, std::size_t set_cap) {
  const ConfigLp lp = build_configuration_lp(inst, set_cap);
  const LpSolution raw = solve_lp(lp.problem);
  return ConfigLpSolution(inst, lp, raw);
}

std::vector<double> xos_base_prices(const Instance& inst, const ConfigLpSolution& sol) {
  const std::size_t m = sol.items();
  const std::size_t sets = std::size_t{1} << m;
  std::vector<CompensatedSum> acc(m);
  for (std::size_t i = 0; i < inst.buyer_count(); ++i) {
    for (std::size_t k = 0; k < inst.support_size(i); ++k) {
      const auto& v = inst.bundle_buyers[i].valuation(k);
      for (ItemSet s = 1; s < sets; ++s) {
        const double x = sol.x(i, k, s);
        if (x == 0.0) continue;
        const auto& clause = v.clauses()[xos_oracle(v, s)];
        for (std::size_t j = 0; j < m; ++j) {
          if (contains(s, j)) acc[j].add(clause[j] * x);
        }
      }
    }
  }
  std::vector<double> b(m);
  for (std::size_t j = 0; j < m; ++j) b[j] = acc[j].value();
  return b;
}

}  // namespace prophet
