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

#include "prophet/offline.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "prophet/errors.h"
#include "prophet/matroid.h"
#include "prophet/stats.h"

namespace prophet {
namespace {

// Min-cost assignment on a square cost matrix (potentials + shortest
// augmenting paths, O(k^3)). Returns the column assigned to each row.
std::vector<std::size_t> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t k = cost.size();
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based internally; index 0 is the virtual source.
  std::vector<double> u(k + 1, 0.0), v(k + 1, 0.0);
  std::vector<std::size_t> row_of_col(k + 1, 0), way(k + 1, 0);
  for (std::size_t i = 1; i <= k; ++i) {
    row_of_col[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(k + 1, inf);
    std::vector<char> used(k + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of_col[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= k; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> col_of_row(k, 0);
  for (std::size_t j = 1; j <= k; ++j) {
    if (row_of_col[j] != 0) col_of_row[row_of_col[j] - 1] = j - 1;
  }
  return col_of_row;
}

double submatrix_value(const WeightMatrix& w, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
  if (rows.empty() || cols.empty()) return 0.0;
  const std::size_t k = std::max(rows.size(), cols.size());
  double top = 0.0;
  for (std::size_t r : rows) {
    for (std::size_t c : cols) top = std::max(top, w[r][c]);
  }
  std::vector<std::vector<double>> cost(k, std::vector<double>(k, top));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) cost[a][b] = top - w[rows[a]][cols[b]];
  }
  const auto assign = min_cost_assignment(cost);
  double total = 0.0;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (assign[a] < cols.size()) total += w[rows[a]][cols[assign[a]]];
  }
  return total;
}

void check_weights(const WeightMatrix& w) {
  for (const auto& row : w) {
    if (!w.empty() && row.size() != w.front().size()) {
      throw ValidationError("weight matrix rows have different lengths");
    }
    for (double x : row) {
      if (!std::isfinite(x) || x < 0.0) throw ValidationError("matching weights must be finite and nonnegative");
    }
  }
}

bool near_at_least(double x, double target) {
  return x >= target - 1e-9 * (1.0 + std::abs(target));
}

}  // namespace

double max_weight_matching_value(const WeightMatrix& weights) {
  check_weights(weights);
  if (weights.empty()) return 0.0;
  std::vector<std::size_t> rows(weights.size()), cols(weights.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return submatrix_value(weights, rows, cols);
}

Matching max_weight_matching(const WeightMatrix& weights) {
  check_weights(weights);
  Matching out;
  out.item_of_buyer.assign(weights.size(), std::nullopt);
  if (weights.empty() || weights.front().empty()) return out;
  const std::size_t n = weights.size();
  const std::size_t m = weights.front().size();

  std::vector<std::size_t> rows_left, cols_left;
  for (std::size_t i = 0; i < n; ++i) rows_left.push_back(i);
  for (std::size_t j = 0; j < m; ++j) cols_left.push_back(j);
  double target = submatrix_value(weights, rows_left, cols_left);

  // Fix buyers in index order, each to the smallest item that still admits
  // an optimal completion; this yields the lexicographically smallest edge
  // list among optimal matchings.
  for (std::size_t i = 0; i < n; ++i) {
    rows_left.erase(std::find(rows_left.begin(), rows_left.end(), i));
    bool fixed = false;
    for (std::size_t pos = 0; pos < cols_left.size(); ++pos) {
      const std::size_t j = cols_left[pos];
      if (!(weights[i][j] > 0.0)) continue;
      std::vector<std::size_t> rest_cols = cols_left;
      rest_cols.erase(rest_cols.begin() + static_cast<std::ptrdiff_t>(pos));
      const double rest = submatrix_value(weights, rows_left, rest_cols);
      if (near_at_least(weights[i][j] + rest, target)) {
        out.item_of_buyer[i] = j;
        out.value += weights[i][j];
        cols_left = std::move(rest_cols);
        target = rest;
        fixed = true;
        break;
      }
    }
    if (!fixed) target = submatrix_value(weights, rows_left, cols_left);
  }
  return out;
}

XosAllocation xos_welfare_opt(std::span<const XosValuation> valuations, std::size_t items,
                              std::size_t item_cap) {
  if (items > item_cap) {
    std::ostringstream msg;
    msg << "XOS welfare enumeration over " << items << " items exceeds cap " << item_cap;
    throw CapacityError(msg.str());
  }
  const std::size_t n = valuations.size();
  for (const auto& v : valuations) {
    if (v.item_count() != items) throw ValidationError("valuation item count mismatch");
  }
  XosAllocation best;
  best.buyer_of_item.assign(items, std::nullopt);
  best.bundle_of_buyer.assign(n, 0);
  // owner[j] in [0, n]; n means unassigned. Odometer over items.
  std::vector<std::size_t> owner(items, n);
  std::vector<ItemSet> bundles(n, 0);
  bool first = true;
  while (true) {
    std::fill(bundles.begin(), bundles.end(), 0);
    for (std::size_t j = 0; j < items; ++j) {
      if (owner[j] < n) bundles[owner[j]] |= ItemSet{1} << j;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (bundles[i] != 0) total += value(valuations[i], bundles[i]);
    }
    if (first || total > best.value) {
      first = false;
      best.value = total;
      best.bundle_of_buyer = bundles;
      for (std::size_t j = 0; j < items; ++j) {
        best.buyer_of_item[j] = owner[j] < n ? std::optional<std::size_t>(owner[j]) : std::nullopt;
      }
    }
    std::size_t pos = 0;
    while (pos < items) {
      if (owner[pos] == n) {
        owner[pos] = 0;
        break;
      }
      if (++owner[pos] < n) break;
      owner[pos] = n;
      ++pos;
    }
    if (pos == items) break;
  }
  return best;
}

double offline_value(const Instance& inst, const ValueProfile& profile) {
  const std::size_t n = inst.buyer_count();
  switch (inst.kind) {
    case SettingKind::kSingleItem: {
      double best = 0.0;
      for (std::size_t i = 0; i < n; ++i) best = std::max(best, scalar_value(inst, profile, i));
      return best;
    }
    case SettingKind::kMatroid: {
      std::vector<double> w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = scalar_value(inst, profile, i);
      return greedy_opt(*inst.matroid, w, 0).total;
    }
    case SettingKind::kMatching:
      return max_weight_matching_value(item_values(inst, profile));
    case SettingKind::kXos: {
      std::vector<XosValuation> vals;
      vals.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        vals.push_back(inst.bundle_buyers[i].valuation(profile.atom[i]));
      }
      return xos_welfare_opt(vals, inst.items).value;
    }
  }
  return 0.0;
}

ExpectationEstimate expected_opt(const Instance& inst, const ExpectationOptions& options,
                                 std::uint64_t seed) {
  const auto sizes = inst.support_sizes();
  if (product_size(sizes) <= options.budget) {
    const auto probs = inst.support_probs();
    CompensatedSum total;
    ValueProfile profile;
    for_each_profile(sizes, probs, [&](std::span<const std::size_t> idx, double p) {
      profile.atom.assign(idx.begin(), idx.end());
      total.add(p * offline_value(inst, profile));
    });
    return {total.value(), 0.0, EstimateMethod::kExact, 0};
  }
  RandomStream rng(seed, kOptStream);
  std::vector<double> draws(options.mc_samples);
  for (auto& x : draws) x = offline_value(inst, sample_profile(inst, rng));
  const SampleMoments m = sample_moments(draws);
  return {m.mean, m.std_error, EstimateMethod::kMonteCarlo, options.mc_samples};
}

}  // namespace prophet
