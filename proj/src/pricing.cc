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

#include "prophet/pricing.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "prophet/errors.h"
#include "prophet/stats.h"

namespace prophet {

double discount(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::out_of_range("discount: t must lie in [0,1]");
  return -std::expm1(t - 1.0);
}

SingleItemPrice single_item_base_price(std::span<const DiscreteDistribution> dists,
                                       const ExpectationOptions& options, std::uint64_t seed) {
  RandomStream rng(seed, kPriceStream);
  const ExpectationEstimate e = expected_max(dists, options.budget, rng, options.mc_samples);
  return {e.mean, e};
}

ItemPrices matching_base_prices(const Instance& inst, const ExpectationOptions& options,
                                std::uint64_t seed) {
  if (inst.kind != SettingKind::kMatching) throw ValidationError("matching prices need a matching instance");
  const std::size_t m = inst.items;
  std::vector<CompensatedSum> acc(m);
  ItemPrices out;
  out.seed = seed;
  auto accumulate = [&](const ValueProfile& profile, double weight) {
    const auto w = item_values(inst, profile);
    const Matching match = max_weight_matching(w);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (const auto j = match.item_of_buyer[i]) acc[*j].add(weight * w[i][*j]);
    }
  };
  const auto sizes = inst.support_sizes();
  if (product_size(sizes) <= options.budget) {
    const auto probs = inst.support_probs();
    ValueProfile profile;
    for_each_profile(sizes, probs, [&](std::span<const std::size_t> idx, double p) {
      profile.atom.assign(idx.begin(), idx.end());
      accumulate(profile, p);
    });
    out.method = EstimateMethod::kExact;
  } else {
    RandomStream rng(seed, kPriceStream);
    const double w = 1.0 / static_cast<double>(options.mc_samples);
    for (std::size_t s = 0; s < options.mc_samples; ++s) accumulate(sample_profile(inst, rng), w);
    out.method = EstimateMethod::kMonteCarlo;
    out.samples = options.mc_samples;
  }
  out.b.resize(m);
  for (std::size_t j = 0; j < m; ++j) out.b[j] = acc[j].value();
  return out;
}

ValuePanel build_value_panel(std::span<const DiscreteDistribution> dists,
                             const MatroidPricingOptions& options, std::uint64_t seed) {
  ValuePanel panel;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<double>> probs;
  for (const auto& d : dists) {
    sizes.push_back(d.size());
    std::vector<double> p;
    for (const Atom& a : d.atoms()) p.push_back(a.prob);
    probs.push_back(std::move(p));
  }
  if (product_size(sizes) <= options.exact_budget) {
    for_each_profile(sizes, probs, [&](std::span<const std::size_t> idx, double p) {
      std::vector<double> values(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) values[i] = dists[i].value(idx[i]);
      panel.profiles.push_back(std::move(values));
      panel.weights.push_back(p);
    });
    panel.exact = true;
    return panel;
  }
  RandomStream rng(seed, kPriceStream);
  const double w = 1.0 / static_cast<double>(options.k_samples);
  for (std::size_t s = 0; s < options.k_samples; ++s) {
    std::vector<double> values(dists.size());
    for (std::size_t i = 0; i < dists.size(); ++i) values[i] = dists[i].sample(rng);
    panel.profiles.push_back(std::move(values));
    panel.weights.push_back(w);
  }
  panel.exact = false;
  return panel;
}

double matroid_base_price(const Matroid& m, ElementSet accepted, std::size_t element,
                          const ValuePanel& panel) {
  const ElementSet grown = accepted | singleton(element);
  if (has_element(accepted, element) || !m.is_independent(grown)) {
    throw ValidationError("matroid base price needs A + i independent with i outside A");
  }
  CompensatedSum total;
  for (std::size_t p = 0; p < panel.profiles.size(); ++p) {
    const double before = remaining_value(m, accepted, panel.profiles[p]);
    const double after = remaining_value(m, grown, panel.profiles[p]);
    total.add(panel.weights[p] * (before - after));
  }
  return std::max(0.0, total.value());
}

MatroidPricer::MatroidPricer(Matroid matroid, std::span<const DiscreteDistribution> dists,
                             const MatroidPricingOptions& options, std::uint64_t seed)
    : matroid_(std::move(matroid)), panel_(build_value_panel(dists, options, seed)) {
  if (dists.size() != matroid_.ground_size()) {
    throw ValidationError("matroid pricer needs one distribution per element");
  }
  orders_.reserve(panel_.profiles.size());
  for (const auto& profile : panel_.profiles) orders_.push_back(greedy_order(profile));

  // Breadth-first enumeration of independent sets; give up on tabulating
  // when there are too many.
  std::unordered_map<ElementSet, double> table;
  std::deque<ElementSet> frontier{0};
  table.emplace(0, 0.0);
  const std::size_t n = matroid_.ground_size();
  bool fits = true;
  while (!frontier.empty() && fits) {
    const ElementSet a = frontier.front();
    frontier.pop_front();
    for (std::size_t e = 0; e < n; ++e) {
      if (has_element(a, e)) continue;
      const ElementSet grown = a | singleton(e);
      if (table.count(grown) != 0 || !matroid_.is_independent(grown)) continue;
      if (table.size() >= options.table_limit) {
        fits = false;
        break;
      }
      table.emplace(grown, 0.0);
      frontier.push_back(grown);
    }
  }
  if (fits) {
    for (auto& [set, value] : table) value = compute_remaining(set);
    table_ = std::move(table);
  }
}

double MatroidPricer::compute_remaining(ElementSet accepted) const {
  CompensatedSum total;
  for (std::size_t p = 0; p < panel_.profiles.size(); ++p) {
    total.add(panel_.weights[p] *
              greedy_opt_ordered(matroid_, panel_.profiles[p], orders_[p], accepted).total);
  }
  return total.value();
}

double MatroidPricer::expected_remaining(ElementSet accepted) const {
  if (!table_.empty()) {
    const auto it = table_.find(accepted);
    if (it != table_.end()) return it->second;
  }
  return compute_remaining(accepted);
}

double MatroidPricer::base_price(ElementSet accepted, std::size_t element) const {
  if (table_.empty()) return matroid_base_price(matroid_, accepted, element, panel_);
  const double before = expected_remaining(accepted);
  const double after = expected_remaining(accepted | singleton(element));
  return std::max(0.0, before - after);
}

}  // namespace prophet
