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

#ifndef PROPHET_PRICING_H_
#define PROPHET_PRICING_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "prophet/distributions.h"
#include "prophet/instance.h"
#include "prophet/matroid.h"
#include "prophet/offline.h"

namespace prophet {

// alpha(t) = 1 - e^{t-1}; solves 1 - alpha + alpha' = 0 with alpha(1) = 0.
// Throws std::out_of_range outside [0, 1].
double discount(double t);

struct SingleItemPrice {
  double b = 0.0;
  ExpectationEstimate estimate;
};

// Per-item prices together with how they were estimated.
struct ItemPrices {
  std::vector<double> b;
  EstimateMethod method = EstimateMethod::kExact;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

// b = E[max_i v_i].
SingleItemPrice single_item_base_price(std::span<const DiscreteDistribution> dists,
                                       const ExpectationOptions& options, std::uint64_t seed);

// b_j = E[value of j's partner in the tie-broken maximum matching], 0 for
// profiles where j is unmatched.
ItemPrices matching_base_prices(const Instance& inst, const ExpectationOptions& options,
                                std::uint64_t seed);

// Weighted set of value profiles standing in for the expectation over a
// fresh sample v-hat. Exact panels hold the whole product support with
// its probabilities; sampled panels hold K draws with weight 1/K.
struct ValuePanel {
  std::vector<std::vector<double>> profiles;
  std::vector<double> weights;
  bool exact = true;
};

struct MatroidPricingOptions {
  std::size_t k_samples = 512;
  std::size_t exact_budget = 4096;
  std::size_t table_limit = 1 << 16;  // independent sets precomputed at most
};

ValuePanel build_value_panel(std::span<const DiscreteDistribution> dists,
                             const MatroidPricingOptions& options, std::uint64_t seed);

// b_i(A) = E[R(A, v) - R(A + i, v)] over the panel. Requires A + i independent.
double matroid_base_price(const Matroid& m, ElementSet accepted, std::size_t element,
                          const ValuePanel& panel);

// Read-only handle answering b_i(A) queries during trials. When the
// independent sets fit under table_limit, E[R(A, .)] is tabulated up front.
class MatroidPricer {
 public:
  MatroidPricer(Matroid matroid, std::span<const DiscreteDistribution> dists,
                const MatroidPricingOptions& options, std::uint64_t seed);

  double base_price(ElementSet accepted, std::size_t element) const;
  // E[R(A, .)] under the panel.
  double expected_remaining(ElementSet accepted) const;

  const Matroid& matroid() const { return matroid_; }
  const ValuePanel& panel() const { return panel_; }
  bool tabulated() const { return !table_.empty(); }

 private:
  double compute_remaining(ElementSet accepted) const;

  Matroid matroid_;
  ValuePanel panel_;
  std::vector<std::vector<std::size_t>> orders_;  // greedy order per panel profile
  std::unordered_map<ElementSet, double> table_;
};

using BasePrices = std::variant<SingleItemPrice, ItemPrices, std::shared_ptr<const MatroidPricer>>;

}  // namespace prophet

#endif  // PROPHET_PRICING_H_
