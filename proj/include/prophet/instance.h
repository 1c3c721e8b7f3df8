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

#ifndef PROPHET_INSTANCE_H_
#define PROPHET_INSTANCE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prophet/distributions.h"
#include "prophet/matroid.h"
#include "prophet/random.h"
#include "prophet/valuations.h"

namespace prophet {

enum class SettingKind { kSingleItem, kMatroid, kMatching, kXos };

std::string to_string(SettingKind kind);
SettingKind setting_from_string(const std::string& name);

// Buyers with independent finite-support valuations plus a feasibility
// structure. Single-item and matroid buyers carry scalar distributions;
// matching and XOS buyers carry per-item valuation distributions (matching
// buyers are unit-demand).
struct Instance {
  std::string name;
  SettingKind kind = SettingKind::kSingleItem;
  std::size_t items = 0;  // matching / XOS only
  std::optional<Matroid> matroid;
  std::vector<DiscreteDistribution> scalar_buyers;
  std::vector<BuyerValuationDistribution> bundle_buyers;

  static Instance single_item(std::vector<DiscreteDistribution> buyers, std::string name = {});
  static Instance matroid_setting(Matroid m, std::vector<DiscreteDistribution> buyers,
                                  std::string name = {});
  static Instance matching(std::size_t items, std::vector<BuyerValuationDistribution> buyers,
                           std::string name = {});
  static Instance xos(std::size_t items, std::vector<BuyerValuationDistribution> buyers,
                      std::string name = {});

  bool is_scalar() const { return kind == SettingKind::kSingleItem || kind == SettingKind::kMatroid; }
  std::size_t buyer_count() const;
  std::size_t support_size(std::size_t buyer) const;
  double support_prob(std::size_t buyer, std::size_t k) const;
  std::vector<std::size_t> support_sizes() const;
  std::vector<std::vector<double>> support_probs() const;
  // Items that can be sold: 1 for single item, ground size for matroids.
  std::size_t sellable_count() const;

  // Throws ValidationError naming the violated invariant.
  void validate() const;

  friend bool operator==(const Instance& a, const Instance& b);
};

// One realized valuation per buyer, as support indices.
struct ValueProfile {
  std::vector<std::size_t> atom;
};

// Realized scalar value of buyer i (single item / matroid).
double scalar_value(const Instance& inst, const ValueProfile& profile, std::size_t buyer);

// Realized per-item values v_{ij} = v_i({j}) (matching / XOS).
std::vector<std::vector<double>> item_values(const Instance& inst, const ValueProfile& profile);

// Draws one support index per buyer, one uniform each, buyer order.
ValueProfile sample_profile(const Instance& inst, RandomStream& rng);

}  // namespace prophet

#endif  // PROPHET_INSTANCE_H_
