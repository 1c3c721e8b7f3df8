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

#ifndef PROPHET_OFFLINE_H_
#define PROPHET_OFFLINE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "prophet/distributions.h"
#include "prophet/instance.h"
#include "prophet/valuations.h"

namespace prophet {

using WeightMatrix = std::vector<std::vector<double>>;  // rows = buyers, cols = items

struct Matching {
  std::vector<std::optional<std::size_t>> item_of_buyer;
  double value = 0.0;
};

// Maximum-weight bipartite matching value (Hungarian method).
double max_weight_matching_value(const WeightMatrix& weights);

// Maximum-weight matching. Zero-weight edges are never used, and among
// optimal matchings the lexicographically smallest (buyer, item) edge list
// is returned, so the result is unique.
Matching max_weight_matching(const WeightMatrix& weights);

inline constexpr std::size_t kXosWelfareItemCap = 8;

struct XosAllocation {
  std::vector<std::optional<std::size_t>> buyer_of_item;
  std::vector<ItemSet> bundle_of_buyer;
  double value = 0.0;
};

// Exact welfare optimum over all (n+1)^m item assignments.
XosAllocation xos_welfare_opt(std::span<const XosValuation> valuations, std::size_t items,
                              std::size_t item_cap = kXosWelfareItemCap);

struct ExpectationOptions {
  std::size_t budget = 65536;       // exact enumeration cap on product support size
  std::size_t mc_samples = 200000;  // Monte Carlo draws beyond the cap
};

// Offline optimum of the realized profile under the instance's setting.
double offline_value(const Instance& inst, const ValueProfile& profile);

// E[OPT] over value profiles (arrival times never matter offline).
ExpectationEstimate expected_opt(const Instance& inst, const ExpectationOptions& options,
                                 std::uint64_t seed);

}  // namespace prophet

#endif  // PROPHET_OFFLINE_H_
