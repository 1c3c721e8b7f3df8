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

#ifndef PROPHET_VALUATIONS_H_
#define PROPHET_VALUATIONS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prophet/random.h"

namespace prophet {

// Item sets are bitmasks; bit j set means item j is in the set.
using ItemSet = std::uint32_t;

inline constexpr std::size_t kMaxItems = 31;
inline constexpr std::size_t kDemandOracleCap = 16;

inline bool contains(ItemSet s, std::size_t j) { return (s >> j) & 1U; }

using AdditiveClause = std::vector<double>;

// v(S) = max_k sum_{j in S} clause_k[j].
class XosValuation {
 public:
  explicit XosValuation(std::vector<AdditiveClause> clauses);

  static XosValuation additive(std::vector<double> per_item);
  // One singleton clause per item, so v(S) = max_{j in S} per_item[j].
  static XosValuation unit_demand(const std::vector<double>& per_item);

  std::size_t item_count() const { return items_; }
  const std::vector<AdditiveClause>& clauses() const { return clauses_; }

  // Value of the single item {j}.
  double item_value(std::size_t j) const;

  friend bool operator==(const XosValuation&, const XosValuation&) = default;

 private:
  std::vector<AdditiveClause> clauses_;
  std::size_t items_;
};

double clause_sum(const AdditiveClause& clause, ItemSet s);

double value(const XosValuation& v, ItemSet s);

// Index of the supporting clause for S: the clause attaining value(v, S),
// smallest index on ties.
std::size_t xos_oracle(const XosValuation& v, ItemSet s);

struct Demand {
  ItemSet set = 0;
  double surplus = 0.0;
};

// argmax_S value(v,S) - sum_{j in S} prices[j] by enumeration. Ties go to
// the smaller cardinality, then lexicographically smaller item list.
// Throws CapacityError above `cap` items.
Demand demand_oracle(const XosValuation& v, std::span<const double> prices,
                     std::size_t cap = kDemandOracleCap);

struct WeightedValuation {
  XosValuation valuation;
  double prob;
};

// Finite distribution over XOS valuations sharing one item count.
class BuyerValuationDistribution {
 public:
  explicit BuyerValuationDistribution(std::vector<WeightedValuation> support);

  std::size_t size() const { return support_.size(); }
  std::size_t item_count() const { return support_.front().valuation.item_count(); }
  const XosValuation& valuation(std::size_t k) const { return support_[k].valuation; }
  double prob(std::size_t k) const { return support_[k].prob; }
  const std::vector<WeightedValuation>& support() const { return support_; }

  std::size_t index_for(double u) const;
  std::size_t sample_index(RandomStream& rng) const { return index_for(rng.uniform()); }

  friend bool operator==(const BuyerValuationDistribution& a, const BuyerValuationDistribution& b);

 private:
  std::vector<WeightedValuation> support_;
  std::vector<double> cumulative_;
};

}  // namespace prophet

#endif  // PROPHET_VALUATIONS_H_
