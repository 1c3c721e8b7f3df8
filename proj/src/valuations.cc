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

#include "prophet/valuations.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "prophet/distributions.h"
#include "prophet/errors.h"
#include "prophet/stats.h"

namespace prophet {

XosValuation::XosValuation(std::vector<AdditiveClause> clauses) : clauses_(std::move(clauses)) {
  if (clauses_.empty()) throw ValidationError("XOS valuation needs at least one clause");
  items_ = clauses_.front().size();
  if (items_ > kMaxItems) throw CapacityError("too many items for an XOS valuation");
  for (const auto& c : clauses_) {
    if (c.size() != items_) throw ValidationError("XOS clauses have different item counts");
    for (double x : c) {
      if (!std::isfinite(x) || x < 0.0) {
        throw ValidationError("XOS clause entries must be finite and nonnegative");
      }
    }
  }
}

XosValuation XosValuation::additive(std::vector<double> per_item) {
  return XosValuation({std::move(per_item)});
}

XosValuation XosValuation::unit_demand(const std::vector<double>& per_item) {
  std::vector<AdditiveClause> clauses;
  for (std::size_t j = 0; j < per_item.size(); ++j) {
    AdditiveClause c(per_item.size(), 0.0);
    c[j] = per_item[j];
    clauses.push_back(std::move(c));
  }
  if (clauses.empty()) clauses.emplace_back();
  return XosValuation(std::move(clauses));
}

double XosValuation::item_value(std::size_t j) const {
  double best = 0.0;
  for (const auto& c : clauses_) best = std::max(best, c[j]);
  return best;
}

double clause_sum(const AdditiveClause& clause, ItemSet s) {
  double total = 0.0;
  for (std::size_t j = 0; j < clause.size(); ++j) {
    if (contains(s, j)) total += clause[j];
  }
  return total;
}

double value(const XosValuation& v, ItemSet s) {
  return clause_sum(v.clauses()[xos_oracle(v, s)], s);
}

std::size_t xos_oracle(const XosValuation& v, ItemSet s) {
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t k = 0; k < v.clauses().size(); ++k) {
    const double x = clause_sum(v.clauses()[k], s);
    if (x > best_value) {
      best_value = x;
      best = k;
    }
  }
  return best;
}

namespace {

// True when item list of a precedes that of b lexicographically.
bool lex_less(ItemSet a, ItemSet b) {
  while (a != 0 && b != 0) {
    const int ja = std::countr_zero(a);
    const int jb = std::countr_zero(b);
    if (ja != jb) return ja < jb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

Demand demand_oracle(const XosValuation& v, std::span<const double> prices, std::size_t cap) {
  const std::size_t m = v.item_count();
  if (m > cap) {
    std::ostringstream msg;
    msg << "demand oracle enumerates 2^" << m << " sets, cap is " << cap << " items";
    throw CapacityError(msg.str());
  }
  if (prices.size() != m) throw ValidationError("demand oracle price vector has wrong length");
  Demand best{0, 0.0};
  const ItemSet limit = static_cast<ItemSet>(1U << m);
  for (ItemSet s = 1; s < limit; ++s) {
    double surplus = value(v, s);
    for (std::size_t j = 0; j < m; ++j) {
      if (contains(s, j)) surplus -= prices[j];
    }
    const int size = std::popcount(s);
    const int best_size = std::popcount(best.set);
    const bool better = surplus > best.surplus ||
                        (surplus == best.surplus &&
                         (size < best_size || (size == best_size && lex_less(s, best.set))));
    if (better) best = {s, surplus};
  }
  return best;
}

BuyerValuationDistribution::BuyerValuationDistribution(std::vector<WeightedValuation> support)
    : support_(std::move(support)) {
  if (support_.empty()) throw ValidationError("valuation distribution has no support");
  CompensatedSum total;
  const std::size_t m = support_.front().valuation.item_count();
  for (const auto& w : support_) {
    if (w.valuation.item_count() != m) {
      throw ValidationError("valuations in one support have different item counts");
    }
    if (!(w.prob > 0.0 && w.prob <= 1.0)) {
      std::ostringstream msg;
      msg << "support probability " << w.prob << " is outside (0,1]";
      throw ValidationError(msg.str());
    }
    total.add(w.prob);
  }
  if (std::abs(total.value() - 1.0) > kProbTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "probabilities sum to " << total.value() << ", expected 1";
    throw ValidationError(msg.str());
  }
  double run = 0.0;
  for (const auto& w : support_) {
    run += w.prob;
    cumulative_.push_back(run);
  }
  cumulative_.back() = 1.0;
}

std::size_t BuyerValuationDistribution::index_for(double u) const {
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) return support_.size() - 1;
  return static_cast<std::size_t>(it - cumulative_.begin());
}

bool operator==(const BuyerValuationDistribution& a, const BuyerValuationDistribution& b) {
  if (a.support_.size() != b.support_.size()) return false;
  for (std::size_t k = 0; k < a.support_.size(); ++k) {
    if (!(a.support_[k].valuation == b.support_[k].valuation) ||
        a.support_[k].prob != b.support_[k].prob) {
      return false;
    }
  }
  return true;
}

}  // namespace prophet
