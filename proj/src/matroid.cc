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

#include "prophet/matroid.h"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "prophet/errors.h"

namespace prophet {
namespace {

void check_ground(std::size_t n) {
  if (n > kMaxGroundSize) throw CapacityError("matroid ground set exceeds 64 elements");
}

// Disjoint-set forest with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False if x and y were already connected.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

Matroid Matroid::uniform(std::size_t ground_size, std::size_t rank) {
  check_ground(ground_size);
  return Matroid(ground_size, UniformKind{rank});
}

Matroid Matroid::partition(std::vector<std::size_t> block_of, std::vector<std::size_t> capacities) {
  check_ground(block_of.size());
  for (std::size_t b : block_of) {
    if (b >= capacities.size()) throw ValidationError("partition element refers to a missing block");
  }
  const std::size_t n = block_of.size();
  return Matroid(n, PartitionKind{std::move(block_of), std::move(capacities)});
}

Matroid Matroid::graphic(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  check_ground(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= vertices || v >= vertices) throw ValidationError("graphic edge endpoint out of range");
  }
  const std::size_t n = edges.size();
  return Matroid(n, GraphicKind{vertices, std::move(edges)});
}

bool Matroid::is_independent(ElementSet s) const {
  if (ground_size_ < kMaxGroundSize && (s >> ground_size_) != 0) return false;
  return std::visit(
      [s](const auto& k) -> bool {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, UniformKind>) {
          return static_cast<std::size_t>(std::popcount(s)) <= k.rank;
        } else if constexpr (std::is_same_v<K, PartitionKind>) {
          std::vector<std::size_t> used(k.capacities.size(), 0);
          for (ElementSet rest = s; rest != 0; rest &= rest - 1) {
            const std::size_t b = k.block_of[static_cast<std::size_t>(std::countr_zero(rest))];
            if (++used[b] > k.capacities[b]) return false;
          }
          return true;
        } else {
          DisjointSets forest(k.vertices);
          for (ElementSet rest = s; rest != 0; rest &= rest - 1) {
            const auto& [u, v] = k.edges[static_cast<std::size_t>(std::countr_zero(rest))];
            if (!forest.unite(u, v)) return false;
          }
          return true;
        }
      },
      kind_);
}

std::size_t Matroid::rank() const {
  std::vector<double> ones(ground_size_, 1.0);
  return static_cast<std::size_t>(std::popcount(greedy_opt(*this, ones, 0).set));
}

bool operator==(const Matroid& a, const Matroid& b) {
  if (a.ground_size_ != b.ground_size_ || a.kind_.index() != b.kind_.index()) return false;
  if (const auto* u = std::get_if<UniformKind>(&a.kind_)) {
    return u->rank == std::get<UniformKind>(b.kind_).rank;
  }
  if (const auto* p = std::get_if<PartitionKind>(&a.kind_)) {
    const auto& q = std::get<PartitionKind>(b.kind_);
    return p->block_of == q.block_of && p->capacities == q.capacities;
  }
  const auto& g = std::get<GraphicKind>(a.kind_);
  const auto& h = std::get<GraphicKind>(b.kind_);
  return g.vertices == h.vertices && g.edges == h.edges;
}

std::vector<std::size_t> greedy_order(std::span<const double> weights) {
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
  return order;
}

GreedyResult greedy_opt_ordered(const Matroid& m, std::span<const double> weights,
                                std::span<const std::size_t> order, ElementSet contracted) {
  GreedyResult out;
  for (std::size_t e : order) {
    if (!(weights[e] > 0.0)) break;
    if (has_element(contracted, e)) continue;
    const ElementSet candidate = contracted | out.set | singleton(e);
    if (m.is_independent(candidate)) {
      out.set |= singleton(e);
      out.total += weights[e];
    }
  }
  return out;
}

GreedyResult greedy_opt(const Matroid& m, std::span<const double> weights, ElementSet contracted) {
  if (weights.size() != m.ground_size()) throw ValidationError("greedy weights have wrong length");
  if (!m.is_independent(contracted)) throw ValidationError("contracted set is not independent");
  const auto order = greedy_order(weights);
  return greedy_opt_ordered(m, weights, order, contracted);
}

double remaining_value(const Matroid& m, ElementSet accepted, std::span<const double> weights) {
  return greedy_opt(m, weights, accepted).total;
}

}  // namespace prophet
