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

#ifndef PROPHET_MATROID_H_
#define PROPHET_MATROID_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace prophet {

// Element sets over a ground set of at most 64 elements.
using ElementSet = std::uint64_t;

inline constexpr std::size_t kMaxGroundSize = 64;

inline bool has_element(ElementSet s, std::size_t e) { return (s >> e) & 1ULL; }
inline ElementSet singleton(std::size_t e) { return ElementSet{1} << e; }

struct UniformKind {
  std::size_t rank;
};

struct PartitionKind {
  std::vector<std::size_t> block_of;    // block index per element
  std::vector<std::size_t> capacities;  // per block
};

struct GraphicKind {
  std::size_t vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // element e is edges[e]
};

class Matroid {
 public:
  static Matroid uniform(std::size_t ground_size, std::size_t rank);
  static Matroid partition(std::vector<std::size_t> block_of, std::vector<std::size_t> capacities);
  static Matroid graphic(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t ground_size() const { return ground_size_; }
  const std::variant<UniformKind, PartitionKind, GraphicKind>& kind() const { return kind_; }

  bool is_independent(ElementSet s) const;
  std::size_t rank() const;

  friend bool operator==(const Matroid& a, const Matroid& b);

 private:
  Matroid(std::size_t n, std::variant<UniformKind, PartitionKind, GraphicKind> kind)
      : ground_size_(n), kind_(std::move(kind)) {}

  std::size_t ground_size_;
  std::variant<UniformKind, PartitionKind, GraphicKind> kind_;
};

struct GreedyResult {
  ElementSet set = 0;
  double total = 0.0;
};

// Max-weight independent set of the contraction M/contracted. Elements are
// scanned by weight descending (index ascending on ties); zero-weight
// elements are never taken since they cannot change the total.
GreedyResult greedy_opt(const Matroid& m, std::span<const double> weights, ElementSet contracted);

// Same scan with a caller-supplied element order, for hot loops that reuse
// one sorted order across many contractions.
GreedyResult greedy_opt_ordered(const Matroid& m, std::span<const double> weights,
                                std::span<const std::size_t> order, ElementSet contracted);

// Order used by greedy_opt: weight descending, index ascending.
std::vector<std::size_t> greedy_order(std::span<const double> weights);

// R(A, v): value of the optimum of M/A under weights v.
double remaining_value(const Matroid& m, ElementSet accepted, std::span<const double> weights);

}  // namespace prophet

#endif  // PROPHET_MATROID_H_
