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

#ifndef PROPHET_GENERATORS_H_
#define PROPHET_GENERATORS_H_

#include <cstddef>
#include <cstdint>

#include "prophet/distributions.h"
#include "prophet/instance.h"
#include "prophet/matroid.h"
#include "prophet/random.h"

namespace prophet {

// Random instances for the test families. Every generator is a pure
// function of its arguments; support sizes are drawn from [1, max_support].
struct GeneratorOptions {
  std::size_t max_support = 3;
  double max_value = 10.0;
  double zero_prob = 0.25;  // chance that a per-item value is zeroed
  std::size_t clauses = 2;  // XOS clauses per valuation, at most
};

// Distribution with distinct values in [0, max_value].
DiscreteDistribution random_distribution(RandomStream& rng, std::size_t max_support,
                                         double max_value);

Instance random_single_item(std::size_t buyers, const GeneratorOptions& options, std::uint64_t seed);
Instance random_matroid_instance(Matroid matroid, const GeneratorOptions& options,
                                 std::uint64_t seed);
Instance random_matching(std::size_t buyers, std::size_t items, const GeneratorOptions& options,
                         std::uint64_t seed);
Instance random_xos(std::size_t buyers, std::size_t items, const GeneratorOptions& options,
                    std::uint64_t seed);

// Graphic matroid of the complete graph K4 (6 edges).
Matroid k4_graphic();
// `blocks` blocks of `block_size` consecutive elements, each with `capacity`.
Matroid uniform_blocks_partition(std::size_t blocks, std::size_t block_size, std::size_t capacity);

}  // namespace prophet

#endif  // PROPHET_GENERATORS_H_
