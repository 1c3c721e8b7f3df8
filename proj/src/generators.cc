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

#include "prophet/generators.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "prophet/errors.h"

namespace prophet {
namespace {

std::size_t draw_count(RandomStream& rng, std::size_t max) {
  return 1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(max));
}

std::vector<double> draw_probs(RandomStream& rng, std::size_t k) {
  std::vector<double> w(k);
  double total = 0.0;
  for (double& x : w) {
    x = 0.1 + rng.uniform();
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

std::vector<double> draw_item_values(RandomStream& rng, std::size_t items,
                                     const GeneratorOptions& options) {
  std::vector<double> v(items);
  for (double& x : v) {
    const double u = rng.uniform();
    const double value = rng.uniform() * options.max_value;
    x = u < options.zero_prob ? 0.0 : value;
  }
  return v;
}

std::string family_name(const char* family, std::size_t n, std::size_t m, std::uint64_t seed) {
  std::ostringstream s;
  s << family << "_n" << n;
  if (m > 0) s << "_m" << m;
  s << "_s" << seed;
  return s.str();
}

void check_options(const GeneratorOptions& options) {
  if (options.max_support == 0) throw ValidationError("max_support must be at least 1");
  if (!(options.max_value > 0.0)) throw ValidationError("max_value must be positive");
}

}  // namespace

DiscreteDistribution random_distribution(RandomStream& rng, std::size_t max_support,
                                         double max_value) {
  const std::size_t k = draw_count(rng, max_support);
  std::set<double> values;
  while (values.size() < k) values.insert(rng.uniform() * max_value);
  const std::vector<double> probs = draw_probs(rng, k);
  std::vector<Atom> atoms;
  std::size_t idx = 0;
  for (double v : values) atoms.push_back({v, probs[idx++]});
  return DiscreteDistribution(std::move(atoms));
}

Instance random_single_item(std::size_t buyers, const GeneratorOptions& options, std::uint64_t seed) {
  check_options(options);
  RandomStream rng(seed, 0);
  std::vector<DiscreteDistribution> dists;
  for (std::size_t i = 0; i < buyers; ++i) {
    dists.push_back(random_distribution(rng, options.max_support, options.max_value));
  }
  return Instance::single_item(std::move(dists), family_name("single", buyers, 0, seed));
}

Instance random_matroid_instance(Matroid matroid, const GeneratorOptions& options,
                                 std::uint64_t seed) {
  check_options(options);
  RandomStream rng(seed, 0);
  std::vector<DiscreteDistribution> dists;
  for (std::size_t i = 0; i < matroid.ground_size(); ++i) {
    dists.push_back(random_distribution(rng, options.max_support, options.max_value));
  }
  const std::size_t n = matroid.ground_size();
  return Instance::matroid_setting(std::move(matroid), std::move(dists),
                                   family_name("matroid", n, 0, seed));
}

Instance random_matching(std::size_t buyers, std::size_t items, const GeneratorOptions& options,
                         std::uint64_t seed) {
  check_options(options);
  RandomStream rng(seed, 0);
  std::vector<BuyerValuationDistribution> out;
  for (std::size_t i = 0; i < buyers; ++i) {
    const std::size_t k = draw_count(rng, options.max_support);
    const std::vector<double> probs = draw_probs(rng, k);
    std::vector<WeightedValuation> support;
    for (std::size_t s = 0; s < k; ++s) {
      support.push_back({XosValuation::unit_demand(draw_item_values(rng, items, options)), probs[s]});
    }
    out.emplace_back(std::move(support));
  }
  return Instance::matching(items, std::move(out), family_name("matching", buyers, items, seed));
}

Instance random_xos(std::size_t buyers, std::size_t items, const GeneratorOptions& options,
                    std::uint64_t seed) {
  check_options(options);
  if (options.clauses == 0) throw ValidationError("clauses must be at least 1");
  RandomStream rng(seed, 0);
  std::vector<BuyerValuationDistribution> out;
  for (std::size_t i = 0; i < buyers; ++i) {
    const std::size_t k = draw_count(rng, options.max_support);
    const std::vector<double> probs = draw_probs(rng, k);
    std::vector<WeightedValuation> support;
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t c = draw_count(rng, options.clauses);
      std::vector<AdditiveClause> clauses;
      for (std::size_t l = 0; l < c; ++l) clauses.push_back(draw_item_values(rng, items, options));
      support.push_back({XosValuation(std::move(clauses)), probs[s]});
    }
    out.emplace_back(std::move(support));
  }
  return Instance::xos(items, std::move(out), family_name("xos", buyers, items, seed));
}

Matroid k4_graphic() {
  return Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Matroid uniform_blocks_partition(std::size_t blocks, std::size_t block_size, std::size_t capacity) {
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < blocks; ++b) block_of.insert(block_of.end(), block_size, b);
  return Matroid::partition(std::move(block_of), std::vector<std::size_t>(blocks, capacity));
}

}  // namespace prophet
