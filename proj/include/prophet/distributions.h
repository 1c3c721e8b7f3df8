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

#ifndef PROPHET_DISTRIBUTIONS_H_
#define PROPHET_DISTRIBUTIONS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prophet/random.h"

namespace prophet {

inline constexpr double kProbTolerance = 1e-9;

struct Atom {
  double value;
  double prob;
};

// Finite-support nonnegative distribution. Atoms are kept sorted by value
// with strictly increasing values; construction rejects anything else.
class DiscreteDistribution {
 public:
  // Atoms may be passed in any order; duplicates, negative or non-finite
  // values, probabilities outside (0,1] and sums off by more than 1e-9 throw
  // ValidationError.
  explicit DiscreteDistribution(std::vector<Atom> atoms);

  static DiscreteDistribution point_mass(double value);

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double value(std::size_t index) const { return atoms_[index].value; }
  double prob(std::size_t index) const { return atoms_[index].prob; }
  double max_value() const { return atoms_.back().value; }

  // Index of the atom selected by u in [0,1) (inverse CDF).
  std::size_t index_for(double u) const;
  std::size_t sample_index(RandomStream& rng) const { return index_for(rng.uniform()); }
  double sample(RandomStream& rng) const { return atoms_[sample_index(rng)].value; }

  // Pr[v <= x].
  double cdf(double x) const;
  // Pr[v < x].
  double cdf_below(double x) const;
  // Pr[v == x] (exact atom match).
  double mass_at(double x) const;
  double mean() const;

  friend bool operator==(const DiscreteDistribution& a, const DiscreteDistribution& b);

 private:
  std::vector<Atom> atoms_;
  std::vector<double> cumulative_;
};

// Fixed threshold with randomized tie-breaking: a value strictly above tau
// always clears it, a value equal to tau clears it with atom_accept_prob.
struct SmoothedThreshold {
  double tau = 0.0;
  double atom_accept_prob = 0.0;

  // Probability that a draw from `dist` does not clear the threshold.
  double below_probability(const DiscreteDistribution& dist) const;
  // Product of below_probability over independent buyers.
  double no_sale_probability(std::span<const DiscreteDistribution> dists) const;
};

// Finds (tau, a) so that the induced no-sale probability equals `target`.
// target must lie in (0, 1]; target == 1 returns tau above every atom.
SmoothedThreshold smoothed_threshold(std::span<const DiscreteDistribution> dists, double target);

enum class EstimateMethod { kExact, kMonteCarlo };

struct ExpectationEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // 0 when exact
  EstimateMethod method = EstimateMethod::kExact;
  std::size_t samples = 0;  // Monte Carlo trial count, 0 when exact
};

std::string to_string(EstimateMethod method);

// Size of the product of supports, saturating at SIZE_MAX.
std::size_t product_size(std::span<const std::size_t> support_sizes);

// Calls fn(indices, probability) for every element of the product support,
// odometer order with the last coordinate varying fastest.
template <typename Fn>
void for_each_profile(std::span<const std::size_t> support_sizes,
                      std::span<const std::vector<double>> probs, Fn&& fn) {
  const std::size_t n = support_sizes.size();
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t s : support_sizes) {
    if (s == 0) return;
  }
  while (true) {
    double p = 1.0;
    for (std::size_t i = 0; i < n; ++i) p *= probs[i][idx[i]];
    fn(std::span<const std::size_t>(idx), p);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < support_sizes[pos]) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

// E[max_i v_i]: exact enumeration when the product support has at most
// `budget` profiles, otherwise `mc_samples` Monte Carlo draws from `rng`.
ExpectationEstimate expected_max(std::span<const DiscreteDistribution> dists, std::size_t budget,
                                 RandomStream& rng, std::size_t mc_samples = 200000);

}  // namespace prophet

#endif  // PROPHET_DISTRIBUTIONS_H_
