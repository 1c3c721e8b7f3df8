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

#include "prophet/distributions.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "prophet/errors.h"
#include "prophet/stats.h"

namespace prophet {

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw ValidationError("distribution has no atoms");
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  CompensatedSum total;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    const Atom& a = atoms_[k];
    if (!std::isfinite(a.value) || a.value < 0.0) {
      std::ostringstream msg;
      msg << "atom value " << a.value << " is not a finite nonnegative number";
      throw ValidationError(msg.str());
    }
    if (!(a.prob > 0.0 && a.prob <= 1.0)) {
      std::ostringstream msg;
      msg << "atom probability " << a.prob << " is outside (0,1]";
      throw ValidationError(msg.str());
    }
    if (k > 0 && atoms_[k - 1].value == a.value) {
      std::ostringstream msg;
      msg << "duplicate atom value " << a.value;
      throw ValidationError(msg.str());
    }
    total.add(a.prob);
  }
  if (std::abs(total.value() - 1.0) > kProbTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "probabilities sum to " << total.value() << ", expected 1";
    throw ValidationError(msg.str());
  }
  cumulative_.resize(atoms_.size());
  double run = 0.0;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    run += atoms_[k].prob;
    cumulative_[k] = run;
  }
  cumulative_.back() = 1.0;
}

DiscreteDistribution DiscreteDistribution::point_mass(double value) {
  return DiscreteDistribution({{value, 1.0}});
}

std::size_t DiscreteDistribution::index_for(double u) const {
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) return atoms_.size() - 1;
  return static_cast<std::size_t>(it - cumulative_.begin());
}

double DiscreteDistribution::cdf(double x) const {
  auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x,
                             [](double v, const Atom& a) { return v < a.value; });
  if (it == atoms_.begin()) return 0.0;
  return cumulative_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
}

double DiscreteDistribution::cdf_below(double x) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                             [](const Atom& a, double v) { return a.value < v; });
  if (it == atoms_.begin()) return 0.0;
  return cumulative_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
}

double DiscreteDistribution::mass_at(double x) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                             [](const Atom& a, double v) { return a.value < v; });
  if (it == atoms_.end() || it->value != x) return 0.0;
  return it->prob;
}

double DiscreteDistribution::mean() const {
  CompensatedSum s;
  for (const Atom& a : atoms_) s.add(a.value * a.prob);
  return s.value();
}

bool operator==(const DiscreteDistribution& a, const DiscreteDistribution& b) {
  if (a.atoms_.size() != b.atoms_.size()) return false;
  for (std::size_t k = 0; k < a.atoms_.size(); ++k) {
    if (a.atoms_[k].value != b.atoms_[k].value || a.atoms_[k].prob != b.atoms_[k].prob) return false;
  }
  return true;
}

double SmoothedThreshold::below_probability(const DiscreteDistribution& dist) const {
  return dist.cdf_below(tau) + (1.0 - atom_accept_prob) * dist.mass_at(tau);
}

double SmoothedThreshold::no_sale_probability(std::span<const DiscreteDistribution> dists) const {
  double p = 1.0;
  for (const auto& d : dists) p *= below_probability(d);
  return p;
}

SmoothedThreshold smoothed_threshold(std::span<const DiscreteDistribution> dists, double target) {
  if (!(target > 0.0 && target <= 1.0)) {
    throw ValidationError("smoothed_threshold target must lie in (0,1]");
  }
  if (dists.empty()) throw ValidationError("smoothed_threshold needs at least one distribution");

  std::vector<double> grid;
  for (const auto& d : dists) {
    for (const Atom& a : d.atoms()) grid.push_back(a.value);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  if (target >= 1.0) {
    return {std::nextafter(grid.back(), std::numeric_limits<double>::infinity()), 0.0};
  }

  for (double tau : grid) {
    SmoothedThreshold at_atom{tau, 0.0};
    const double upper = at_atom.no_sale_probability(dists);  // a = 0
    if (upper < target) continue;

    // The product is nonincreasing in a; find a with product == target.
    std::size_t holders = 0;
    std::size_t holder = 0;
    double others = 1.0;
    for (std::size_t i = 0; i < dists.size(); ++i) {
      if (dists[i].mass_at(tau) > 0.0) {
        ++holders;
        holder = i;
      }
    }
    if (holders == 1) {
      for (std::size_t i = 0; i < dists.size(); ++i) {
        if (i != holder) others *= dists[i].cdf(tau);
      }
      const double below = dists[holder].cdf_below(tau);
      const double mass = dists[holder].mass_at(tau);
      const double a = (below + mass - target / others) / mass;
      return {tau, std::clamp(a, 0.0, 1.0)};
    }
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      if (SmoothedThreshold{tau, mid}.no_sale_probability(dists) > target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return {tau, 0.5 * (lo + hi)};
  }
  // Unreachable: the largest atom gives product 1 >= target.
  return {grid.back(), 0.0};
}

std::string to_string(EstimateMethod method) {
  return method == EstimateMethod::kExact ? "exact" : "monte_carlo";
}

std::size_t product_size(std::span<const std::size_t> support_sizes) {
  std::size_t total = 1;
  for (std::size_t s : support_sizes) {
    if (s != 0 && total > std::numeric_limits<std::size_t>::max() / s) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= s;
  }
  return total;
}

ExpectationEstimate expected_max(std::span<const DiscreteDistribution> dists, std::size_t budget,
                                 RandomStream& rng, std::size_t mc_samples) {
  if (dists.empty()) throw ValidationError("expected_max needs at least one distribution");
  std::vector<std::size_t> sizes;
  std::vector<std::vector<double>> probs;
  for (const auto& d : dists) {
    sizes.push_back(d.size());
    std::vector<double> p;
    for (const Atom& a : d.atoms()) p.push_back(a.prob);
    probs.push_back(std::move(p));
  }
  if (product_size(sizes) <= budget) {
    CompensatedSum s;
    for_each_profile(sizes, probs, [&](std::span<const std::size_t> idx, double p) {
      double best = 0.0;
      for (std::size_t i = 0; i < idx.size(); ++i) best = std::max(best, dists[i].value(idx[i]));
      s.add(best * p);
    });
    return {s.value(), 0.0, EstimateMethod::kExact, 0};
  }
  std::vector<double> draws(mc_samples);
  for (auto& x : draws) {
    double best = 0.0;
    for (const auto& d : dists) best = std::max(best, d.sample(rng));
    x = best;
  }
  const SampleMoments m = sample_moments(draws);
  return {m.mean, m.std_error, EstimateMethod::kMonteCarlo, mc_samples};
}

}  // namespace prophet
