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

#include "prophet/hardness.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "prophet/errors.h"

namespace prophet {
namespace {

void check_n(std::size_t n) {
  if (n < 2) throw ValidationError("hard instance needs n >= 2");
}

// (1 - 1/n^2)^n without cancellation.
double all_low_prob(std::size_t n) {
  const double nn = static_cast<double>(n);
  return std::exp(nn * std::log1p(-1.0 / (nn * nn)));
}

}  // namespace

HardInstance hard_parameters(std::size_t n) {
  check_n(n);
  constexpr double e = std::numbers::e;
  const double nn = static_cast<double>(n);
  return {n, (e - 2.0) / (e - 1.0), nn / (e - 1.0), 1.0 / (nn * nn)};
}

Instance hard_iid_instance(std::size_t n) {
  const HardInstance h = hard_parameters(n);
  const DiscreteDistribution d({{h.low, 1.0 - h.p_high}, {h.high, h.p_high}});
  std::ostringstream name;
  name << "hard_iid_n" << n;
  return Instance::single_item(std::vector<DiscreteDistribution>(n, d), name.str());
}

double hard_exact_opt(std::size_t n) {
  const HardInstance h = hard_parameters(n);
  const double q = all_low_prob(n);
  return q * h.low + (-std::expm1(static_cast<double>(n) * std::log1p(-h.p_high))) * h.high;
}

double hard_ratio_below_low(std::size_t n) {
  const HardInstance h = hard_parameters(n);
  const double mean = (1.0 - h.p_high) * h.low + h.p_high * h.high;
  return mean / hard_exact_opt(n);
}

double hard_ratio_between(std::size_t n) {
  const HardInstance h = hard_parameters(n);
  const double some_high = -std::expm1(static_cast<double>(n) * std::log1p(-h.p_high));
  return h.high * some_high / hard_exact_opt(n);
}

double hard_fta_alg(std::size_t n, double p) {
  const HardInstance h = hard_parameters(n);
  if (!(p >= 0.0 && p <= 1.0 - h.p_high + 1e-15)) {
    throw ValidationError("skip probability must lie in [0, 1 - 1/n^2]");
  }
  // (1 - p^n) / (1 - p) = sum_{k<n} p^k: the k-th arrival gets its turn
  // with probability p^k.
  const double nn = static_cast<double>(n);
  const double reach = p == 0.0 ? 1.0 : -std::expm1(nn * std::log(p)) / (1.0 - p);
  const double per_buyer = std::max(0.0, 1.0 - h.p_high - p) * h.low + h.p_high * h.high;
  return reach * per_buyer;
}

double hard_fta_ratio(std::size_t n, double p) { return hard_fta_alg(n, p) / hard_exact_opt(n); }

SmoothedThreshold hard_threshold_for_skip(std::size_t n, double p) {
  const HardInstance h = hard_parameters(n);
  return {h.low, std::clamp(1.0 - p / (1.0 - h.p_high), 0.0, 1.0)};
}

std::string to_string(HardRegime regime) {
  switch (regime) {
    case HardRegime::kBelowLow:
      return "below_low";
    case HardRegime::kBetween:
      return "between";
    case HardRegime::kAtLowAtom:
      return "low_atom";
  }
  return "unknown";
}

SweepResult fta_sweep(std::size_t n, std::size_t resolution) {
  check_n(n);
  if (resolution < 1000) throw ValidationError("sweep resolution must be at least 1000");
  const HardInstance h = hard_parameters(n);
  const double nn = static_cast<double>(n);
  const double p_max = 1.0 - h.p_high;
  SweepResult out;
  auto consider = [&](double p) {
    p = std::clamp(p, 0.0, p_max);
    const double r = hard_fta_ratio(n, p);
    ++out.points;
    if (r > out.best_ratio) {
      out.best_ratio = r;
      out.argmax_p = p;
    }
  };
  for (std::size_t g = 0; g <= resolution; ++g) {
    consider(p_max * static_cast<double>(g) / static_cast<double>(resolution));
  }
  constexpr double kMaxC = 4.0;
  for (std::size_t g = 1; g <= resolution; ++g) {
    const double c = kMaxC * static_cast<double>(g) / static_cast<double>(resolution);
    if (c < nn) consider(1.0 - c / nn);
  }
  out.regime = HardRegime::kAtLowAtom;
  const double below = hard_ratio_below_low(n);
  const double between = hard_ratio_between(n);
  out.best_non_atom_ratio = std::max(below, between);
  if (below > out.best_ratio) {
    out.best_ratio = below;
    out.regime = HardRegime::kBelowLow;
  }
  if (between > out.best_ratio) {
    out.best_ratio = between;
    out.regime = HardRegime::kBetween;
  }
  return out;
}

}  // namespace prophet
