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

#ifndef PROPHET_HARDNESS_H_
#define PROPHET_HARDNESS_H_

#include <cstddef>
#include <string>

#include "prophet/distributions.h"
#include "prophet/instance.h"

namespace prophet {

// n iid buyers, each worth `high` with probability p_high and `low`
// otherwise. Fixed thresholds cannot beat 1 - 1/e + O(1/n) here.
struct HardInstance {
  std::size_t n = 0;
  double low = 0.0;     // (e - 2) / (e - 1)
  double high = 0.0;    // n / (e - 1)
  double p_high = 0.0;  // 1 / n^2
};

HardInstance hard_parameters(std::size_t n);
Instance hard_iid_instance(std::size_t n);

// E[OPT] = (1 - 1/n^2)^n low + (1 - (1 - 1/n^2)^n) high.
double hard_exact_opt(std::size_t n);

// Threshold below `low`: the first arrival always buys.
double hard_ratio_below_low(std::size_t n);
// Threshold strictly between the atoms (or at `high`, accepting it): only
// high buyers buy.
double hard_ratio_between(std::size_t n);

// Threshold at `low`; each buyer independently skips with probability p,
// 0 <= p <= 1 - 1/n^2. E[ALG] = (1 - p^n)/(1 - p) * ((1 - 1/n^2 - p) low + high / n^2).
double hard_fta_alg(std::size_t n, double p);
double hard_fta_ratio(std::size_t n, double p);

// The smoothed threshold realizing skip probability p.
SmoothedThreshold hard_threshold_for_skip(std::size_t n, double p);

enum class HardRegime { kBelowLow, kBetween, kAtLowAtom };

std::string to_string(HardRegime regime);

struct SweepResult {
  double best_ratio = 0.0;
  double argmax_p = 0.0;  // meaningful when regime == kAtLowAtom
  HardRegime regime = HardRegime::kAtLowAtom;
  double best_non_atom_ratio = 0.0;
  std::size_t points = 0;
};

// Sweeps p uniformly over [0, 1 - 1/n^2] with `resolution` points, plus a
// refinement p = 1 - c/n over c in (0, 4], and compares with the non-atom
// regimes. Requires n >= 2 and resolution >= 1000.
SweepResult fta_sweep(std::size_t n, std::size_t resolution = 1000);

}  // namespace prophet

#endif  // PROPHET_HARDNESS_H_
