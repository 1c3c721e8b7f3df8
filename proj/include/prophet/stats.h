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

#ifndef PROPHET_STATS_H_
#define PROPHET_STATS_H_

#include <cmath>
#include <cstddef>
#include <span>

namespace prophet {

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct SampleMoments {
  double mean = 0.0;
  double std_error = 0.0;  // sample std / sqrt(count)
};

// Two-pass mean and standard error, summed in index order.
inline SampleMoments sample_moments(std::span<const double> xs) {
  SampleMoments out;
  if (xs.empty()) return out;
  CompensatedSum total;
  for (double x : xs) total.add(x);
  const double n = static_cast<double>(xs.size());
  out.mean = total.value() / n;
  if (xs.size() < 2) return out;
  CompensatedSum sq;
  for (double x : xs) sq.add((x - out.mean) * (x - out.mean));
  out.std_error = std::sqrt(sq.value() / (n - 1.0) / n);
  return out;
}

}  // namespace prophet

#endif  // PROPHET_STATS_H_
