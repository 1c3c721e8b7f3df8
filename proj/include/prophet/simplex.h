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

#ifndef PROPHET_SIMPLEX_H_
#define PROPHET_SIMPLEX_H_

#include <vector>

namespace prophet {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LpConstraint {
  std::vector<double> coeffs;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

// maximize objective . x  subject to constraints, x >= 0.
struct LpProblem {
  std::vector<double> objective;
  std::vector<LpConstraint> constraints;
};

struct LpSolution {
  std::vector<double> x;
  double objective = 0.0;
};

// Dense two-phase simplex with Bland's rule. Throws InfeasibleError,
// UnboundedError, or ValidationError on inconsistent dimensions.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace prophet

#endif  // PROPHET_SIMPLEX_H_
