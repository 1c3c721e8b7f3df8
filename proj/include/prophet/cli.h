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

#ifndef PROPHET_CLI_H_
#define PROPHET_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "prophet/simulation.h"

namespace prophet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitCapacity = 2;
inline constexpr int kExitUsage = 64;

inline constexpr const char* kReportHeader =
    "instance,kind,alg,trials,seed,alg_mean,alg_se,opt_mean,opt_se,ratio,ci_lo,ci_hi";

std::string report_csv_row(const RatioReport& report);

// Runs one subcommand. `env_seed` stands in for the SEED environment
// variable so tests can control it; pass nullptr when unset.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const char* env_seed);

}  // namespace prophet

#endif  // PROPHET_CLI_H_
