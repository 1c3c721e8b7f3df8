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

#ifndef PROPHET_ONLINE_H_
#define PROPHET_ONLINE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prophet/config_lp.h"
#include "prophet/distributions.h"
#include "prophet/instance.h"
#include "prophet/offline.h"
#include "prophet/pricing.h"
#include "prophet/random.h"

namespace prophet {

struct Arrival {
  std::size_t buyer;
  double time;
};

// One unit of allocation. For matroids the "item" is the buyer's own
// element. `value` is the value credited to welfare: the buyer's value for
// the item, or the supporting-clause value in the XOS mechanism.
struct Sale {
  std::size_t buyer;
  std::size_t item;
  double time;
  double price;
  double value;
};

struct TrialOutcome {
  std::vector<Sale> sales;
  std::vector<double> payment;  // per buyer
  std::vector<double> utility;  // per buyer
  std::vector<std::optional<double>> item_sale_time;
  double welfare = 0.0;
  double revenue = 0.0;
  double utility_total = 0.0;
  // v_i(bundle_i) summed over buyers; equals welfare outside XOS.
  double true_welfare = 0.0;

  TrialOutcome(std::size_t buyers, std::size_t items);

  void record(const Sale& sale);
  // Recomputes welfare, revenue and per-buyer utilities from `sales`.
  void finalize();
};

// welfare == revenue + utility within tol * (1 + welfare).
bool accounting_holds(const TrialOutcome& outcome, double tol = 1e-9);

// Each item sold at most once, plus the setting's own constraint:
// independence for matroids, one item per buyer for single item/matching.
bool is_feasible(const Instance& inst, const TrialOutcome& outcome);

// Sells to the first arrival with v >= alpha(t) * b at that price.
TrialOutcome run_single_item_dynamic(double base_price, std::span<const double> values,
                                     std::span<const Arrival> arrivals);

// Each arrival picks argmax_j v_ij - alpha(t) b_j over unsold items (ties to
// the smaller index) and buys when that surplus is >= 0.
TrialOutcome run_matching_dynamic(std::span<const double> base_prices, const WeightMatrix& values,
                                  std::span<const Arrival> arrivals);

// Draws S* from the LP solution, takes the supporting clause of S*, and
// allocates every unsold j in S* whose clause value is >= alpha(t) b_j.
// Consumes one uniform per arrival.
TrialOutcome run_xos_caps(const Instance& inst, std::span<const double> base_prices,
                          const ConfigLpSolution& lp, const ValueProfile& profile,
                          std::span<const Arrival> arrivals, RandomStream& rng);

// Accepts i when A + i is independent and v_i > alpha(t) b_i(A).
TrialOutcome run_matroid_mps(const MatroidPricer& pricer, std::span<const double> values,
                             std::span<const Arrival> arrivals);

// First arrival clearing the smoothed threshold buys at tau. A coin is drawn
// only for values exactly at tau.
TrialOutcome run_fta_single(const SmoothedThreshold& threshold, std::span<const double> values,
                            std::span<const Arrival> arrivals, RandomStream& rng);

struct FtaMatchingPolicy {
  std::size_t items = 0;
  // candidate_probs[i][k][j] = Pr over the other buyers that (i, j) is in the
  // maximum matching, given buyer i realizes support index k.
  std::vector<std::vector<std::vector<double>>> candidate_probs;
  // reduced[j][i]: distribution of buyer i's value for j when j is its
  // candidate, zero otherwise.
  std::vector<std::vector<DiscreteDistribution>> reduced;
  std::vector<SmoothedThreshold> thresholds;  // per item, no-sale target 1/e
  EstimateMethod method = EstimateMethod::kExact;
  std::size_t samples = 0;
};

FtaMatchingPolicy fta_matching_prepare(const Instance& inst, const ExpectationOptions& options,
                                       std::uint64_t seed);

// One uniform per arrival selects the candidate through cumulative
// candidate probabilities; a second uniform is drawn only for a tie at tau.
TrialOutcome run_fta_matching(const FtaMatchingPolicy& policy, const WeightMatrix& values,
                              const ValueProfile& profile, std::span<const Arrival> arrivals,
                              RandomStream& rng);

enum class Algorithm { kDynamic, kFixedThreshold };

std::string to_string(Algorithm alg);
Algorithm algorithm_from_string(const std::string& name);

struct MechanismOptions {
  ExpectationOptions expectation;
  MatroidPricingOptions matroid;
  std::uint64_t seed = 0;
};

// A prepared mechanism: prices, thresholds or LP solution computed once,
// then read-only while trials run concurrently.
class Mechanism {
 public:
  virtual ~Mechanism() = default;

  virtual TrialOutcome run(const ValueProfile& profile, std::span<const Arrival> arrivals,
                           RandomStream& rng) const = 0;
  // Per-item base prices for residual curves; empty when not applicable.
  virtual std::vector<double> item_base_prices() const { return {}; }
  // Fixed prices/thresholds paid by each sale, for reporting.
  virtual std::vector<double> posted_prices() const { return item_base_prices(); }

  const Instance& instance() const { return instance_; }
  Algorithm algorithm() const { return algorithm_; }

 protected:
  Mechanism(Instance inst, Algorithm alg) : instance_(std::move(inst)), algorithm_(alg) {}

 private:
  Instance instance_;
  Algorithm algorithm_;
};

// Throws ValidationError for unsupported (setting, algorithm) pairs:
// fixed thresholds exist for single item and matching only.
std::unique_ptr<Mechanism> make_mechanism(const Instance& inst, Algorithm alg,
                                          const MechanismOptions& options);

}  // namespace prophet

#endif  // PROPHET_ONLINE_H_
