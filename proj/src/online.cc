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

#include "prophet/online.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "prophet/errors.h"
#include "prophet/stats.h"

namespace prophet {

TrialOutcome::TrialOutcome(std::size_t buyers, std::size_t items)
    : payment(buyers, 0.0), utility(buyers, 0.0), item_sale_time(items) {}

void TrialOutcome::record(const Sale& sale) {
  sales.push_back(sale);
  if (sale.item < item_sale_time.size()) item_sale_time[sale.item] = sale.time;
}

void TrialOutcome::finalize() {
  std::fill(payment.begin(), payment.end(), 0.0);
  std::fill(utility.begin(), utility.end(), 0.0);
  CompensatedSum w, r;
  for (const Sale& s : sales) {
    w.add(s.value);
    r.add(s.price);
    payment[s.buyer] += s.price;
    utility[s.buyer] += s.value - s.price;
  }
  CompensatedSum u;
  for (double x : utility) u.add(x);
  welfare = w.value();
  revenue = r.value();
  utility_total = u.value();
  true_welfare = welfare;
}

bool accounting_holds(const TrialOutcome& outcome, double tol) {
  const double gap = std::abs(outcome.welfare - outcome.revenue - outcome.utility_total);
  return gap <= tol * (1.0 + std::abs(outcome.welfare));
}

bool is_feasible(const Instance& inst, const TrialOutcome& outcome) {
  const std::size_t items = inst.kind == SettingKind::kMatroid ? inst.buyer_count()
                            : inst.kind == SettingKind::kSingleItem ? 1
                                                                     : inst.items;
  std::vector<int> item_count(items, 0);
  std::vector<int> buyer_count(inst.buyer_count(), 0);
  ElementSet accepted = 0;
  for (const Sale& s : outcome.sales) {
    if (s.item >= items || s.buyer >= inst.buyer_count()) return false;
    if (++item_count[s.item] > 1) return false;
    ++buyer_count[s.buyer];
    if (inst.kind == SettingKind::kMatroid) {
      if (s.item != s.buyer) return false;
      accepted |= singleton(s.item);
    }
  }
  switch (inst.kind) {
    case SettingKind::kSingleItem:
    case SettingKind::kMatching:
      return std::all_of(buyer_count.begin(), buyer_count.end(), [](int c) { return c <= 1; });
    case SettingKind::kMatroid:
      return inst.matroid->is_independent(accepted);
    case SettingKind::kXos:
      return true;
  }
  return false;
}

TrialOutcome run_single_item_dynamic(double base_price, std::span<const double> values,
                                     std::span<const Arrival> arrivals) {
  TrialOutcome out(values.size(), 1);
  for (const Arrival& a : arrivals) {
    const double price = discount(a.time) * base_price;
    if (values[a.buyer] >= price) {
      out.record({a.buyer, 0, a.time, price, values[a.buyer]});
      break;
    }
  }
  out.finalize();
  return out;
}

TrialOutcome run_matching_dynamic(std::span<const double> base_prices, const WeightMatrix& values,
                                  std::span<const Arrival> arrivals) {
  const std::size_t m = base_prices.size();
  TrialOutcome out(values.size(), m);
  std::vector<bool> sold(m, false);
  std::size_t remaining = m;
  for (const Arrival& a : arrivals) {
    if (remaining == 0) break;
    const double alpha = discount(a.time);
    std::optional<std::size_t> best;
    double best_surplus = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (sold[j]) continue;
      const double surplus = values[a.buyer][j] - alpha * base_prices[j];
      if (!best || surplus > best_surplus) {
        best = j;
        best_surplus = surplus;
      }
    }
    if (best && best_surplus >= 0.0) {
      const std::size_t j = *best;
      sold[j] = true;
      --remaining;
      out.record({a.buyer, j, a.time, alpha * base_prices[j], values[a.buyer][j]});
    }
  }
  out.finalize();
  return out;
}

TrialOutcome run_xos_caps(const Instance& inst, std::span<const double> base_prices,
                          const ConfigLpSolution& lp, const ValueProfile& profile,
                          std::span<const Arrival> arrivals, RandomStream& rng) {
  const std::size_t m = inst.items;
  TrialOutcome out(inst.buyer_count(), m);
  std::vector<bool> sold(m, false);
  std::vector<ItemSet> bundle(inst.buyer_count(), 0);
  for (const Arrival& a : arrivals) {
    const std::size_t k = profile.atom[a.buyer];
    const ItemSet target = lp.draw_set(a.buyer, k, rng.uniform());
    if (target == 0) continue;
    const XosValuation& v = inst.bundle_buyers[a.buyer].valuation(k);
    const AdditiveClause& clause = v.clauses()[xos_oracle(v, target)];
    const double alpha = discount(a.time);
    for (std::size_t j = 0; j < m; ++j) {
      if (!contains(target, j) || sold[j]) continue;
      const double price = alpha * base_prices[j];
      if (clause[j] >= price) {
        sold[j] = true;
        bundle[a.buyer] |= ItemSet{1} << j;
        out.record({a.buyer, j, a.time, price, clause[j]});
      }
    }
  }
  out.finalize();
  CompensatedSum tw;
  for (std::size_t i = 0; i < inst.buyer_count(); ++i) {
    if (bundle[i] != 0) tw.add(value(inst.bundle_buyers[i].valuation(profile.atom[i]), bundle[i]));
  }
  out.true_welfare = tw.value();
  return out;
}

TrialOutcome run_matroid_mps(const MatroidPricer& pricer, std::span<const double> values,
                             std::span<const Arrival> arrivals) {
  const Matroid& m = pricer.matroid();
  TrialOutcome out(values.size(), m.ground_size());
  ElementSet accepted = 0;
  for (const Arrival& a : arrivals) {
    const ElementSet grown = accepted | singleton(a.buyer);
    if (!m.is_independent(grown)) continue;
    const double price = discount(a.time) * pricer.base_price(accepted, a.buyer);
    if (values[a.buyer] > price) {
      accepted = grown;
      out.record({a.buyer, a.buyer, a.time, price, values[a.buyer]});
    }
  }
  out.finalize();
  return out;
}

namespace {

bool clears(const SmoothedThreshold& th, double v, RandomStream& rng) {
  if (v > th.tau) return true;
  if (v == th.tau) return rng.uniform() < th.atom_accept_prob;
  return false;
}

}  // namespace

TrialOutcome run_fta_single(const SmoothedThreshold& threshold, std::span<const double> values,
                            std::span<const Arrival> arrivals, RandomStream& rng) {
  TrialOutcome out(values.size(), 1);
  for (const Arrival& a : arrivals) {
    if (clears(threshold, values[a.buyer], rng)) {
      out.record({a.buyer, 0, a.time, threshold.tau, values[a.buyer]});
      break;
    }
  }
  out.finalize();
  return out;
}

FtaMatchingPolicy fta_matching_prepare(const Instance& inst, const ExpectationOptions& options,
                                       std::uint64_t seed) {
  if (inst.kind != SettingKind::kMatching) {
    throw ValidationError("fixed-threshold matching needs a matching instance");
  }
  const std::size_t n = inst.buyer_count();
  const std::size_t m = inst.items;
  FtaMatchingPolicy policy;
  policy.items = m;
  // Joint mass Pr[v_i = k and (i, j) matched], divided by Pr[v_i = k] below.
  std::vector<std::vector<std::vector<CompensatedSum>>> joint(n);
  for (std::size_t i = 0; i < n; ++i) {
    joint[i].assign(inst.support_size(i), std::vector<CompensatedSum>(m));
  }
  std::vector<std::vector<double>> conditioning(n);
  auto accumulate = [&](const ValueProfile& profile, double weight) {
    const Matching match = max_weight_matching(item_values(inst, profile));
    for (std::size_t i = 0; i < n; ++i) {
      if (const auto j = match.item_of_buyer[i]) joint[i][profile.atom[i]][*j].add(weight);
    }
  };
  const auto sizes = inst.support_sizes();
  if (product_size(sizes) <= options.budget) {
    const auto probs = inst.support_probs();
    ValueProfile profile;
    for_each_profile(sizes, probs, [&](std::span<const std::size_t> idx, double p) {
      profile.atom.assign(idx.begin(), idx.end());
      accumulate(profile, p);
    });
    for (std::size_t i = 0; i < n; ++i) conditioning[i] = probs[i];
    policy.method = EstimateMethod::kExact;
  } else {
    // Conditional frequencies: matched counts over visits of (i, k).
    RandomStream rng(seed, kPolicyStream);
    for (std::size_t i = 0; i < n; ++i) conditioning[i].assign(inst.support_size(i), 0.0);
    for (std::size_t s = 0; s < options.mc_samples; ++s) {
      const ValueProfile profile = sample_profile(inst, rng);
      accumulate(profile, 1.0);
      for (std::size_t i = 0; i < n; ++i) conditioning[i][profile.atom[i]] += 1.0;
    }
    policy.method = EstimateMethod::kMonteCarlo;
    policy.samples = options.mc_samples;
  }

  policy.candidate_probs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    policy.candidate_probs[i].resize(inst.support_size(i));
    for (std::size_t k = 0; k < inst.support_size(i); ++k) {
      auto& row = policy.candidate_probs[i][k];
      row.assign(m, 0.0);
      if (conditioning[i][k] <= 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        row[j] = std::clamp(joint[i][k][j].value() / conditioning[i][k], 0.0, 1.0);
      }
    }
  }

  // Reduced distributions: value v_{ij}^k with mass Pr[k] p_k(j), zero otherwise.
  policy.reduced.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      std::map<double, double> mass;
      CompensatedSum positive;
      for (std::size_t k = 0; k < inst.support_size(i); ++k) {
        const double p = inst.support_prob(i, k) * policy.candidate_probs[i][k][j];
        const double v = inst.bundle_buyers[i].valuation(k).item_value(j);
        if (p <= 0.0 || v <= 0.0) continue;
        mass[v] += p;
        positive.add(p);
      }
      std::vector<Atom> atoms;
      const double zero = 1.0 - positive.value();
      if (zero > 1e-12 || mass.empty()) atoms.push_back({0.0, std::max(zero, 0.0)});
      for (const auto& [v, p] : mass) atoms.push_back({v, p});
      policy.reduced[j].emplace_back(std::move(atoms));
    }
    policy.thresholds.push_back(smoothed_threshold(policy.reduced[j], std::exp(-1.0)));
  }
  return policy;
}

TrialOutcome run_fta_matching(const FtaMatchingPolicy& policy, const WeightMatrix& values,
                              const ValueProfile& profile, std::span<const Arrival> arrivals,
                              RandomStream& rng) {
  const std::size_t m = policy.items;
  TrialOutcome out(values.size(), m);
  std::vector<bool> sold(m, false);
  for (const Arrival& a : arrivals) {
    const auto& probs = policy.candidate_probs[a.buyer][profile.atom[a.buyer]];
    const double u = rng.uniform();
    std::optional<std::size_t> candidate;
    double cum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      cum += probs[j];
      if (u < cum) {
        candidate = j;
        break;
      }
    }
    if (!candidate || sold[*candidate]) continue;
    const std::size_t j = *candidate;
    const double v = values[a.buyer][j];
    if (clears(policy.thresholds[j], v, rng)) {
      sold[j] = true;
      out.record({a.buyer, j, a.time, policy.thresholds[j].tau, v});
    }
  }
  out.finalize();
  return out;
}

std::string to_string(Algorithm alg) {
  return alg == Algorithm::kDynamic ? "dynamic" : "fta";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "dynamic") return Algorithm::kDynamic;
  if (name == "fta") return Algorithm::kFixedThreshold;
  throw ValidationError("unknown algorithm '" + name + "' (expected dynamic or fta)");
}

namespace {

std::vector<double> scalar_values(const Instance& inst, const ValueProfile& profile) {
  std::vector<double> v(inst.buyer_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = scalar_value(inst, profile, i);
  return v;
}

class SingleItemDynamic final : public Mechanism {
 public:
  SingleItemDynamic(const Instance& inst, const MechanismOptions& options)
      : Mechanism(inst, Algorithm::kDynamic),
        price_(single_item_base_price(inst.scalar_buyers, options.expectation, options.seed)) {}

  TrialOutcome run(const ValueProfile& profile, std::span<const Arrival> arrivals,
                   RandomStream&) const override {
    return run_single_item_dynamic(price_.b, scalar_values(instance(), profile), arrivals);
  }
  std::vector<double> item_base_prices() const override { return {price_.b}; }

 private:
  SingleItemPrice price_;
};

class SingleItemFixed final : public Mechanism {
 public:
  explicit SingleItemFixed(const Instance& inst)
      : Mechanism(inst, Algorithm::kFixedThreshold),
        threshold_(smoothed_threshold(inst.scalar_buyers, std::exp(-1.0))) {}

  TrialOutcome run(const ValueProfile& profile, std::span<const Arrival> arrivals,
                   RandomStream& rng) const override {
    return run_fta_single(threshold_, scalar_values(instance(), profile), arrivals, rng);
  }
  std::vector<double> posted_prices() const override { return {threshold_.tau}; }

 private:
  SmoothedThreshold threshold_;
};

class MatchingDynamic final : public Mechanism {
 public:
  MatchingDynamic(const Instance& inst, const MechanismOptions& options)
      : Mechanism(inst, Algorithm::kDynamic),
        prices_(matching_base_prices(inst, options.expectation, options.seed)) {}

  TrialOutcome run(const ValueProfile& profile, std::span<const Arrival> arrivals,
                   RandomStream&) const override {
    return run_matching_dynamic(prices_.b, item_values(instance(), profile), arrivals);
  }
  std::vector<double> item_base_prices() const override { return prices_.b; }

 private:
  ItemPrices prices_;
};

class MatchingFixed final : public Mechanism {
 public:
  MatchingFixed(const Instance& inst, const MechanismOptions& options)
      : Mechanism(inst, Algorithm::kFixedThreshold),
        policy_(fta_matching_prepare(inst, options.expectation, options.seed)) {}

  TrialOutcome run(const ValueProfile& profile, std::span<const Arrival> arrivals,
                   RandomStream& rng) const override {
    return run_fta_matching(policy_, item_values(instance(), profile), profile, arrivals, rng);
  }
  std::vector<double> posted_prices() const override {
    std::vector<double> tau;
    for (const auto& th : policy_.thresholds) tau.push_back(th.tau);
    return tau;
  }

 private:
  FtaMatchingPolicy policy_;
};

class XosCaps final : public Mechanism {
 public:
  explicit XosCaps(const Instance& inst)
      : Mechanism(inst, Algorithm::kDynamic),
        lp_(solve_configuration_lp(inst)),
        prices_(xos_base_prices(inst, lp_)) {}

  TrialOutcome run(const ValueProfile& profile, std::span<const Arrival> arrivals,
                   RandomStream& rng) const override {
    return run_xos_caps(instance(), prices_, lp_, profile, arrivals, rng);
  }
  std::vector<double> item_base_prices() const override { return prices_; }

 private:
  ConfigLpSolution lp_;
  std::vector<double> prices_;
};

class MatroidMps final : public Mechanism {
 public:
  MatroidMps(const Instance& inst, const MechanismOptions& options)
      : Mechanism(inst, Algorithm::kDynamic),
        pricer_(*inst.matroid, inst.scalar_buyers, options.matroid, options.seed) {}

  TrialOutcome run(const ValueProfile& profile, std::span<const Arrival> arrivals,
                   RandomStream&) const override {
    return run_matroid_mps(pricer_, scalar_values(instance(), profile), arrivals);
  }
  // Per-element prices b_i(empty set).
  std::vector<double> item_base_prices() const override {
    std::vector<double> b(pricer_.matroid().ground_size(), 0.0);
    for (std::size_t e = 0; e < b.size(); ++e) {
      if (pricer_.matroid().is_independent(singleton(e))) b[e] = pricer_.base_price(0, e);
    }
    return b;
  }

 private:
  MatroidPricer pricer_;
};

}  // namespace

std::unique_ptr<Mechanism> make_mechanism(const Instance& inst, Algorithm alg,
                                          const MechanismOptions& options) {
  inst.validate();
  switch (inst.kind) {
    case SettingKind::kSingleItem:
      if (alg == Algorithm::kDynamic) return std::make_unique<SingleItemDynamic>(inst, options);
      return std::make_unique<SingleItemFixed>(inst);
    case SettingKind::kMatching:
      if (alg == Algorithm::kDynamic) return std::make_unique<MatchingDynamic>(inst, options);
      return std::make_unique<MatchingFixed>(inst, options);
    case SettingKind::kMatroid:
      if (alg == Algorithm::kDynamic) return std::make_unique<MatroidMps>(inst, options);
      break;
    case SettingKind::kXos:
      if (alg == Algorithm::kDynamic) return std::make_unique<XosCaps>(inst);
      break;
  }
  throw ValidationError("algorithm " + to_string(alg) + " is not available for " +
                        to_string(inst.kind) + " instances");
}

}  // namespace prophet
