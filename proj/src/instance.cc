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

#include "prophet/instance.h"

#include <sstream>

#include "prophet/errors.h"

namespace prophet {

std::string to_string(SettingKind kind) {
  switch (kind) {
    case SettingKind::kSingleItem:
      return "single_item";
    case SettingKind::kMatroid:
      return "matroid";
    case SettingKind::kMatching:
      return "matching";
    case SettingKind::kXos:
      return "xos";
  }
  return "unknown";
}

SettingKind setting_from_string(const std::string& name) {
  if (name == "single_item") return SettingKind::kSingleItem;
  if (name == "matroid") return SettingKind::kMatroid;
  if (name == "matching") return SettingKind::kMatching;
  if (name == "xos") return SettingKind::kXos;
  throw ValidationError("unknown instance kind '" + name + "'");
}

Instance Instance::single_item(std::vector<DiscreteDistribution> buyers, std::string name) {
  Instance inst;
  inst.name = std::move(name);
  inst.kind = SettingKind::kSingleItem;
  inst.scalar_buyers = std::move(buyers);
  inst.validate();
  return inst;
}

Instance Instance::matroid_setting(Matroid m, std::vector<DiscreteDistribution> buyers,
                                   std::string name) {
  Instance inst;
  inst.name = std::move(name);
  inst.kind = SettingKind::kMatroid;
  inst.matroid = std::move(m);
  inst.scalar_buyers = std::move(buyers);
  inst.validate();
  return inst;
}

Instance Instance::matching(std::size_t items, std::vector<BuyerValuationDistribution> buyers,
                            std::string name) {
  Instance inst;
  inst.name = std::move(name);
  inst.kind = SettingKind::kMatching;
  inst.items = items;
  inst.bundle_buyers = std::move(buyers);
  inst.validate();
  return inst;
}

Instance Instance::xos(std::size_t items, std::vector<BuyerValuationDistribution> buyers,
                       std::string name) {
  Instance inst;
  inst.name = std::move(name);
  inst.kind = SettingKind::kXos;
  inst.items = items;
  inst.bundle_buyers = std::move(buyers);
  inst.validate();
  return inst;
}

std::size_t Instance::buyer_count() const {
  return is_scalar() ? scalar_buyers.size() : bundle_buyers.size();
}

std::size_t Instance::support_size(std::size_t buyer) const {
  return is_scalar() ? scalar_buyers[buyer].size() : bundle_buyers[buyer].size();
}

double Instance::support_prob(std::size_t buyer, std::size_t k) const {
  return is_scalar() ? scalar_buyers[buyer].prob(k) : bundle_buyers[buyer].prob(k);
}

std::vector<std::size_t> Instance::support_sizes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < buyer_count(); ++i) out.push_back(support_size(i));
  return out;
}

std::vector<std::vector<double>> Instance::support_probs() const {
  std::vector<std::vector<double>> out(buyer_count());
  for (std::size_t i = 0; i < buyer_count(); ++i) {
    for (std::size_t k = 0; k < support_size(i); ++k) out[i].push_back(support_prob(i, k));
  }
  return out;
}

std::size_t Instance::sellable_count() const {
  switch (kind) {
    case SettingKind::kSingleItem:
      return 1;
    case SettingKind::kMatroid:
      return matroid ? matroid->ground_size() : 0;
    default:
      return items;
  }
}

void Instance::validate() const {
  if (buyer_count() == 0) throw ValidationError("instance has no buyers");
  if (is_scalar() && !bundle_buyers.empty()) {
    throw ValidationError("scalar setting carries per-item buyers");
  }
  if (!is_scalar() && !scalar_buyers.empty()) {
    throw ValidationError("item setting carries scalar buyers");
  }
  if (kind == SettingKind::kMatroid) {
    if (!matroid) throw ValidationError("matroid instance has no matroid");
    if (matroid->ground_size() != scalar_buyers.size()) {
      std::ostringstream msg;
      msg << "matroid ground set has " << matroid->ground_size() << " elements but there are "
          << scalar_buyers.size() << " buyers";
      throw ValidationError(msg.str());
    }
  } else if (matroid) {
    throw ValidationError("only matroid instances carry a matroid");
  }
  if (!is_scalar()) {
    if (items == 0) throw ValidationError("item count must be positive");
    if (items > kMaxItems) throw CapacityError("item count exceeds 31");
    for (std::size_t i = 0; i < bundle_buyers.size(); ++i) {
      if (bundle_buyers[i].item_count() != items) {
        std::ostringstream msg;
        msg << "buyer " << i << ": valuations cover " << bundle_buyers[i].item_count()
            << " items, instance has " << items;
        throw ValidationError(msg.str());
      }
      if (kind == SettingKind::kMatching) {
        for (const auto& w : bundle_buyers[i].support()) {
          // Unit-demand: every clause is a singleton.
          for (const auto& clause : w.valuation.clauses()) {
            std::size_t nonzero = 0;
            for (double x : clause) nonzero += x != 0.0 ? 1 : 0;
            if (nonzero > 1) {
              std::ostringstream msg;
              msg << "buyer " << i << ": matching valuations must be unit-demand";
              throw ValidationError(msg.str());
            }
          }
        }
      }
    }
  }
}

bool operator==(const Instance& a, const Instance& b) {
  return a.name == b.name && a.kind == b.kind && a.items == b.items && a.matroid == b.matroid &&
         a.scalar_buyers == b.scalar_buyers && a.bundle_buyers == b.bundle_buyers;
}

double scalar_value(const Instance& inst, const ValueProfile& profile, std::size_t buyer) {
  return inst.scalar_buyers[buyer].value(profile.atom[buyer]);
}

std::vector<std::vector<double>> item_values(const Instance& inst, const ValueProfile& profile) {
  std::vector<std::vector<double>> out(inst.bundle_buyers.size(),
                                       std::vector<double>(inst.items, 0.0));
  for (std::size_t i = 0; i < inst.bundle_buyers.size(); ++i) {
    const auto& v = inst.bundle_buyers[i].valuation(profile.atom[i]);
    for (std::size_t j = 0; j < inst.items; ++j) out[i][j] = v.item_value(j);
  }
  return out;
}

ValueProfile sample_profile(const Instance& inst, RandomStream& rng) {
  ValueProfile p;
  p.atom.resize(inst.buyer_count());
  for (std::size_t i = 0; i < p.atom.size(); ++i) {
    p.atom[i] = inst.is_scalar() ? inst.scalar_buyers[i].sample_index(rng)
                                 : inst.bundle_buyers[i].sample_index(rng);
  }
  return p;
}

}  // namespace prophet
