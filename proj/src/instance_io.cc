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

#include "prophet/instance_io.h"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "prophet/errors.h"

namespace prophet {
namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

double as_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

std::size_t as_count(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

std::vector<double> number_array(const json& j, const std::string& where) {
  std::vector<double> out;
  std::size_t k = 0;
  for (const json& x : as_array(j, where)) {
    out.push_back(as_number(x, where + "[" + std::to_string(k++) + "]"));
  }
  return out;
}

std::string buyer_tag(std::size_t i) { return "buyer " + std::to_string(i); }

Matroid parse_matroid(const json& j, std::size_t ground) {
  const std::string where = "matroid";
  const json& type = field(j, "type", where);
  if (!type.is_string()) throw ParseError("matroid.type: expected a string");
  const std::string t = type.get<std::string>();
  if (t == "uniform") return Matroid::uniform(ground, as_count(field(j, "rank", where), "matroid.rank"));
  if (t == "partition") {
    const json& blocks = as_array(field(j, "blocks", where), "matroid.blocks");
    std::vector<std::optional<std::size_t>> owner(ground);
    std::vector<std::size_t> capacities;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::string bw = "matroid.blocks[" + std::to_string(b) + "]";
      capacities.push_back(as_count(field(blocks[b], "capacity", bw), bw + ".capacity"));
      for (const json& e : as_array(field(blocks[b], "elements", bw), bw + ".elements")) {
        const std::size_t el = as_count(e, bw + ".elements");
        if (el >= ground) throw ValidationError(bw + ": element " + std::to_string(el) + " out of range");
        if (owner[el]) throw ValidationError(bw + ": element " + std::to_string(el) + " listed twice");
        owner[el] = b;
      }
    }
    std::vector<std::size_t> block_of(ground);
    for (std::size_t e = 0; e < ground; ++e) {
      if (!owner[e]) throw ValidationError("matroid: element " + std::to_string(e) + " is in no block");
      block_of[e] = *owner[e];
    }
    return Matroid::partition(std::move(block_of), std::move(capacities));
  }
  if (t == "graphic") {
    const std::size_t vertices = as_count(field(j, "vertices", where), "matroid.vertices");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    const json& list = as_array(field(j, "edges", where), "matroid.edges");
    for (std::size_t e = 0; e < list.size(); ++e) {
      const std::string ew = "matroid.edges[" + std::to_string(e) + "]";
      if (!list[e].is_array() || list[e].size() != 2) throw ParseError(ew + ": expected [u, v]");
      edges.emplace_back(as_count(list[e][0], ew), as_count(list[e][1], ew));
    }
    if (edges.size() != ground) {
      throw ValidationError("matroid: graphic matroid has " + std::to_string(edges.size()) +
                            " edges but there are " + std::to_string(ground) + " buyers");
    }
    return Matroid::graphic(vertices, std::move(edges));
  }
  throw ValidationError("matroid.type: unknown type '" + t + "'");
}

XosValuation parse_valuation(const json& value, SettingKind kind, std::size_t items,
                             const std::string& where) {
  std::vector<AdditiveClause> clauses;
  if (value.is_array()) {
    const std::vector<double> per_item = number_array(value, where);
    if (per_item.size() != items) {
      throw ValidationError(where + ": expected " + std::to_string(items) + " item values, got " +
                            std::to_string(per_item.size()));
    }
    if (kind == SettingKind::kMatching) return XosValuation::unit_demand(per_item);
    return XosValuation::additive(per_item);
  }
  if (!value.is_object()) throw ParseError(where + ": expected an array or {\"clauses\": ...}");
  const json& list = as_array(field(value, "clauses", where), where + ".clauses");
  for (std::size_t c = 0; c < list.size(); ++c) {
    const std::string cw = where + ".clauses[" + std::to_string(c) + "]";
    clauses.push_back(number_array(list[c], cw));
    if (clauses.back().size() != items) {
      throw ValidationError(cw + ": expected " + std::to_string(items) + " item values, got " +
                            std::to_string(clauses.back().size()));
    }
  }
  return XosValuation(std::move(clauses));
}

Instance parse_document(const json& doc, const std::string& default_name) {
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  const json& kind_json = field(doc, "kind", "top level");
  if (!kind_json.is_string()) throw ParseError("kind: expected a string");
  const SettingKind kind = setting_from_string(kind_json.get<std::string>());
  std::string name = default_name;
  if (const auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("name: expected a string");
    name = it->get<std::string>();
  }
  const json& buyers = as_array(field(doc, "buyers", "top level"), "buyers");
  const bool scalar = kind == SettingKind::kSingleItem || kind == SettingKind::kMatroid;
  std::size_t items = 0;
  if (!scalar) items = as_count(field(doc, "items", "top level"), "items");

  std::vector<DiscreteDistribution> scalar_buyers;
  std::vector<BuyerValuationDistribution> bundle_buyers;
  for (std::size_t i = 0; i < buyers.size(); ++i) {
    const std::string bw = "buyers[" + std::to_string(i) + "]";
    const json& support = as_array(field(buyers[i], "support", bw), bw + ".support");
    std::vector<Atom> atoms;
    std::vector<WeightedValuation> valuations;
    for (std::size_t k = 0; k < support.size(); ++k) {
      const std::string sw = bw + ".support[" + std::to_string(k) + "]";
      const double prob = as_number(field(support[k], "prob", sw), sw + ".prob");
      const json& value = field(support[k], "value", sw);
      if (scalar) {
        atoms.push_back({as_number(value, sw + ".value"), prob});
      } else {
        try {
          valuations.push_back({parse_valuation(value, kind, items, sw + ".value"), prob});
        } catch (const ParseError&) {
          throw;
        } catch (const ValidationError& e) {
          throw ValidationError(buyer_tag(i) + ": " + e.what());
        }
      }
    }
    try {
      if (scalar) {
        scalar_buyers.emplace_back(std::move(atoms));
      } else {
        if (valuations.empty()) throw ValidationError("empty support");
        bundle_buyers.emplace_back(std::move(valuations));
      }
    } catch (const ValidationError& e) {
      throw ValidationError(buyer_tag(i) + ": " + e.what());
    }
  }

  switch (kind) {
    case SettingKind::kSingleItem:
      return Instance::single_item(std::move(scalar_buyers), name);
    case SettingKind::kMatroid: {
      Matroid m = parse_matroid(field(doc, "matroid", "top level"), scalar_buyers.size());
      return Instance::matroid_setting(std::move(m), std::move(scalar_buyers), name);
    }
    case SettingKind::kMatching:
      return Instance::matching(items, std::move(bundle_buyers), name);
    case SettingKind::kXos:
      return Instance::xos(items, std::move(bundle_buyers), name);
  }
  throw ValidationError("unsupported instance kind");
}

json matroid_json(const Matroid& m) {
  json out;
  if (const auto* u = std::get_if<UniformKind>(&m.kind())) {
    out["type"] = "uniform";
    out["rank"] = u->rank;
  } else if (const auto* p = std::get_if<PartitionKind>(&m.kind())) {
    out["type"] = "partition";
    json blocks = json::array();
    for (std::size_t b = 0; b < p->capacities.size(); ++b) {
      json elements = json::array();
      for (std::size_t e = 0; e < p->block_of.size(); ++e) {
        if (p->block_of[e] == b) elements.push_back(e);
      }
      blocks.push_back({{"elements", elements}, {"capacity", p->capacities[b]}});
    }
    out["blocks"] = blocks;
  } else {
    const auto& g = std::get<GraphicKind>(m.kind());
    out["type"] = "graphic";
    out["vertices"] = g.vertices;
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    out["edges"] = edges;
  }
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text, const std::string& default_name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  return parse_document(doc, default_name);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read instance file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_instance(text.str(), std::filesystem::path(path).stem().string());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const CapacityError&) {
    throw;
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["name"] = inst.name;
  doc["kind"] = to_string(inst.kind);
  if (!inst.is_scalar()) doc["items"] = inst.items;
  if (inst.matroid) doc["matroid"] = matroid_json(*inst.matroid);
  json buyers = json::array();
  for (std::size_t i = 0; i < inst.buyer_count(); ++i) {
    json support = json::array();
    for (std::size_t k = 0; k < inst.support_size(i); ++k) {
      json atom;
      atom["prob"] = inst.support_prob(i, k);
      if (inst.is_scalar()) {
        atom["value"] = inst.scalar_buyers[i].value(k);
      } else if (inst.kind == SettingKind::kMatching) {
        std::vector<double> per_item(inst.items);
        const auto& v = inst.bundle_buyers[i].valuation(k);
        for (std::size_t j = 0; j < inst.items; ++j) per_item[j] = v.item_value(j);
        atom["value"] = per_item;
      } else {
        atom["value"] = {{"clauses", inst.bundle_buyers[i].valuation(k).clauses()}};
      }
      support.push_back(atom);
    }
    buyers.push_back({{"support", support}});
  }
  doc["buyers"] = buyers;
  return doc.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write instance file '" + path + "'");
  out << serialize_instance(inst);
}

}  // namespace prophet
