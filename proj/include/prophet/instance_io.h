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

#ifndef PROPHET_INSTANCE_IO_H_
#define PROPHET_INSTANCE_IO_H_

#include <string>

#include "prophet/instance.h"

namespace prophet {

// JSON instance files:
//   {"name": "...", "kind": "single_item" | "matroid" | "matching" | "xos",
//    "items": m,                                   (matching / xos)
//    "matroid": {"type": "uniform", "rank": k}
//             | {"type": "partition", "blocks": [{"elements": [...], "capacity": c}]}
//             | {"type": "graphic", "vertices": V, "edges": [[u, v], ...]},
//    "buyers": [{"support": [{"prob": p, "value": ...}]}]}
// `value` is a number (single item / matroid), a per-item array (matching:
// unit demand; xos: one additive clause) or {"clauses": [[...], ...]}.

// Malformed JSON or wrong field types throw ParseError with location;
// semantic problems throw ValidationError naming the buyer or field.
Instance parse_instance(const std::string& text, const std::string& default_name = {});
Instance load_instance(const std::string& path);

std::string serialize_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace prophet

#endif  // PROPHET_INSTANCE_IO_H_
