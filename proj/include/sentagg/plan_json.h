// Copyright 2026 The Sentagg Authors.
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

// Canonical JSON form of a DocumentPlan. Object keys are sorted, so equal
// plans serialize to identical bytes.
//
// {"groups": [{"keys": [["class", "refinement"], ["action", "activation"]],
//              "sentences": [{"established_distinct": [...],
//                             "clauses": [{"attrs": {...}, "compound": [...],
//                                          "deleted": ["@subject", "@verb", ...],
//                                          "provenance": [...]}]}]}]}
//
// A conjoined attribute is a JSON array; an atomic one is a scalar (string for
// symbols, number for integers, {"year", "quarter"} for dates).

#ifndef SENTAGG_PLAN_JSON_H_
#define SENTAGG_PLAN_JSON_H_

#include "json.hpp"
#include "sentagg/aggregate.h"

namespace sentagg {

inline constexpr char kDeletedSubject[] = "@subject";
inline constexpr char kDeletedVerb[] = "@verb";

nlohmann::json PlanToJson(const DocumentPlan &plan);

// Throws Error(kSyntax) on a document that is not a plan.
DocumentPlan PlanFromJson(const nlohmann::json &doc);

}  // namespace sentagg

#endif  // SENTAGG_PLAN_JSON_H_
