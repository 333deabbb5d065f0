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

#ifndef SENTAGG_CONFIG_H_
#define SENTAGG_CONFIG_H_

#include "json.hpp"
#include "sentagg/aggregate.h"
#include "sentagg/message.h"
#include "sentagg/realize.h"

namespace sentagg {

struct RunConfig {
  AttributeSchema schema;
  Lexicon lexicon;
  AggregateOptions aggregate;
  RealizeOptions realize;
};

// The telephone-planning domain: class/action group keys, equipment-type,
// csa-site and date, with the matching lexicon.
RunConfig DefaultConfig();

// Reads a config document. Each top-level section ("schema", "lexicon",
// "options") is optional and replaces the corresponding default wholesale,
// except "options", whose fields override individually. Throws
// Error(kInvalidConfig) on malformed documents and Error(kInvalidSchema /
// kMissingTemplate) when the result is inconsistent.
RunConfig LoadConfig(const nlohmann::json &doc);

nlohmann::json ConfigToJson(const RunConfig &config);

}  // namespace sentagg

#endif  // SENTAGG_CONFIG_H_
