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

#ifndef SENTAGG_JSONL_H_
#define SENTAGG_JSONL_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sentagg/message.h"

namespace sentagg {

// One JSON object per non-blank line:
//   {"id": "m1", "admin": {...}, "class": "refinement", ...,
//    "date": {"year": 1994, "quarter": 3}}
// "id" and "admin" are optional. A missing id defaults to the message's
// 0-based position among the non-blank lines. Errors carry the 1-based line.
std::vector<Message> ParseJsonl(std::string_view text, const AttributeSchema &schema,
                                const SymbolCasing *casing = nullptr);

nlohmann::json AtomicValueToJson(const AtomicValue &value);
nlohmann::json MessageToJson(const Message &msg);
std::string SerializeJsonl(const std::vector<Message> &msgs);

}  // namespace sentagg

#endif  // SENTAGG_JSONL_H_
