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

// Reader and writer for functional descriptions: the parenthesized
// attribute-value notation emitted by the message generator, e.g.
//
//   ((cat message)
//    (admin ((PLANDoc-message-name RDA) (runid r-reg1)))
//    (class refinement)
//    (action activation)
//    (equipment-type all-dlc)
//    (csa-site 3134)
//    (date ((year 1994) (quarter 3))))
//
// Only this flat message shape is supported. Atoms are whitespace separated;
// a double-quoted atom may contain any byte ('\' escapes '"' and '\'). A ';'
// starts a comment running to the end of the line.

#ifndef SENTAGG_FD_H_
#define SENTAGG_FD_H_

#include <string>
#include <string_view>
#include <vector>

#include "sentagg/message.h"

namespace sentagg {

// Parses exactly one FD. Attribute names match the schema case-insensitively;
// symbol values are normalized through `casing` when given.
Message ParseFd(std::string_view text, const AttributeSchema &schema,
                const SymbolCasing *casing = nullptr, std::string id = "0");

// Parses a sequence of FDs; ids are assigned "0", "1", ... in input order.
std::vector<Message> ParseFdStream(std::string_view text, const AttributeSchema &schema,
                                   const SymbolCasing *casing = nullptr);

// Writes `msg` in FD syntax, attributes in schema order. The id is not part of
// the format.
std::string SerializeFd(const Message &msg, const AttributeSchema &schema);

}  // namespace sentagg

#endif  // SENTAGG_FD_H_
