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

#ifndef SENTAGG_MESSAGE_H_
#define SENTAGG_MESSAGE_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sentagg {

// A case-preserving token such as "ALL-DLC" or "3134".
struct Symbol {
  std::string text;
  friend bool operator==(const Symbol &, const Symbol &) = default;
};

struct QuarterDate {
  int year = 0;
  int quarter = 1;  // 1..4
  friend bool operator==(const QuarterDate &, const QuarterDate &) = default;
};

using AtomicValue = std::variant<Symbol, std::int64_t, QuarterDate>;

enum class ValueType { kSymbol, kInteger, kQuarterDate };

std::string_view ValueTypeName(ValueType type);
std::optional<ValueType> ParseValueType(std::string_view name);
ValueType TypeOf(const AtomicValue &value);

// Total order used for sorting. Symbols compare case-insensitively first and
// fall back to a case-sensitive comparison so that the order is consistent
// with equality. Integers compare numerically and dates chronologically.
// Values of different types order by type index.
std::weak_ordering CompareValues(const AtomicValue &a, const AtomicValue &b);

// Debug/diagnostic rendering: symbols verbatim, integers in decimal, dates as
// "1994Q3".
std::string ValueToString(const AtomicValue &value);

struct AttributeDecl {
  std::string name;
  ValueType type = ValueType::kSymbol;
};

enum class TieBreak {
  // Among equally ranked attributes, the higher-priority one is sorted later
  // and therefore dominates the final order.
  kHigherPriorityDominant,
  kHigherPriorityFirst,
};

// Ordered attribute vocabulary of one domain. group_keys partition messages
// into action groups; every other attribute is an aggregating attribute and
// must appear exactly once in tie_break_priority (highest priority first).
struct AttributeSchema {
  std::vector<AttributeDecl> attributes;
  std::vector<std::string> group_keys;
  std::vector<std::string> tie_break_priority;
  TieBreak tie_break = TieBreak::kHigherPriorityDominant;

  const AttributeDecl *Find(std::string_view name) const;
  // Case-insensitive lookup, used by the FD reader.
  const AttributeDecl *FindIgnoreCase(std::string_view name) const;
  bool IsGroupKey(std::string_view name) const;
  // Non-group-key attributes, in declaration order.
  std::vector<std::string> AggregatingAttributes() const;
};

// Throws Error(kInvalidSchema) when the schema is inconsistent.
void ValidateSchema(const AttributeSchema &schema);

// Canonical spelling of symbol values, per attribute. Lookups are keyed by the
// lowercased token; tokens missing from the table fall back to the attribute's
// default case rule.
class SymbolCasing {
 public:
  enum class Fold { kPreserve, kUpper, kLower };

  void SetFold(const std::string &attribute, Fold fold);
  void AddCanonical(const std::string &attribute, const std::string &spelling);

  std::string Canonicalize(const std::string &attribute,
                           const std::string &token) const;

  bool empty() const { return rules_.empty(); }

  struct Rule {
    Fold fold = Fold::kPreserve;
    // lowercased token -> canonical spelling
    std::map<std::string, std::string> table;
  };
  const std::map<std::string, Rule> &rules() const { return rules_; }

 private:
  std::map<std::string, Rule> rules_;
};

using AttributeMap = std::map<std::string, AtomicValue>;

struct Message {
  std::string id;
  // Metadata such as the message name and run id, in input order. Carried
  // through untouched; aggregation never looks at it.
  std::vector<std::pair<std::string, std::string>> admin;
  AttributeMap attrs;

  friend bool operator==(const Message &, const Message &) = default;
};

// Throws Error with kMissingAttribute, kUnknownAttribute or kTypeMismatch.
void ValidateMessage(const Message &msg, const AttributeSchema &schema);

std::string ToLower(std::string_view s);
std::string ToUpper(std::string_view s);

}  // namespace sentagg

#endif  // SENTAGG_MESSAGE_H_
