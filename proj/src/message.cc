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

#include "sentagg/message.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "sentagg/error.h"

namespace sentagg {

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string ToUpper(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string_view ValueTypeName(ValueType type) {
  switch (type) {
    case ValueType::kSymbol: return "symbol";
    case ValueType::kInteger: return "integer";
    case ValueType::kQuarterDate: return "quarter_date";
  }
  return "symbol";
}

std::optional<ValueType> ParseValueType(std::string_view name) {
  if (name == "symbol") return ValueType::kSymbol;
  if (name == "integer") return ValueType::kInteger;
  if (name == "quarter_date") return ValueType::kQuarterDate;
  return std::nullopt;
}

ValueType TypeOf(const AtomicValue &value) {
  return static_cast<ValueType>(value.index());
}

std::weak_ordering CompareValues(const AtomicValue &a, const AtomicValue &b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  if (const auto *sa = std::get_if<Symbol>(&a)) {
    const auto &sb = std::get<Symbol>(b);
    const int folded = ToLower(sa->text).compare(ToLower(sb.text));
    if (folded != 0) return folded <=> 0;
    return sa->text.compare(sb.text) <=> 0;
  }
  if (const auto *ia = std::get_if<std::int64_t>(&a)) {
    return *ia <=> std::get<std::int64_t>(b);
  }
  const auto &da = std::get<QuarterDate>(a);
  const auto &db = std::get<QuarterDate>(b);
  if (da.year != db.year) return da.year <=> db.year;
  return da.quarter <=> db.quarter;
}

std::string ValueToString(const AtomicValue &value) {
  if (const auto *s = std::get_if<Symbol>(&value)) return s->text;
  if (const auto *i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  const auto &d = std::get<QuarterDate>(value);
  return std::to_string(d.year) + "Q" + std::to_string(d.quarter);
}

const AttributeDecl *AttributeSchema::Find(std::string_view name) const {
  for (const auto &decl : attributes) {
    if (decl.name == name) return &decl;
  }
  return nullptr;
}

const AttributeDecl *AttributeSchema::FindIgnoreCase(std::string_view name) const {
  if (const auto *exact = Find(name)) return exact;
  const std::string lowered = ToLower(name);
  for (const auto &decl : attributes) {
    if (ToLower(decl.name) == lowered) return &decl;
  }
  return nullptr;
}

bool AttributeSchema::IsGroupKey(std::string_view name) const {
  return std::find(group_keys.begin(), group_keys.end(), name) != group_keys.end();
}

std::vector<std::string> AttributeSchema::AggregatingAttributes() const {
  std::vector<std::string> out;
  for (const auto &decl : attributes) {
    if (!IsGroupKey(decl.name)) out.push_back(decl.name);
  }
  return out;
}

namespace {

bool IsValidAttributeName(const std::string &name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
  });
}

}  // namespace

void ValidateSchema(const AttributeSchema &schema) {
  std::set<std::string> names;
  std::set<std::string> folded;
  for (const auto &decl : schema.attributes) {
    if (!IsValidAttributeName(decl.name)) {
      throw Error(ErrorCode::kInvalidSchema, "invalid attribute name '" + decl.name + "'");
    }
    // The FD reader matches names case-insensitively, so names must stay
    // distinct after folding. "admin", "cat" and "id" are reserved input keys.
    if (!names.insert(decl.name).second || !folded.insert(ToLower(decl.name)).second) {
      throw Error(ErrorCode::kInvalidSchema, "duplicate attribute '" + decl.name + "'");
    }
    if (ToLower(decl.name) == "admin" || ToLower(decl.name) == "cat" ||
        ToLower(decl.name) == "id") {
      throw Error(ErrorCode::kInvalidSchema, "reserved attribute name '" + decl.name + "'");
    }
  }
  std::set<std::string> keys;
  for (const auto &key : schema.group_keys) {
    if (!schema.Find(key)) {
      throw Error(ErrorCode::kInvalidSchema, "group key '" + key + "' is not declared");
    }
    if (!keys.insert(key).second) {
      throw Error(ErrorCode::kInvalidSchema, "duplicate group key '" + key + "'");
    }
  }
  std::set<std::string> prio;
  for (const auto &name : schema.tie_break_priority) {
    if (!schema.Find(name)) {
      throw Error(ErrorCode::kInvalidSchema,
                  "tie-break attribute '" + name + "' is not declared");
    }
    if (schema.IsGroupKey(name)) {
      throw Error(ErrorCode::kInvalidSchema,
                  "tie-break attribute '" + name + "' is a group key");
    }
    if (!prio.insert(name).second) {
      throw Error(ErrorCode::kInvalidSchema,
                  "tie-break attribute '" + name + "' listed twice");
    }
  }
  for (const auto &name : schema.AggregatingAttributes()) {
    if (!prio.count(name)) {
      throw Error(ErrorCode::kInvalidSchema,
                  "attribute '" + name + "' missing from tie-break priority");
    }
  }
}

void SymbolCasing::SetFold(const std::string &attribute, Fold fold) {
  rules_[attribute].fold = fold;
}

void SymbolCasing::AddCanonical(const std::string &attribute, const std::string &spelling) {
  rules_[attribute].table[ToLower(spelling)] = spelling;
}

std::string SymbolCasing::Canonicalize(const std::string &attribute,
                                       const std::string &token) const {
  auto rule = rules_.find(attribute);
  if (rule == rules_.end()) return token;
  auto hit = rule->second.table.find(ToLower(token));
  if (hit != rule->second.table.end()) return hit->second;
  switch (rule->second.fold) {
    case Fold::kUpper: return ToUpper(token);
    case Fold::kLower: return ToLower(token);
    case Fold::kPreserve: break;
  }
  return token;
}

void ValidateMessage(const Message &msg, const AttributeSchema &schema) {
  for (const auto &[name, value] : msg.attrs) {
    const AttributeDecl *decl = schema.Find(name);
    if (!decl) {
      throw Error(ErrorCode::kUnknownAttribute,
                  "message " + msg.id + ": unknown attribute '" + name + "'");
    }
    if (TypeOf(value) != decl->type) {
      throw Error(ErrorCode::kTypeMismatch,
                  "message " + msg.id + ": attribute '" + name + "' expects " +
                      std::string(ValueTypeName(decl->type)) + ", got " +
                      std::string(ValueTypeName(TypeOf(value))));
    }
    if (const auto *d = std::get_if<QuarterDate>(&value)) {
      if (d->quarter < 1 || d->quarter > 4) {
        throw Error(ErrorCode::kTypeMismatch,
                    "message " + msg.id + ": attribute '" + name +
                        "' has quarter " + std::to_string(d->quarter) + " outside 1-4");
      }
    }
  }
  for (const auto &decl : schema.attributes) {
    if (!msg.attrs.count(decl.name)) {
      throw Error(ErrorCode::kMissingAttribute,
                  "message " + msg.id + ": missing attribute '" + decl.name + "'");
    }
  }
}

}  // namespace sentagg
