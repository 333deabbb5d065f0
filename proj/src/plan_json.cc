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

#include "sentagg/plan_json.h"

#include "sentagg/error.h"
#include "sentagg/jsonl.h"

namespace sentagg {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string &what) {
  throw Error(ErrorCode::kSyntax, "plan JSON: " + what);
}

AtomicValue AtomicFromJson(const json &v) {
  if (v.is_string()) return Symbol{v.get<std::string>()};
  if (v.is_number_integer() && !(v.is_number_unsigned() && v.get<std::uint64_t>() > INT64_MAX)) {
    return v.get<std::int64_t>();
  }
  if (v.is_object() && v.size() == 2 && v.contains("year") && v.contains("quarter") &&
      v["year"].is_number_integer() && v["quarter"].is_number_integer()) {
    return QuarterDate{v["year"].get<int>(), v["quarter"].get<int>()};
  }
  Fail("bad value " + v.dump());
}

json AttrValueToJson(const AttrValue &value) {
  if (!value.conjoined()) return AtomicValueToJson(value.values.front());
  json arr = json::array();
  for (const auto &v : value.values) arr.push_back(AtomicValueToJson(v));
  return arr;
}

AttrValue AttrValueFromJson(const json &v) {
  if (!v.is_array()) return AttrValue(AtomicFromJson(v));
  if (v.size() < 2) Fail("conjoined value needs at least two items");
  AttrValue out;
  for (const auto &item : v) out.values.push_back(AtomicFromJson(item));
  return out;
}

std::vector<std::string> Strings(const json &v, const char *field) {
  if (!v.is_array()) Fail(std::string(field) + " must be an array");
  std::vector<std::string> out;
  for (const auto &s : v) {
    if (!s.is_string()) Fail(std::string(field) + " entries must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

const json &Field(const json &obj, const char *name) {
  if (!obj.is_object() || !obj.contains(name)) Fail(std::string("missing field '") + name + "'");
  return obj[name];
}

}  // namespace

json PlanToJson(const DocumentPlan &plan) {
  json groups = json::array();
  for (const auto &group : plan.groups) {
    json keys = json::array();
    for (const auto &[name, value] : group.keys) keys.push_back({name, AtomicValueToJson(value)});
    json sentences = json::array();
    for (const auto &sentence : group.sentences) {
      json clauses = json::array();
      for (const auto &clause : sentence.clauses) {
        json attrs = json::object();
        for (const auto &[name, value] : clause.body.attrs) attrs[name] = AttrValueToJson(value);
        json deleted = json::array();
        if (clause.subject_deleted) deleted.push_back(kDeletedSubject);
        if (clause.verb_deleted) deleted.push_back(kDeletedVerb);
        for (const auto &name : clause.deleted_attrs) deleted.push_back(name);
        const auto compound = clause.body.Compound();
        clauses.push_back({{"attrs", std::move(attrs)},
                           {"compound", json(compound)},
                           {"deleted", std::move(deleted)},
                           {"provenance", clause.body.provenance}});
      }
      sentences.push_back({{"clauses", std::move(clauses)},
                           {"established_distinct", json(sentence.established_distinct)}});
    }
    groups.push_back({{"keys", std::move(keys)}, {"sentences", std::move(sentences)}});
  }
  return json{{"groups", std::move(groups)}};
}

DocumentPlan PlanFromJson(const json &doc) {
  DocumentPlan plan;
  const json &groups = Field(doc, "groups");
  if (!groups.is_array()) Fail("groups must be an array");
  for (const auto &g : groups) {
    GroupPlan group;
    const json &keys = Field(g, "keys");
    if (!keys.is_array()) Fail("keys must be an array");
    for (const auto &kv : keys) {
      if (!kv.is_array() || kv.size() != 2 || !kv[0].is_string()) Fail("bad group key");
      group.keys.emplace_back(kv[0].get<std::string>(), AtomicFromJson(kv[1]));
    }
    const json &sentences = Field(g, "sentences");
    if (!sentences.is_array()) Fail("sentences must be an array");
    for (const auto &s : sentences) {
      Sentence sentence;
      for (auto &name : Strings(Field(s, "established_distinct"), "established_distinct")) {
        sentence.established_distinct.insert(std::move(name));
      }
      const json &clauses = Field(s, "clauses");
      if (!clauses.is_array() || clauses.empty()) Fail("clauses must be a non-empty array");
      for (const auto &c : clauses) {
        Clause clause;
        const json &attrs = Field(c, "attrs");
        if (!attrs.is_object()) Fail("attrs must be an object");
        for (const auto &[name, value] : attrs.items()) {
          clause.body.attrs.emplace(name, AttrValueFromJson(value));
        }
        for (auto &name : Strings(Field(c, "deleted"), "deleted")) {
          if (name == kDeletedSubject) {
            clause.subject_deleted = true;
          } else if (name == kDeletedVerb) {
            clause.verb_deleted = true;
          } else {
            clause.deleted_attrs.insert(std::move(name));
          }
        }
        clause.body.provenance = Strings(Field(c, "provenance"), "provenance");
        sentence.clauses.push_back(std::move(clause));
      }
      group.sentences.push_back(std::move(sentence));
    }
    plan.groups.push_back(std::move(group));
  }
  return plan;
}

}  // namespace sentagg
