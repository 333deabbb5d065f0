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

#include "sentagg/config.h"

#include "sentagg/error.h"

namespace sentagg {
namespace {

using nlohmann::json;

[[noreturn]] void Bad(const std::string &what) { throw Error(ErrorCode::kInvalidConfig, what); }

const json *Opt(const json &obj, const char *name) {
  auto it = obj.find(name);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::string Str(const json &v, const std::string &what) {
  if (!v.is_string()) Bad(what + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> StrList(const json &v, const std::string &what) {
  if (!v.is_array()) Bad(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto &s : v) out.push_back(Str(s, what + " entry"));
  return out;
}

std::optional<std::string> OptStr(const json &obj, const char *name, const std::string &what) {
  const json *v = Opt(obj, name);
  if (!v) return std::nullopt;
  return Str(*v, what + "." + name);
}

std::string_view FoldName(SymbolCasing::Fold fold) {
  switch (fold) {
    case SymbolCasing::Fold::kUpper: return "upper";
    case SymbolCasing::Fold::kLower: return "lower";
    case SymbolCasing::Fold::kPreserve: break;
  }
  return "preserve";
}

AttributeSchema SchemaFromJson(const json &doc) {
  if (!doc.is_object()) Bad("schema must be an object");
  AttributeSchema schema;
  const json *attrs = Opt(doc, "attributes");
  if (!attrs || !attrs->is_array()) Bad("schema.attributes must be an array");
  for (const auto &a : *attrs) {
    if (!a.is_object()) Bad("schema.attributes entries must be objects");
    const json *name = Opt(a, "name");
    if (!name) Bad("schema attribute without a name");
    AttributeDecl decl{Str(*name, "attribute name"), ValueType::kSymbol};
    if (const json *type = Opt(a, "type")) {
      auto parsed = ParseValueType(Str(*type, "attribute type"));
      if (!parsed) Bad("unknown attribute type " + type->dump());
      decl.type = *parsed;
    }
    schema.attributes.push_back(std::move(decl));
  }
  if (const json *keys = Opt(doc, "group_keys")) {
    schema.group_keys = StrList(*keys, "schema.group_keys");
  }
  if (const json *prio = Opt(doc, "tie_break_priority")) {
    schema.tie_break_priority = StrList(*prio, "schema.tie_break_priority");
  }
  if (const json *tb = Opt(doc, "tie_break")) {
    const std::string s = Str(*tb, "schema.tie_break");
    if (s == "higher_priority_dominant") {
      schema.tie_break = TieBreak::kHigherPriorityDominant;
    } else if (s == "higher_priority_first") {
      schema.tie_break = TieBreak::kHigherPriorityFirst;
    } else {
      Bad("schema.tie_break must be higher_priority_dominant or higher_priority_first");
    }
  }
  return schema;
}

Lexicon LexiconFromJson(const json &doc) {
  if (!doc.is_object()) Bad("lexicon must be an object");
  Lexicon lex;
  if (auto s = OptStr(doc, "subject_first", "lexicon")) lex.subject_first = *s;
  if (auto s = OptStr(doc, "subject_subsequent", "lexicon")) lex.subject_subsequent = *s;
  if (auto s = OptStr(doc, "verb_attribute", "lexicon")) lex.verb_attribute = *s;
  if (auto s = OptStr(doc, "date_long", "lexicon")) lex.date_long = *s;
  if (auto s = OptStr(doc, "date_short", "lexicon")) lex.date_short = *s;
  if (auto s = OptStr(doc, "conjunction", "lexicon")) lex.conjunction = *s;
  if (const json *verbs = Opt(doc, "verbs")) {
    if (!verbs->is_object()) Bad("lexicon.verbs must be an object");
    for (const auto &[action, verb] : verbs->items()) {
      lex.verbs[action] = Str(verb, "lexicon.verbs." + action);
    }
  }
  if (const json *templates = Opt(doc, "templates")) {
    if (!templates->is_array()) Bad("lexicon.templates must be an array");
    for (const auto &t : *templates) {
      if (!t.is_object()) Bad("lexicon.templates entries must be objects");
      auto attribute = OptStr(t, "attribute", "template");
      if (!attribute) Bad("template without an attribute");
      lex.templates.push_back({*attribute, OptStr(t, "preposition", "template"),
                               OptStr(t, "singular", "template"),
                               OptStr(t, "plural", "template")});
    }
  }
  if (const json *casing = Opt(doc, "casing")) {
    if (!casing->is_object()) Bad("lexicon.casing must be an object");
    for (const auto &[attr, rule] : casing->items()) {
      if (!rule.is_object()) Bad("lexicon.casing." + attr + " must be an object");
      if (auto fold = OptStr(rule, "fold", "casing")) {
        if (*fold == "upper") {
          lex.casing.SetFold(attr, SymbolCasing::Fold::kUpper);
        } else if (*fold == "lower") {
          lex.casing.SetFold(attr, SymbolCasing::Fold::kLower);
        } else if (*fold == "preserve") {
          lex.casing.SetFold(attr, SymbolCasing::Fold::kPreserve);
        } else {
          Bad("casing fold must be upper, lower or preserve");
        }
      }
      if (const json *canon = Opt(rule, "canonical")) {
        for (const auto &spelling : StrList(*canon, "casing." + attr + ".canonical")) {
          lex.casing.AddCanonical(attr, spelling);
        }
      }
    }
  }
  return lex;
}

void ApplyOptions(const json &doc, RunConfig &config) {
  if (!doc.is_object()) Bad("options must be an object");
  if (auto it = doc.find("max_clauses"); it != doc.end()) {
    if (it->is_null()) {
      config.aggregate.max_clauses.reset();
    } else if (it->is_number_unsigned() && it->get<std::uint64_t>() >= 1) {
      config.aggregate.max_clauses = it->get<std::size_t>();
    } else {
      Bad("options.max_clauses must be null or a positive integer");
    }
  }
  if (auto s = OptStr(doc, "date_style", "options")) {
    if (*s == "auto") {
      config.realize.date_style = DateStyle::kAuto;
    } else if (*s == "all_short") {
      config.realize.date_style = DateStyle::kAllShort;
    } else if (*s == "all_long") {
      config.realize.date_style = DateStyle::kAllLong;
    } else {
      Bad("options.date_style must be auto, all_short or all_long");
    }
  }
  if (const json *oxford = Opt(doc, "oxford_comma")) {
    if (!oxford->is_boolean()) Bad("options.oxford_comma must be a boolean");
    config.realize.oxford_comma = oxford->get<bool>();
  }
  if (auto s = OptStr(doc, "sentence_separator", "options")) config.realize.sentence_separator = *s;
  if (const json *steps = Opt(doc, "disabled_steps")) {
    config.aggregate.disabled_steps.clear();
    for (const auto &name : StrList(*steps, "options.disabled_steps")) {
      auto step = ParseStep(name);
      if (!step) Bad("unknown step '" + name + "'");
      config.aggregate.disabled_steps.insert(*step);
    }
  }
}

}  // namespace

RunConfig DefaultConfig() {
  RunConfig config;
  AttributeSchema &schema = config.schema;
  schema.attributes = {{"class", ValueType::kSymbol},
                       {"action", ValueType::kSymbol},
                       {"equipment-type", ValueType::kSymbol},
                       {"csa-site", ValueType::kSymbol},
                       {"date", ValueType::kQuarterDate}};
  schema.group_keys = {"class", "action"};
  schema.tie_break_priority = {"date", "equipment-type", "csa-site"};

  Lexicon &lex = config.lexicon;
  lex.verbs = {{"activation", "activated"}};
  lex.templates = {{"equipment-type", std::nullopt, std::nullopt, std::nullopt},
                   {"csa-site", "for", "CSA", "CSAs"},
                   {"date", "in", std::nullopt, std::nullopt}};
  lex.casing.SetFold("class", SymbolCasing::Fold::kLower);
  lex.casing.AddCanonical("class", "refinement");
  lex.casing.SetFold("action", SymbolCasing::Fold::kLower);
  lex.casing.AddCanonical("action", "activation");
  lex.casing.SetFold("equipment-type", SymbolCasing::Fold::kUpper);
  for (const char *e : {"ALL-DLC", "DLC", "DSS-DLC"}) lex.casing.AddCanonical("equipment-type", e);
  return config;
}

RunConfig LoadConfig(const json &doc) {
  if (!doc.is_object()) Bad("config must be a JSON object");
  for (const auto &[key, value] : doc.items()) {
    if (key != "schema" && key != "lexicon" && key != "options") {
      Bad("unknown config section '" + key + "'");
    }
  }
  RunConfig config = DefaultConfig();
  if (const json *schema = Opt(doc, "schema")) config.schema = SchemaFromJson(*schema);
  if (const json *lexicon = Opt(doc, "lexicon")) config.lexicon = LexiconFromJson(*lexicon);
  if (const json *options = Opt(doc, "options")) ApplyOptions(*options, config);
  ValidateSchema(config.schema);
  ValidateLexicon(config.lexicon, config.schema);
  return config;
}

json ConfigToJson(const RunConfig &config) {
  json attrs = json::array();
  for (const auto &decl : config.schema.attributes) {
    attrs.push_back({{"name", decl.name}, {"type", ValueTypeName(decl.type)}});
  }
  json schema = {{"attributes", std::move(attrs)},
                 {"group_keys", config.schema.group_keys},
                 {"tie_break_priority", config.schema.tie_break_priority},
                 {"tie_break", config.schema.tie_break == TieBreak::kHigherPriorityDominant
                                   ? "higher_priority_dominant"
                                   : "higher_priority_first"}};

  const Lexicon &lex = config.lexicon;
  json templates = json::array();
  for (const auto &t : lex.templates) {
    json obj = {{"attribute", t.attribute}};
    if (t.preposition) obj["preposition"] = *t.preposition;
    if (t.singular) obj["singular"] = *t.singular;
    if (t.plural) obj["plural"] = *t.plural;
    templates.push_back(std::move(obj));
  }
  json casing = json::object();
  for (const auto &[attr, rule] : lex.casing.rules()) {
    json canonical = json::array();
    for (const auto &[lowered, spelling] : rule.table) canonical.push_back(spelling);
    casing[attr] = {{"fold", FoldName(rule.fold)}, {"canonical", std::move(canonical)}};
  }
  json lexicon = {{"subject_first", lex.subject_first},
                  {"subject_subsequent", lex.subject_subsequent},
                  {"verb_attribute", lex.verb_attribute},
                  {"verbs", lex.verbs},
                  {"templates", std::move(templates)},
                  {"date_long", lex.date_long},
                  {"date_short", lex.date_short},
                  {"conjunction", lex.conjunction},
                  {"casing", std::move(casing)}};

  json steps = json::array();
  for (Step s : config.aggregate.disabled_steps) steps.push_back(StepName(s));
  json options = {
      {"max_clauses", config.aggregate.max_clauses ? json(*config.aggregate.max_clauses)
                                                   : json(nullptr)},
      {"date_style", config.realize.date_style == DateStyle::kAuto        ? "auto"
                     : config.realize.date_style == DateStyle::kAllShort ? "all_short"
                                                                         : "all_long"},
      {"oxford_comma", config.realize.oxford_comma},
      {"sentence_separator", config.realize.sentence_separator},
      {"disabled_steps", std::move(steps)}};
  return {{"schema", std::move(schema)}, {"lexicon", std::move(lexicon)}, {"options", std::move(options)}};
}

}  // namespace sentagg
