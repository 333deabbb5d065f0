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

#include "doctest.h"
#include "fixtures.h"
#include "sentagg/config.h"
#include "sentagg/error.h"

namespace sentagg {
namespace {

using nlohmann::json;

ErrorCode CodeOf(const json &doc) {
  try {
    LoadConfig(doc);
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an Error for " << doc.dump());
  return ErrorCode::kSyntax;
}

TEST_CASE("default config") {
  const RunConfig config = DefaultConfig();
  CHECK_NOTHROW(ValidateSchema(config.schema));
  CHECK_NOTHROW(ValidateLexicon(config.lexicon, config.schema));
  CHECK(config.schema.group_keys == std::vector<std::string>{"class", "action"});
  CHECK_FALSE(config.aggregate.max_clauses.has_value());
  CHECK(config.realize.date_style == DateStyle::kAuto);
  CHECK(config.realize.sentence_separator == "  ");
  CHECK_FALSE(config.realize.oxford_comma);
  CHECK(config.lexicon.casing.Canonicalize("equipment-type", "dss-dlc") == "DSS-DLC");
}

TEST_CASE("the shipped config file matches the built-in defaults") {
  const std::string path = std::string(SENTAGG_REPO_ROOT) + "/config/default.json";
  const json doc = json::parse(testing::ReadFile(path));
  CHECK(doc == ConfigToJson(DefaultConfig()));
  CHECK(ConfigToJson(LoadConfig(doc)) == doc);
}

TEST_CASE("config sections override defaults") {
  CHECK(ConfigToJson(LoadConfig(json::object())) == ConfigToJson(DefaultConfig()));

  const RunConfig c = LoadConfig(json::parse(R"({
      "options": {"max_clauses": 2, "date_style": "all_short", "oxford_comma": true,
                  "sentence_separator": " ", "disabled_steps": ["merge", "break"]}})"));
  CHECK(c.aggregate.max_clauses == std::size_t{2});
  CHECK(c.realize.date_style == DateStyle::kAllShort);
  CHECK(c.realize.oxford_comma);
  CHECK(c.realize.sentence_separator == " ");
  CHECK(c.aggregate.disabled_steps == std::set<Step>{Step::kMerge, Step::kBreak});

  const RunConfig custom = LoadConfig(json::parse(R"({
      "schema": {"attributes": [{"name": "verb"}, {"name": "item"},
                                {"name": "qty", "type": "integer"}],
                 "group_keys": ["verb"], "tie_break_priority": ["qty", "item"],
                 "tie_break": "higher_priority_first"},
      "lexicon": {"subject_first": "The depot", "subject_subsequent": "It also",
                  "verb_attribute": "verb", "verbs": {"ship": "shipped"},
                  "templates": [{"attribute": "item"},
                                {"attribute": "qty", "preposition": "in batches of"}]}})"));
  CHECK(custom.schema.tie_break == TieBreak::kHigherPriorityFirst);
  CHECK(custom.lexicon.Verb(Symbol{"ship"}) == "shipped");
}

TEST_CASE("config errors") {
  CHECK(CodeOf(json::array()) == ErrorCode::kInvalidConfig);
  CHECK(CodeOf({{"extra", 1}}) == ErrorCode::kInvalidConfig);
  CHECK(CodeOf({{"options", {{"date_style", "sometimes"}}}}) == ErrorCode::kInvalidConfig);
  CHECK(CodeOf({{"options", {{"max_clauses", 0}}}}) == ErrorCode::kInvalidConfig);
  CHECK(CodeOf({{"options", {{"disabled_steps", {"polish"}}}}}) == ErrorCode::kInvalidConfig);
  CHECK(CodeOf({{"schema", {{"attributes", {{{"name", "x"}, {"type", "float"}}}}}}}) ==
        ErrorCode::kInvalidConfig);
  // Schema replaced but the default lexicon no longer fits it.
  CHECK(CodeOf(json::parse(R"({"schema": {"attributes": [{"name": "action"}, {"name": "item"}],
                                          "group_keys": ["action"],
                                          "tie_break_priority": ["item"]}})")) ==
        ErrorCode::kMissingTemplate);
  CHECK(CodeOf(json::parse(R"({"schema": {"attributes": [{"name": "action"}, {"name": "item"}],
                                          "group_keys": ["action"],
                                          "tie_break_priority": []}})")) ==
        ErrorCode::kInvalidSchema);
}

}  // namespace
}  // namespace sentagg
