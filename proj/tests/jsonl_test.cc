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

#include <random>

#include "doctest.h"
#include "fixtures.h"
#include "sentagg/error.h"
#include "sentagg/fd.h"
#include "sentagg/jsonl.h"
#include "sentagg/oracle.h"

namespace sentagg {
namespace {

using testing::DataPath;
using testing::ReadFile;

Error ErrorOf(std::string_view text, const AttributeSchema &schema) {
  try {
    ParseJsonl(text, schema);
  } catch (const Error &e) {
    return e;
  }
  FAIL("expected an Error for: " << text);
  return Error(ErrorCode::kSyntax, "");
}

TEST_CASE("parse_jsonl matches the FD reading of the same message") {
  const RunConfig config = DefaultConfig();
  const auto from_json = ParseJsonl(
      R"({"class":"refinement","action":"activation","equipment-type":"ALL-DLC",)"
      R"("csa-site":"3134","date":{"year":1994,"quarter":3}})",
      config.schema, &config.lexicon.casing);
  REQUIRE(from_json.size() == 1);
  Message from_fd =
      ParseFd(ReadFile(DataPath("sample.fd")), config.schema, &config.lexicon.casing);
  CHECK(from_fd.admin.size() == 2);
  from_fd.admin.clear();
  CHECK(from_json[0] == from_fd);
}

TEST_CASE("parse_jsonl edge cases") {
  const RunConfig config = DefaultConfig();
  CHECK(ParseJsonl("", config.schema).empty());
  CHECK(ParseJsonl("\n  \n\r\n", config.schema).empty());

  const auto msgs = ParseJsonl(ReadFile(DataPath("activations.jsonl")), config.schema);
  CHECK(testing::AbbrevAll(msgs) ==
        std::vector<std::string>{"(E1 S3 D2)", "(E2 S2 D1)", "(E3 S4 D2)", "(E2 S1 D1)"});
  CHECK(msgs == testing::ActivationMessages());

  const auto fd = ParseFdStream(ReadFile(DataPath("activations.fd")), config.schema,
                                &config.lexicon.casing);
  for (size_t i = 0; i < msgs.size(); ++i) CHECK(msgs[i].attrs == fd[i].attrs);
}

TEST_CASE("parse_jsonl ids and admin") {
  const AttributeSchema schema = DefaultConfig().schema;
  const std::string body =
      R"("class":"refinement","action":"activation","equipment-type":"DLC",)"
      R"("csa-site":"3122","date":{"year":1994,"quarter":1})";
  const auto msgs = ParseJsonl("{\"id\":\"m7\"," + body + "}\n\n{" + body +
                                   ",\"admin\":{\"runid\":\"r-reg1\",\"n\":3}}\n{\"id\":42," +
                                   body + "}",
                               schema);
  REQUIRE(msgs.size() == 3);
  CHECK(msgs[0].id == "m7");
  CHECK(msgs[1].id == "1");  // position among non-blank lines
  CHECK(msgs[2].id == "42");
  CHECK(msgs[1].admin ==
        std::vector<std::pair<std::string, std::string>>{{"n", "3"}, {"runid", "r-reg1"}});
}

TEST_CASE("parse_jsonl errors carry the line number") {
  const AttributeSchema schema = DefaultConfig().schema;
  const std::string good = ReadFile(DataPath("activations.jsonl"));

  const Error malformed = ErrorOf(good + "{not json\n", schema);
  CHECK(malformed.code() == ErrorCode::kMalformedLine);
  CHECK(malformed.position().line == 5);

  CHECK(ErrorOf("[1,2]", schema).code() == ErrorCode::kMalformedLine);

  const Error bad = ErrorOf(ReadFile(DataPath("bad.jsonl")), schema);
  CHECK(bad.code() == ErrorCode::kTypeMismatch);
  CHECK(bad.position().line == 2);

  CHECK(ErrorOf(R"({"class":"refinement"})", schema).code() == ErrorCode::kMissingAttribute);
  CHECK(ErrorOf(R"({"colour":"red"})", schema).code() == ErrorCode::kUnknownAttribute);
  CHECK(ErrorOf(R"({"class":"refinement","action":"activation","equipment-type":"DLC",)"
                R"("csa-site":3122,"date":{"year":1994,"quarter":1}})",
                schema)
            .code() == ErrorCode::kTypeMismatch);
  CHECK(ErrorOf(R"({"class":"refinement","action":"activation","equipment-type":"DLC",)"
                R"("csa-site":"3122","date":{"year":1994}})",
                schema)
            .code() == ErrorCode::kTypeMismatch);
}

TEST_CASE("FD and JSONL encodings of random corpora agree") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SyntheticDomain dom = MakeSyntheticDomain(seed);
    const auto msgs = GenRandomInstance(seed, dom.params);
    std::string fd;
    for (const auto &m : msgs) fd += SerializeFd(m, dom.schema);
    CHECK(ParseJsonl(SerializeJsonl(msgs), dom.schema) == msgs);
    CHECK(ParseFdStream(fd, dom.schema) == msgs);
  }
}

TEST_CASE("parse_jsonl never crashes on arbitrary input") {
  const AttributeSchema schema = DefaultConfig().schema;
  const std::string seed_text = ReadFile(DataPath("activations.jsonl"));
  std::mt19937_64 rng(11);
  for (int round = 0; round < 2000; ++round) {
    std::string text = seed_text;
    if (round % 2 == 0) {
      text.clear();
      const size_t len = rng() % 64;
      for (size_t i = 0; i < len; ++i) text.push_back(static_cast<char>(rng() % 256));
    } else {
      const int edits = 1 + static_cast<int>(rng() % 4);
      for (int e = 0; e < edits; ++e) {
        const size_t at = rng() % text.size();
        text[at] = "{}[]\":,0a\n\xff"[rng() % 12];
      }
    }
    try {
      ParseJsonl(text, schema);
    } catch (const Error &e) {
      CHECK(e.IsInputError());
      CHECK(e.position().line >= 1);
    }
  }
}

}  // namespace
}  // namespace sentagg
