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

// Verification helpers: expansion of a plan back to atomic messages,
// conciseness statistics and seeded random corpora.
//
// Expansion reads only the plan (never realized text), so realizer defects
// cannot hide aggregator defects.

#ifndef SENTAGG_ORACLE_H_
#define SENTAGG_ORACLE_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "sentagg/aggregate.h"
#include "sentagg/message.h"
#include "sentagg/realize.h"

namespace sentagg {

// Cartesian product of the clause's value lists. Deleted attributes take their
// value from a clause of the same sentence that keeps them; group keys come
// from the group. Result ids and admin are empty.
std::vector<Message> ExpandClause(const GroupPlan &group, const Sentence &sentence,
                                  std::size_t clause_index);
std::vector<Message> ExpandPlan(const DocumentPlan &plan);

// Attribute tuples of `msgs` in a canonical order (ids and admin dropped).
std::vector<AttributeMap> AsMultiset(const std::vector<Message> &msgs);
// Same, with repeated tuples collapsed.
std::vector<AttributeMap> Dedup(const std::vector<Message> &msgs);

struct ConcisenessReport {
  std::size_t baseline_chars = 0;
  std::size_t baseline_words = 0;
  std::size_t aggregated_chars = 0;
  std::size_t aggregated_words = 0;
  double reduction_ratio = 0.0;
  std::size_t messages_in = 0;
  std::size_t clauses_out = 0;
  std::size_t sentences_out = 0;
};

// `plan` must be Aggregate(msgs, ...). Both texts use `options`, except that
// the baseline always uses short dates.
ConcisenessReport ConcisenessStats(const std::vector<Message> &msgs, const DocumentPlan &plan,
                                   const AttributeSchema &schema, const Lexicon &lex,
                                   const RealizeOptions &options = {});
nlohmann::json ReportToJson(const ConcisenessReport &report);

std::size_t CountWords(const std::string &text);

// SplitMix64 (Steele, Lea & Flood). Small, counter based and fully specified,
// so a seed names the same corpus in any implementation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next();
  // Next() % n; n must be positive.
  std::uint64_t Below(std::uint64_t n) { return Next() % n; }

 private:
  std::uint64_t state_;
};

inline constexpr char kGeneratorName[] = "splitmix64";

struct GenParams {
  AttributeSchema schema;
  std::size_t n_messages = 0;
  // Values drawn for an attribute come from pools[attr] when present,
  // otherwise from pool_sizes[attr] (default 3) synthesized values.
  std::map<std::string, std::size_t> pool_sizes;
  std::map<std::string, std::vector<AtomicValue>> pools;
};

// The k-th synthesized pool value for an attribute: "<initial><k+1>" for
// symbols, 100 + k for integers, successive quarters from 1994 Q1 for dates.
AtomicValue SyntheticValue(const AttributeDecl &decl, std::size_t k);

// Uniform independent draws per attribute, in schema declaration order,
// message by message. Ids are "0", "1", ...
std::vector<Message> GenRandomInstance(std::uint64_t seed, const GenParams &params);

// A randomly shaped domain for property tests: schema, matching lexicon and
// generator parameters.
struct SyntheticDomain {
  AttributeSchema schema;
  Lexicon lexicon;
  GenParams params;
};

struct SyntheticLimits {
  std::size_t max_messages = 12;
  // Total attributes, group keys included.
  std::size_t max_attributes = 5;
  std::size_t max_pool = 4;
  std::size_t max_group_keys = 2;
};

SyntheticDomain MakeSyntheticDomain(std::uint64_t seed, const SyntheticLimits &limits = {});

}  // namespace sentagg

#endif  // SENTAGG_ORACLE_H_
