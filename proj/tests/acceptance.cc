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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
// if any fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixtures.h"
#include "sentagg/aggregate.h"
#include "sentagg/config.h"
#include "sentagg/error.h"
#include "sentagg/fd.h"
#include "sentagg/oracle.h"
#include "sentagg/realize.h"

namespace sentagg {
namespace {

using testing::Abbrev;
using testing::AbbrevAll;
using Strings = std::vector<std::string>;

constexpr std::uint64_t kSeeds = 1000;

// A failing check records its reason in `why` and returns false.
using Check = std::function<bool(std::string &why)>;

std::string Join(const Strings &items) {
  std::string out;
  for (const auto &s : items) out += (out.empty() ? "" : " ") + s;
  return out;
}

const Strings kSortOrder = {"csa-site", "equipment-type", "date"};

bool GoldenText(std::string &why) {
  const RunConfig config = DefaultConfig();
  const DocumentPlan plan = Aggregate(testing::ActivationMessages(), config.schema, config.aggregate);
  const std::string text = RealizeDocument(plan, config.lexicon, config.realize);
  if (text == testing::kGoldenText) return true;
  why = "got \"" + text + "\"";
  return false;
}

bool Ranking(std::string &why) {
  const RunConfig config = DefaultConfig();
  const auto r = RankAttributes(testing::ActivationMessages(), config.schema);
  const std::size_t eq = r.Find("equipment-type")->rank;
  const std::size_t date = r.Find("date")->rank;
  const std::size_t site = r.Find("csa-site")->rank;
  if (eq == 1 && date == 2 && site == 0) return true;
  why = "equipment=" + std::to_string(eq) + " date=" + std::to_string(date) +
        " site=" + std::to_string(site);
  return false;
}

bool Sorting(std::string &why) {
  const RunConfig config = DefaultConfig();
  const auto msgs = testing::ActivationMessages();
  const Strings order = SortOrder(RankAttributes(msgs, config.schema), config.schema);
  if (order != kSortOrder) {
    why = "sort keys " + Join(order);
    return false;
  }
  const std::vector<Strings> stages = {
      {"(E2 S1 D1)", "(E2 S2 D1)", "(E1 S3 D2)", "(E3 S4 D2)"},
      {"(E1 S3 D2)", "(E2 S1 D1)", "(E2 S2 D1)", "(E3 S4 D2)"},
      {"(E2 S1 D1)", "(E2 S2 D1)", "(E1 S3 D2)", "(E3 S4 D2)"}};
  for (std::size_t k = 1; k <= order.size(); ++k) {
    const Strings got =
        AbbrevAll(SortMessages(msgs, Strings(order.begin(), order.begin() + k)));
    if (got != stages[k - 1]) {
      why = "stage " + std::to_string(k) + ": " + Join(got);
      return false;
    }
  }
  std::vector<int> idx(msgs.size());
  std::iota(idx.begin(), idx.end(), 0);
  int permutations = 0;
  do {
    std::vector<Message> perm;
    for (int i : idx) perm.push_back(msgs[i]);
    // The sort keys are recomputed, since ranks do not depend on order.
    const Strings keys = SortOrder(RankAttributes(perm, config.schema), config.schema);
    if (AbbrevAll(SortMessages(perm, keys)) != stages.back()) {
      why = "a permutation sorted differently";
      return false;
    }
    ++permutations;
  } while (std::next_permutation(idx.begin(), idx.end()));
  if (permutations == 24) return true;
  why = std::to_string(permutations) + " permutations";
  return false;
}

bool Merging(std::string &why) {
  const RunConfig config = DefaultConfig();
  const auto sorted = SortMessages(testing::ActivationMessages(), kSortOrder);
  const Strings got = AbbrevAll(MergePass(testing::ToAggregates(sorted, config.schema)));
  if (got == Strings{"(E2 (S1 S2) D1)", "(E1 S3 D2)", "(E3 S4 D2)"}) return true;
  why = Join(got);
  return false;
}

bool Crossing(std::string &why) {
  const RunConfig config = DefaultConfig();
  const DocumentPlan plan =
      Aggregate(testing::CrossingMessages(), config.schema, config.aggregate);
  const std::string text = RealizeDocument(plan, config.lexicon, config.realize);
  if (text != testing::kCrossingText) {
    why = "got \"" + text + "\"";
    return false;
  }
  if (plan.groups.size() != 1 || plan.groups[0].sentences.size() != 1) {
    why = "expected a single sentence";
    return false;
  }
  return true;
}

bool SentenceBreak(std::string &why) {
  const RunConfig config = DefaultConfig();
  const auto sorted = SortMessages(testing::ActivationMessages(), kSortOrder);
  const auto merged = MergePass(testing::ToAggregates(sorted, config.schema));
  const auto sentences = BreakSentences(merged);
  if (sentences.size() != 2 || sentences[0].clauses.size() != 2 ||
      sentences[1].clauses.size() != 1) {
    why = std::to_string(sentences.size()) + " sentences";
    return false;
  }
  const std::string text = RealizeDocument(
      Aggregate(testing::ActivationMessages(), config.schema, config.aggregate), config.lexicon,
      config.realize);
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(".  ", start);
    if (end == std::string::npos) end = text.size();
    const std::string sentence = text.substr(start, end - start);
    const std::size_t first = sentence.find("1994 Q3");
    if (first != std::string::npos && sentence.find("1994 Q3", first + 1) != std::string::npos) {
      why = "repeated date in \"" + sentence + "\"";
      return false;
    }
    start = end + 3;
  }
  return true;
}

bool OracleEquivalence(std::string &why) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const SyntheticDomain dom = MakeSyntheticDomain(seed);
    const auto msgs = GenRandomInstance(seed, dom.params);
    const DocumentPlan plan = Aggregate(msgs, dom.schema);
    if (AsMultiset(ExpandPlan(plan)) != Dedup(msgs)) {
      why = "seed " + std::to_string(seed);
      return false;
    }
  }
  return true;
}

bool Conciseness(std::string &why) {
  RealizeOptions short_dates;
  short_dates.date_style = DateStyle::kAllShort;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const SyntheticDomain dom = MakeSyntheticDomain(seed);
    const auto msgs = GenRandomInstance(seed, dom.params);
    const ConcisenessReport r = ConcisenessStats(msgs, Aggregate(msgs, dom.schema), dom.schema,
                                                 dom.lexicon, short_dates);
    if (r.aggregated_chars > r.baseline_chars) {
      why = "seed " + std::to_string(seed) + ": " + std::to_string(r.aggregated_chars) + " > " +
            std::to_string(r.baseline_chars);
      return false;
    }
  }
  const RunConfig config = DefaultConfig();
  const auto msgs = testing::ActivationMessages();
  const ConcisenessReport r =
      ConcisenessStats(msgs, Aggregate(msgs, config.schema, config.aggregate), config.schema,
                       config.lexicon, config.realize);
  const std::string baseline = RealizeBaseline(msgs, config.schema, config.lexicon, config.realize);
  const std::size_t baseline_sentences = std::count(baseline.begin(), baseline.end(), '.');
  if (baseline_sentences != 4 || r.sentences_out != 2) {
    why = "sentences " + std::to_string(baseline_sentences) + " -> " +
          std::to_string(r.sentences_out);
    return false;
  }
  if (r.aggregated_chars > r.baseline_chars) {
    why = "worked example is longer than its baseline";
    return false;
  }
  return true;
}

bool MergeSafety(std::string &why) {
  std::size_t merges = 0;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const SyntheticDomain dom = MakeSyntheticDomain(seed);
    const auto msgs = GenRandomInstance(seed, dom.params);
    MergeStats stats;
    try {
      Aggregate(msgs, dom.schema, {}, &stats);
    } catch (const std::logic_error &e) {
      why = "seed " + std::to_string(seed) + ": " + e.what();
      return false;
    }
    merges += stats.merges;
  }
  // Guard against a vacuous pass.
  if (merges == 0) {
    why = "no merges happened";
    return false;
  }
  return true;
}

bool ParserRoundTrip(std::string &why) {
  SplitMix64 rng(7);
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const SyntheticDomain dom = MakeSyntheticDomain(seed);
    GenParams params = dom.params;
    params.n_messages = 1;
    Message m = GenRandomInstance(rng.Next(), params).front();
    m.id = "0";
    for (std::uint64_t i = rng.Below(3); i > 0; --i) {
      m.admin.emplace_back("note-" + std::to_string(i), "v " + std::to_string(rng.Below(100)));
    }
    const std::string text = SerializeFd(m, dom.schema);
    if (ParseFd(text, dom.schema) != m) {
      why = "seed " + std::to_string(seed) + ": " + text;
      return false;
    }
  }
  const RunConfig config = DefaultConfig();
  Message expected = testing::Activation("0", "ALL-DLC", "3134", 1994, 3);
  expected.admin = {{"PLANDoc-message-name", "RDA"}, {"runid", "r-reg1"}};
  const Message got = ParseFd(testing::ReadFile(testing::DataPath("sample.fd")), config.schema,
                              &config.lexicon.casing);
  if (got != expected) {
    why = "generator example parsed as " + Abbrev(got);
    return false;
  }
  return true;
}

struct Criterion {
  int number;
  const char *name;
  Check check;
};

int RunAll() {
  const std::vector<Criterion> criteria = {
      {1, "golden end-to-end text", GoldenText},
      {2, "attribute ranks", Ranking},
      {3, "sort stages and permutation convergence", Sorting},
      {4, "merge of the sorted list", Merging},
      {5, "crossing conjunction", Crossing},
      {6, "sentence break", SentenceBreak},
      {7, "expand(aggregate(M)) equals dedup(M) on random corpora", OracleEquivalence},
      {8, "conciseness against the baseline", Conciseness},
      {9, "merges never join two distinct attributes", MergeSafety},
      {10, "FD serialize/parse round trip", ParserRoundTrip},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    std::string why;
    bool ok = false;
    try {
      ok = c.check(why);
    } catch (const std::exception &e) {
      why = std::string("exception: ") + e.what();
    }
    if (ok) {
      std::printf("[PASS] %d %s\n", c.number, c.name);
    } else {
      std::printf("[FAIL] %d %s: %s\n", c.number, c.name, why.c_str());
      ++failures;
    }
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace sentagg

int main() { return sentagg::RunAll(); }
