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

// Sentence aggregation over one batch of messages.
//
// Messages are partitioned into action groups (same group-key tuple). Within a
// group the pipeline is:
//
//   rank    rank(a) = m - d(a): m messages, d(a) distinct values of a
//   sort    one stable pass per attribute, lowest rank first, so the most
//           shared attribute is the dominant key
//   merge   adjacent messages differing in exactly one attribute are joined
//           into a conjoined value; repeated to a fixpoint, which yields
//           crossing conjunctions (two compound attributes)
//   break   the first two messages always share a sentence; later ones join
//           while the distinct-attribute set between neighbours stays the same
//   delete  non-initial clauses drop subject and verb; attributes shared by
//           every clause are realized only in the last clause

#ifndef SENTAGG_AGGREGATE_H_
#define SENTAGG_AGGREGATE_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sentagg/message.h"

namespace sentagg {

// The value of one attribute in an aggregate: a single atomic value or a
// conjoined list of >= 2 pairwise distinct values, in order of first
// contribution.
struct AttrValue {
  std::vector<AtomicValue> values;

  AttrValue() = default;
  explicit AttrValue(AtomicValue v) : values{std::move(v)} {}
  explicit AttrValue(std::vector<AtomicValue> vs) : values(std::move(vs)) {}

  bool conjoined() const { return values.size() > 1; }
  // Appends the values of `other` not already present.
  void Extend(const AttrValue &other);

  friend bool operator==(const AttrValue &, const AttrValue &) = default;
};

using AggregateAttrs = std::map<std::string, AttrValue>;

// A message whose attributes may be conjoined. Group-key attributes are not
// stored here; they live on the enclosing group.
struct AggregateMessage {
  AggregateAttrs attrs;
  // Ids of the source messages folded into this aggregate, absorbed
  // duplicates included.
  std::vector<std::string> provenance;

  std::set<std::string> Compound() const;
  // Number of distinct atomic tuples this aggregate stands for.
  std::size_t TupleCount() const;

  friend bool operator==(const AggregateMessage &, const AggregateMessage &) = default;
};

AggregateMessage FromMessage(const Message &msg, const AttributeSchema &schema);

struct Clause {
  Clause() = default;
  explicit Clause(AggregateMessage b) : body(std::move(b)) {}

  AggregateMessage body;
  bool subject_deleted = false;
  bool verb_deleted = false;
  std::set<std::string> deleted_attrs;

  bool Deleted(const std::string &attr) const { return deleted_attrs.count(attr) > 0; }

  friend bool operator==(const Clause &, const Clause &) = default;
};

struct Sentence {
  std::vector<Clause> clauses;
  // distinct_attrs of every consecutive clause pair; empty for a single
  // clause.
  std::set<std::string> established_distinct;

  friend bool operator==(const Sentence &, const Sentence &) = default;
};

struct GroupPlan {
  // Group-key values in schema group_keys order.
  std::vector<std::pair<std::string, AtomicValue>> keys;
  std::vector<Sentence> sentences;

  const AtomicValue *Key(const std::string &name) const;

  friend bool operator==(const GroupPlan &, const GroupPlan &) = default;
};

struct DocumentPlan {
  std::vector<GroupPlan> groups;

  friend bool operator==(const DocumentPlan &, const DocumentPlan &) = default;
};

struct AttributeRank {
  std::string name;
  std::size_t distinct = 0;  // d
  std::size_t rank = 0;      // m - d
};

struct Ranking {
  std::size_t m = 0;
  // Aggregating attributes in schema declaration order.
  std::vector<AttributeRank> attributes;

  const AttributeRank *Find(const std::string &name) const;
};

enum class Step { kSort, kMerge, kDelete, kBreak };

std::optional<Step> ParseStep(std::string_view name);
std::string_view StepName(Step step);

struct AggregateOptions {
  // Disabling sort also disables merge: merging relies on the adjacency that
  // sorting establishes.
  std::set<Step> disabled_steps;
  // Upper bound on clauses per sentence; nullopt means unbounded.
  std::optional<std::size_t> max_clauses;

  bool Enabled(Step step) const;
};

// Counters filled in by the merge step.
struct MergeStats {
  std::size_t passes = 0;
  std::size_t merges = 0;
  std::size_t absorbed_duplicates = 0;
};

std::vector<std::vector<Message>> GroupByAction(const std::vector<Message> &msgs,
                                                const AttributeSchema &schema);

// `group` must be non-empty.
Ranking RankAttributes(const std::vector<Message> &group, const AttributeSchema &schema);

// Attributes by ascending rank; ties resolved through schema.tie_break.
std::vector<std::string> SortOrder(const Ranking &ranking, const AttributeSchema &schema);

// Applies one stable sort per attribute of `order`, in sequence.
std::vector<Message> SortMessages(std::vector<Message> group,
                                  const std::vector<std::string> &order);

// Attributes whose values differ. Conjoined values only equal identical
// conjoined values.
std::set<std::string> DistinctAttrs(const AggregateMessage &a, const AggregateMessage &b);

// Folds `next` into `acc`. Throws std::logic_error unless the two differ in
// at most one attribute; that is the invariant keeping every merge exact.
void MergeInto(AggregateMessage &acc, const AggregateMessage &next);

std::vector<AggregateMessage> MergePass(const std::vector<AggregateMessage> &msgs,
                                        MergeStats *stats = nullptr);
std::vector<AggregateMessage> MergeFixpoint(std::vector<AggregateMessage> msgs,
                                            MergeStats *stats = nullptr);

std::vector<Sentence> BreakSentences(const std::vector<AggregateMessage> &msgs,
                                     std::optional<std::size_t> max_clauses = std::nullopt);

Sentence MarkDeletions(Sentence sentence);

// Validates every message (throws Error), then runs the pipeline group by
// group. Deterministic in its inputs.
DocumentPlan Aggregate(const std::vector<Message> &msgs, const AttributeSchema &schema,
                       const AggregateOptions &options = {}, MergeStats *stats = nullptr);

}  // namespace sentagg

#endif  // SENTAGG_AGGREGATE_H_
