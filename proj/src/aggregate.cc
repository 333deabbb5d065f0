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

#include "sentagg/aggregate.h"

#include <algorithm>
#include <stdexcept>

#include "sentagg/error.h"

namespace sentagg {
namespace {

struct ValueLess {
  bool operator()(const AtomicValue &a, const AtomicValue &b) const {
    return CompareValues(a, b) < 0;
  }
};

}  // namespace

void AttrValue::Extend(const AttrValue &other) {
  for (const auto &v : other.values) {
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
}

std::set<std::string> AggregateMessage::Compound() const {
  std::set<std::string> out;
  for (const auto &[name, value] : attrs) {
    if (value.conjoined()) out.insert(name);
  }
  return out;
}

std::size_t AggregateMessage::TupleCount() const {
  std::size_t n = 1;
  for (const auto &[name, value] : attrs) n *= value.values.size();
  return n;
}

AggregateMessage FromMessage(const Message &msg, const AttributeSchema &schema) {
  AggregateMessage out;
  for (const auto &[name, value] : msg.attrs) {
    if (!schema.IsGroupKey(name)) out.attrs.emplace(name, AttrValue(value));
  }
  out.provenance.push_back(msg.id);
  return out;
}

const AtomicValue *GroupPlan::Key(const std::string &name) const {
  for (const auto &[k, v] : keys) {
    if (k == name) return &v;
  }
  return nullptr;
}

const AttributeRank *Ranking::Find(const std::string &name) const {
  for (const auto &r : attributes) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::optional<Step> ParseStep(std::string_view name) {
  if (name == "sort") return Step::kSort;
  if (name == "merge") return Step::kMerge;
  if (name == "delete") return Step::kDelete;
  if (name == "break") return Step::kBreak;
  return std::nullopt;
}

std::string_view StepName(Step step) {
  switch (step) {
    case Step::kSort: return "sort";
    case Step::kMerge: return "merge";
    case Step::kDelete: return "delete";
    case Step::kBreak: return "break";
  }
  return "";
}

bool AggregateOptions::Enabled(Step step) const {
  if (disabled_steps.count(step)) return false;
  if (step == Step::kMerge && disabled_steps.count(Step::kSort)) return false;
  return true;
}

std::vector<std::vector<Message>> GroupByAction(const std::vector<Message> &msgs,
                                                const AttributeSchema &schema) {
  std::vector<std::vector<AtomicValue>> keys;
  std::vector<std::vector<Message>> groups;
  for (const auto &msg : msgs) {
    std::vector<AtomicValue> key;
    for (const auto &name : schema.group_keys) key.push_back(msg.attrs.at(name));
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(std::move(key));
      groups.emplace_back();
      groups.back().push_back(msg);
    } else {
      groups[it - keys.begin()].push_back(msg);
    }
  }
  return groups;
}

Ranking RankAttributes(const std::vector<Message> &group, const AttributeSchema &schema) {
  Ranking ranking;
  ranking.m = group.size();
  for (const auto &name : schema.AggregatingAttributes()) {
    std::set<AtomicValue, ValueLess> seen;
    for (const auto &msg : group) seen.insert(msg.attrs.at(name));
    ranking.attributes.push_back({name, seen.size(), ranking.m - seen.size()});
  }
  return ranking;
}

std::vector<std::string> SortOrder(const Ranking &ranking, const AttributeSchema &schema) {
  auto priority = [&](const std::string &name) {
    auto it = std::find(schema.tie_break_priority.begin(), schema.tie_break_priority.end(), name);
    return static_cast<std::size_t>(it - schema.tie_break_priority.begin());
  };
  std::vector<AttributeRank> ranks = ranking.attributes;
  const bool dominant = schema.tie_break == TieBreak::kHigherPriorityDominant;
  std::stable_sort(ranks.begin(), ranks.end(),
                   [&](const AttributeRank &a, const AttributeRank &b) {
                     if (a.rank != b.rank) return a.rank < b.rank;
                     // Index 0 is the highest priority. Dominant keys are
                     // applied last.
                     return dominant ? priority(a.name) > priority(b.name)
                                     : priority(a.name) < priority(b.name);
                   });
  std::vector<std::string> order;
  for (const auto &r : ranks) order.push_back(r.name);
  return order;
}

std::vector<Message> SortMessages(std::vector<Message> group,
                                  const std::vector<std::string> &order) {
  for (const auto &name : order) {
    std::stable_sort(group.begin(), group.end(), [&](const Message &a, const Message &b) {
      return CompareValues(a.attrs.at(name), b.attrs.at(name)) < 0;
    });
  }
  return group;
}

std::set<std::string> DistinctAttrs(const AggregateMessage &a, const AggregateMessage &b) {
  std::set<std::string> out;
  for (const auto &[name, value] : a.attrs) {
    auto it = b.attrs.find(name);
    if (it == b.attrs.end() || !(it->second == value)) out.insert(name);
  }
  for (const auto &[name, value] : b.attrs) {
    if (!a.attrs.count(name)) out.insert(name);
  }
  return out;
}

void MergeInto(AggregateMessage &acc, const AggregateMessage &next) {
  const std::set<std::string> distinct = DistinctAttrs(acc, next);
  if (distinct.size() > 1) {
    throw std::logic_error("merge across " + std::to_string(distinct.size()) +
                           " distinct attributes");
  }
  if (distinct.size() == 1) {
    const std::string &name = *distinct.begin();
    auto it = next.attrs.find(name);
    if (it == next.attrs.end() || !acc.attrs.count(name)) {
      throw std::logic_error("merge across mismatched attribute sets");
    }
    acc.attrs[name].Extend(it->second);
  }
  acc.provenance.insert(acc.provenance.end(), next.provenance.begin(), next.provenance.end());
}

std::vector<AggregateMessage> MergePass(const std::vector<AggregateMessage> &msgs,
                                        MergeStats *stats) {
  std::vector<AggregateMessage> out;
  if (msgs.empty()) return out;
  if (stats) ++stats->passes;
  AggregateMessage acc = msgs.front();
  for (std::size_t i = 1; i < msgs.size(); ++i) {
    const AggregateMessage &next = msgs[i];
    const std::size_t distinct = DistinctAttrs(acc, next).size();
    if (distinct <= 1) {
      MergeInto(acc, next);
      if (stats) ++(distinct == 0 ? stats->absorbed_duplicates : stats->merges);
    } else {
      out.push_back(std::move(acc));
      acc = next;
    }
  }
  out.push_back(std::move(acc));
  return out;
}

std::vector<AggregateMessage> MergeFixpoint(std::vector<AggregateMessage> msgs,
                                            MergeStats *stats) {
  for (;;) {
    std::vector<AggregateMessage> next = MergePass(msgs, stats);
    // Every merge shortens the list, so an unchanged length means no merge.
    if (next.size() == msgs.size()) return next;
    msgs = std::move(next);
  }
}

std::vector<Sentence> BreakSentences(const std::vector<AggregateMessage> &msgs,
                                     std::optional<std::size_t> max_clauses) {
  const std::size_t limit = max_clauses ? std::max<std::size_t>(*max_clauses, 1) : msgs.size();
  std::vector<Sentence> out;
  std::size_t i = 0;
  while (i < msgs.size()) {
    Sentence sentence;
    sentence.clauses.push_back(Clause(msgs[i]));
    std::size_t j = i + 1;
    if (j < msgs.size() && limit >= 2) {
      sentence.established_distinct = DistinctAttrs(msgs[i], msgs[j]);
      sentence.clauses.push_back(Clause(msgs[j]));
      ++j;
      while (j < msgs.size() && sentence.clauses.size() < limit &&
             DistinctAttrs(msgs[j - 1], msgs[j]) == sentence.established_distinct) {
        sentence.clauses.push_back(Clause(msgs[j]));
        ++j;
      }
    }
    out.push_back(std::move(sentence));
    i = j;
  }
  return out;
}

Sentence MarkDeletions(Sentence sentence) {
  auto &clauses = sentence.clauses;
  if (clauses.size() < 2) return sentence;
  for (std::size_t i = 1; i < clauses.size(); ++i) {
    clauses[i].subject_deleted = true;
    clauses[i].verb_deleted = true;
  }
  for (const auto &[name, value] : clauses.front().body.attrs) {
    const bool shared = std::all_of(clauses.begin(), clauses.end(), [&](const Clause &c) {
      auto it = c.body.attrs.find(name);
      return it != c.body.attrs.end() && it->second == value;
    });
    if (!shared) continue;
    for (std::size_t i = 0; i + 1 < clauses.size(); ++i) clauses[i].deleted_attrs.insert(name);
  }
  return sentence;
}

DocumentPlan Aggregate(const std::vector<Message> &msgs, const AttributeSchema &schema,
                       const AggregateOptions &options, MergeStats *stats) {
  ValidateSchema(schema);
  for (const auto &msg : msgs) ValidateMessage(msg, schema);

  DocumentPlan plan;
  for (auto &group : GroupByAction(msgs, schema)) {
    GroupPlan gp;
    for (const auto &key : schema.group_keys) gp.keys.emplace_back(key, group.front().attrs.at(key));

    if (options.Enabled(Step::kSort)) {
      const Ranking ranking = RankAttributes(group, schema);
      group = SortMessages(std::move(group), SortOrder(ranking, schema));
    }
    std::vector<AggregateMessage> aggs;
    aggs.reserve(group.size());
    for (const auto &msg : group) aggs.push_back(FromMessage(msg, schema));
    if (options.Enabled(Step::kMerge)) aggs = MergeFixpoint(std::move(aggs), stats);

    if (options.Enabled(Step::kBreak)) {
      gp.sentences = BreakSentences(aggs, options.max_clauses);
    } else {
      for (auto &agg : aggs) gp.sentences.push_back(Sentence{{Clause(std::move(agg))}, {}});
    }
    if (options.Enabled(Step::kDelete)) {
      for (auto &sentence : gp.sentences) sentence = MarkDeletions(std::move(sentence));
    }
    plan.groups.push_back(std::move(gp));
  }
  return plan;
}

}  // namespace sentagg
