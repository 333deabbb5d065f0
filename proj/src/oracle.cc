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

#include "sentagg/oracle.h"

#include <algorithm>
#include <cctype>

#include "sentagg/error.h"

namespace sentagg {
namespace {

bool TupleLess(const AttributeMap &a, const AttributeMap &b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    const auto c = CompareValues(ia->second, ib->second);
    if (c != 0) return c < 0;
  }
  return ia == a.end() && ib != b.end();
}

const AttrValue &RestoredValue(const Sentence &sentence, std::size_t clause_index,
                               const std::string &name) {
  const Clause &clause = sentence.clauses[clause_index];
  if (!clause.Deleted(name)) return clause.body.attrs.at(name);
  for (const auto &other : sentence.clauses) {
    auto it = other.body.attrs.find(name);
    if (it != other.body.attrs.end() && !other.Deleted(name)) return it->second;
  }
  throw Error(ErrorCode::kUnrecoverableDeletion,
              "attribute '" + name + "' is deleted in every clause of its sentence");
}

}  // namespace

std::vector<Message> ExpandClause(const GroupPlan &group, const Sentence &sentence,
                                  std::size_t clause_index) {
  const Clause &clause = sentence.clauses.at(clause_index);
  std::vector<std::pair<std::string, const AttrValue *>> slots;
  for (const auto &[name, value] : clause.body.attrs) {
    slots.emplace_back(name, &RestoredValue(sentence, clause_index, name));
  }
  for (const auto &name : clause.deleted_attrs) {
    if (!clause.body.attrs.count(name)) {
      slots.emplace_back(name, &RestoredValue(sentence, clause_index, name));
    }
  }

  std::vector<Message> out(1);
  for (const auto &[name, value] : group.keys) out[0].attrs[name] = value;
  for (const auto &[name, value] : slots) {
    std::vector<Message> next;
    next.reserve(out.size() * value->values.size());
    for (const auto &partial : out) {
      for (const auto &v : value->values) {
        Message m = partial;
        m.attrs[name] = v;
        next.push_back(std::move(m));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Message> ExpandPlan(const DocumentPlan &plan) {
  std::vector<Message> out;
  for (const auto &group : plan.groups) {
    for (const auto &sentence : group.sentences) {
      for (std::size_t c = 0; c < sentence.clauses.size(); ++c) {
        auto part = ExpandClause(group, sentence, c);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      }
    }
  }
  return out;
}

std::vector<AttributeMap> AsMultiset(const std::vector<Message> &msgs) {
  std::vector<AttributeMap> out;
  out.reserve(msgs.size());
  for (const auto &m : msgs) out.push_back(m.attrs);
  std::sort(out.begin(), out.end(), TupleLess);
  return out;
}

std::vector<AttributeMap> Dedup(const std::vector<Message> &msgs) {
  auto out = AsMultiset(msgs);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t CountWords(const std::string &text) {
  std::size_t n = 0;
  bool in_word = false;
  for (char c : text) {
    const bool space = std::isspace(static_cast<unsigned char>(c));
    if (!space && !in_word) ++n;
    in_word = !space;
  }
  return n;
}

ConcisenessReport ConcisenessStats(const std::vector<Message> &msgs, const DocumentPlan &plan,
                                   const AttributeSchema &schema, const Lexicon &lex,
                                   const RealizeOptions &options) {
  const std::string baseline = RealizeBaseline(msgs, schema, lex, options);
  const std::string aggregated = RealizeDocument(plan, lex, options);
  ConcisenessReport r;
  r.baseline_chars = baseline.size();
  r.baseline_words = CountWords(baseline);
  r.aggregated_chars = aggregated.size();
  r.aggregated_words = CountWords(aggregated);
  r.reduction_ratio =
      r.baseline_chars == 0
          ? 0.0
          : 1.0 - static_cast<double>(r.aggregated_chars) / static_cast<double>(r.baseline_chars);
  r.messages_in = msgs.size();
  for (const auto &group : plan.groups) {
    r.sentences_out += group.sentences.size();
    for (const auto &sentence : group.sentences) r.clauses_out += sentence.clauses.size();
  }
  return r;
}

nlohmann::json ReportToJson(const ConcisenessReport &r) {
  return {{"baseline_chars", r.baseline_chars},     {"baseline_words", r.baseline_words},
          {"aggregated_chars", r.aggregated_chars}, {"aggregated_words", r.aggregated_words},
          {"reduction_ratio", r.reduction_ratio},   {"messages_in", r.messages_in},
          {"clauses_out", r.clauses_out},           {"sentences_out", r.sentences_out}};
}

std::uint64_t SplitMix64::Next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

AtomicValue SyntheticValue(const AttributeDecl &decl, std::size_t k) {
  switch (decl.type) {
    case ValueType::kSymbol: {
      const char initial = decl.name.empty() ? 'V' : decl.name.front();
      return Symbol{std::string(1, static_cast<char>(std::toupper(
                        static_cast<unsigned char>(initial)))) +
                    std::to_string(k + 1)};
    }
    case ValueType::kInteger:
      return static_cast<std::int64_t>(100 + k);
    case ValueType::kQuarterDate:
      return QuarterDate{1994 + static_cast<int>(k / 4), static_cast<int>(k % 4) + 1};
  }
  return Symbol{};
}

std::vector<Message> GenRandomInstance(std::uint64_t seed, const GenParams &params) {
  SplitMix64 rng(seed);
  std::vector<Message> out;
  out.reserve(params.n_messages);
  for (std::size_t i = 0; i < params.n_messages; ++i) {
    Message msg;
    msg.id = std::to_string(i);
    for (const auto &decl : params.schema.attributes) {
      auto pool = params.pools.find(decl.name);
      if (pool != params.pools.end() && !pool->second.empty()) {
        msg.attrs[decl.name] = pool->second[rng.Below(pool->second.size())];
        continue;
      }
      auto size = params.pool_sizes.find(decl.name);
      const std::size_t n = size == params.pool_sizes.end() ? 3 : std::max<std::size_t>(size->second, 1);
      msg.attrs[decl.name] = SyntheticValue(decl, rng.Below(n));
    }
    out.push_back(std::move(msg));
  }
  return out;
}

SyntheticDomain MakeSyntheticDomain(std::uint64_t seed, const SyntheticLimits &limits) {
  // Mixed into the seed so that domain shape and corpus draws are decorrelated.
  SplitMix64 rng(seed ^ 0x5eed5eed5eed5eedULL);
  SyntheticDomain dom;
  const std::size_t max_keys = std::clamp<std::size_t>(limits.max_group_keys, 1, 2);
  const std::size_t n_keys =
      std::min<std::size_t>(1 + rng.Below(max_keys), std::max<std::size_t>(limits.max_attributes, 2) - 1);
  const std::size_t max_other = std::max<std::size_t>(limits.max_attributes, n_keys + 1) - n_keys;
  const std::size_t n_other = 1 + rng.Below(max_other);

  if (n_keys == 2) {
    dom.schema.attributes.push_back({"class", ValueType::kSymbol});
    dom.schema.group_keys.push_back("class");
  }
  dom.schema.attributes.push_back({"action", ValueType::kSymbol});
  dom.schema.group_keys.push_back("action");

  static constexpr const char *kNames[] = {"equipment", "site", "date", "count", "route",
                                           "zone",      "phase", "owner"};
  static constexpr const char *kPrepositions[] = {"", "for", "in", "with", "at", "on", "via", "by"};
  for (std::size_t i = 0; i < n_other; ++i) {
    const std::string name = kNames[i % 8];
    ValueType type = ValueType::kSymbol;
    switch (rng.Below(4)) {
      case 0: type = ValueType::kInteger; break;
      case 1: type = ValueType::kQuarterDate; break;
      default: break;
    }
    dom.schema.attributes.push_back({name, type});
    AttributeTemplate tmpl{name, std::nullopt, std::nullopt, std::nullopt};
    if (type == ValueType::kQuarterDate) {
      tmpl.preposition = "in";
    } else {
      const char *prep = kPrepositions[rng.Below(8)];
      if (*prep) tmpl.preposition = prep;
      if (rng.Below(2) == 0) {
        tmpl.singular = name;
        tmpl.plural = name + "s";
      }
    }
    dom.lexicon.templates.push_back(std::move(tmpl));
  }
  // Random permutation of the aggregating attributes as the priority list.
  std::vector<std::string> prio = dom.schema.AggregatingAttributes();
  for (std::size_t i = prio.size(); i > 1; --i) std::swap(prio[i - 1], prio[rng.Below(i)]);
  dom.schema.tie_break_priority = std::move(prio);
  dom.schema.tie_break =
      rng.Below(2) == 0 ? TieBreak::kHigherPriorityDominant : TieBreak::kHigherPriorityFirst;

  dom.params.schema = dom.schema;
  dom.params.n_messages = rng.Below(limits.max_messages + 1);
  for (const auto &decl : dom.schema.attributes) {
    const std::size_t pool = 1 + rng.Below(std::max<std::size_t>(limits.max_pool, 1));
    dom.params.pool_sizes[decl.name] = dom.schema.IsGroupKey(decl.name) ? std::min<std::size_t>(pool, 2) : pool;
  }
  for (std::size_t k = 0; k < 2; ++k) {
    const auto action = SyntheticValue({"action", ValueType::kSymbol}, k);
    dom.lexicon.verbs[ValueToString(action)] = k == 0 ? "activated" : "extended";
  }
  dom.lexicon.subject_first = "This plan";
  dom.lexicon.subject_subsequent = "It also";
  return dom;
}

}  // namespace sentagg
