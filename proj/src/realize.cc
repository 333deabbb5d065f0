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

#include "sentagg/realize.h"

#include <cctype>

#include "sentagg/error.h"

namespace sentagg {
namespace {

constexpr const char *kOrdinals[] = {"first", "second", "third", "fourth"};

void ReplaceAll(std::string &s, const std::string &from, const std::string &to) {
  for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size())) {
    s.replace(at, from.size(), to);
  }
}

std::string JoinWords(const std::vector<std::string> &parts) {
  std::string out;
  for (const auto &p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::string WithFirst(std::string s, int (*fn)(int)) {
  if (!s.empty()) s[0] = static_cast<char>(fn(static_cast<unsigned char>(s[0])));
  return s;
}

std::string FinishSentence(std::string body) {
  body = WithFirst(std::move(body), ::toupper);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();
  return body + ".";
}

}  // namespace

const AttributeTemplate *Lexicon::FindTemplate(const std::string &attribute) const {
  for (const auto &t : templates) {
    if (t.attribute == attribute) return &t;
  }
  return nullptr;
}

const std::string &Lexicon::Verb(const AtomicValue &action) const {
  const std::string key = ValueToString(action);
  auto it = verbs.find(key);
  if (it == verbs.end()) it = verbs.find(ToLower(key));
  if (it == verbs.end()) throw Error(ErrorCode::kMissingVerb, "no verb for action '" + key + "'");
  return it->second;
}

void ValidateLexicon(const Lexicon &lex, const AttributeSchema &schema) {
  for (const auto &name : schema.AggregatingAttributes()) {
    if (!lex.FindTemplate(name)) {
      throw Error(ErrorCode::kMissingTemplate, "no template for attribute '" + name + "'");
    }
  }
  if (!schema.IsGroupKey(lex.verb_attribute)) {
    throw Error(ErrorCode::kInvalidSchema,
                "verb attribute '" + lex.verb_attribute + "' is not a group key");
  }
}

DateForm DatePhraser::Next() {
  switch (style_) {
    case DateStyle::kAllShort: return DateForm::kShort;
    case DateStyle::kAllLong: return DateForm::kLong;
    case DateStyle::kAuto: break;
  }
  if (first_) {
    first_ = false;
    return DateForm::kLong;
  }
  return DateForm::kShort;
}

std::string FormatDate(const QuarterDate &date, const Lexicon &lex, DateForm form) {
  std::string out = form == DateForm::kLong ? lex.date_long : lex.date_short;
  const int q = date.quarter;
  ReplaceAll(out, "{ordinal}", q >= 1 && q <= 4 ? kOrdinals[q - 1] : std::to_string(q));
  ReplaceAll(out, "{year}", std::to_string(date.year));
  ReplaceAll(out, "{quarter}", std::to_string(q));
  return out;
}

std::string JoinList(const std::vector<std::string> &items, const std::string &conjunction,
                     bool oxford_comma) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      const bool last = i + 1 == items.size();
      if (!last) {
        out += ", ";
      } else {
        out += (oxford_comma && items.size() > 2) ? ", " : " ";
        out += conjunction + " ";
      }
    }
    out += items[i];
  }
  return out;
}

std::string RealizeValue(const std::string &attribute, const AttrValue &value,
                         const Lexicon &lex, DateForm form, bool oxford_comma) {
  const AttributeTemplate *tmpl = lex.FindTemplate(attribute);
  if (!tmpl) {
    throw Error(ErrorCode::kMissingTemplate, "no template for attribute '" + attribute + "'");
  }
  std::vector<std::string> items;
  for (const auto &v : value.values) {
    if (const auto *d = std::get_if<QuarterDate>(&v)) {
      items.push_back(FormatDate(*d, lex, form));
    } else {
      items.push_back(ValueToString(v));
    }
  }
  std::string classifier;
  if (value.conjoined()) {
    if (tmpl->plural) {
      classifier = *tmpl->plural;
    } else if (tmpl->singular) {
      classifier = *tmpl->singular + "s";
    }
  } else if (tmpl->singular) {
    classifier = *tmpl->singular;
  }
  return JoinWords({tmpl->preposition.value_or(""), classifier,
                    JoinList(items, lex.conjunction, oxford_comma)});
}

std::string RealizeClause(const Clause &clause, ClausePosition position,
                          const std::string &subject, const std::string &verb,
                          const Lexicon &lex, const RealizeOptions &options,
                          DatePhraser &dates) {
  std::vector<std::string> parts;
  if (!clause.subject_deleted) {
    parts.push_back(position == ClausePosition::kFirst ? subject : WithFirst(subject, ::tolower));
  }
  if (!clause.verb_deleted) parts.push_back(verb);
  for (const auto &[name, value] : clause.body.attrs) {
    if (!lex.FindTemplate(name)) {
      throw Error(ErrorCode::kMissingTemplate, "no template for attribute '" + name + "'");
    }
  }
  for (const auto &tmpl : lex.templates) {
    auto it = clause.body.attrs.find(tmpl.attribute);
    if (it == clause.body.attrs.end() || clause.Deleted(tmpl.attribute)) continue;
    const AttrValue &value = it->second;
    DateForm form = DateForm::kShort;
    if (!value.values.empty() && std::holds_alternative<QuarterDate>(value.values.front())) {
      form = dates.Next();
    }
    parts.push_back(RealizeValue(tmpl.attribute, value, lex, form, options.oxford_comma));
  }
  return JoinWords(parts);
}

std::string RealizeDocument(const DocumentPlan &plan, const Lexicon &lex,
                            const RealizeOptions &options) {
  DatePhraser dates(options.date_style);
  std::vector<std::string> sentences;
  for (const auto &group : plan.groups) {
    const AtomicValue *action = group.Key(lex.verb_attribute);
    if (!action) {
      throw Error(ErrorCode::kMissingVerb,
                  "group has no '" + lex.verb_attribute + "' key to choose a verb");
    }
    const std::string &verb = lex.Verb(*action);
    for (std::size_t s = 0; s < group.sentences.size(); ++s) {
      const std::string &subject = s == 0 ? lex.subject_first : lex.subject_subsequent;
      std::vector<std::string> clauses;
      const auto &sentence = group.sentences[s];
      for (std::size_t c = 0; c < sentence.clauses.size(); ++c) {
        clauses.push_back(RealizeClause(
            sentence.clauses[c], c == 0 ? ClausePosition::kFirst : ClausePosition::kSubsequent,
            subject, verb, lex, options, dates));
      }
      std::string body;
      for (std::size_t c = 0; c < clauses.size(); ++c) {
        if (c > 0) body += " " + lex.conjunction + " ";
        body += clauses[c];
      }
      sentences.push_back(FinishSentence(std::move(body)));
    }
  }
  std::string out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i > 0) out += options.sentence_separator;
    out += sentences[i];
  }
  return out;
}

std::string RealizeBaseline(const std::vector<Message> &msgs, const AttributeSchema &schema,
                            const Lexicon &lex, const RealizeOptions &options) {
  DatePhraser dates(DateStyle::kAllShort);
  std::string out;
  for (const auto &msg : msgs) {
    auto action = msg.attrs.find(lex.verb_attribute);
    if (action == msg.attrs.end()) {
      throw Error(ErrorCode::kMissingVerb,
                  "message " + msg.id + " has no '" + lex.verb_attribute + "' attribute");
    }
    const Clause clause(FromMessage(msg, schema));
    if (!out.empty()) out += options.sentence_separator;
    out += FinishSentence(RealizeClause(clause, ClausePosition::kFirst, lex.subject_first,
                                  lex.Verb(action->second), lex, options, dates));
  }
  return out;
}

}  // namespace sentagg
