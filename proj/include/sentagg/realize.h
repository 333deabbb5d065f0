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

// Template realizer: turns a DocumentPlan into English text.
//
// A clause reads "<subject> <verb> <phrase>...", one phrase per attribute in
// template order, each phrase being "<preposition> <classifier> <values>".
// Conjoined values take the plural classifier once: "for CSAs 3122 and 3130".

#ifndef SENTAGG_REALIZE_H_
#define SENTAGG_REALIZE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sentagg/aggregate.h"
#include "sentagg/message.h"

namespace sentagg {

struct AttributeTemplate {
  std::string attribute;
  std::optional<std::string> preposition;
  std::optional<std::string> singular;
  // Falls back to singular + "s".
  std::optional<std::string> plural;
};

struct Lexicon {
  std::string subject_first = "This refinement";
  std::string subject_subsequent = "It also";
  // Group key whose value selects the verb.
  std::string verb_attribute = "action";
  std::map<std::string, std::string> verbs;
  std::vector<AttributeTemplate> templates;
  // Placeholders: {ordinal} (first..fourth), {year}, {quarter}.
  std::string date_long = "the {ordinal} quarter of {year}";
  std::string date_short = "{year} Q{quarter}";
  std::string conjunction = "and";
  SymbolCasing casing;

  const AttributeTemplate *FindTemplate(const std::string &attribute) const;
  // Throws Error(kMissingVerb).
  const std::string &Verb(const AtomicValue &action) const;
};

// Throws Error(kMissingTemplate) if an aggregating attribute has no template,
// or kInvalidSchema if the verb attribute is not a group key.
void ValidateLexicon(const Lexicon &lex, const AttributeSchema &schema);

enum class DateStyle { kAuto, kAllShort, kAllLong };
enum class DateForm { kLong, kShort };

struct RealizeOptions {
  // kAuto: the first date phrase of the document is long, the rest short.
  DateStyle date_style = DateStyle::kAuto;
  bool oxford_comma = false;
  std::string sentence_separator = "  ";
};

// Hands out the form for each date phrase in document order.
class DatePhraser {
 public:
  explicit DatePhraser(DateStyle style) : style_(style) {}
  DateForm Next();

 private:
  DateStyle style_;
  bool first_ = true;
};

std::string FormatDate(const QuarterDate &date, const Lexicon &lex, DateForm form);

// "A", "A and B", "A, B and C" (or "A, B, and C" with the Oxford comma).
std::string JoinList(const std::vector<std::string> &items, const std::string &conjunction,
                     bool oxford_comma);

std::string RealizeValue(const std::string &attribute, const AttrValue &value,
                         const Lexicon &lex, DateForm form, bool oxford_comma = false);

enum class ClausePosition { kFirst, kSubsequent };

// `subject` and `verb` are used unless deleted; a subsequent clause that keeps
// its subject starts lowercase. Date phrases draw their form from `dates`.
std::string RealizeClause(const Clause &clause, ClausePosition position,
                          const std::string &subject, const std::string &verb,
                          const Lexicon &lex, const RealizeOptions &options,
                          DatePhraser &dates);

std::string RealizeDocument(const DocumentPlan &plan, const Lexicon &lex,
                            const RealizeOptions &options = {});

// One full sentence per message in input order, all dates short.
std::string RealizeBaseline(const std::vector<Message> &msgs, const AttributeSchema &schema,
                            const Lexicon &lex, const RealizeOptions &options = {});

}  // namespace sentagg

#endif  // SENTAGG_REALIZE_H_
