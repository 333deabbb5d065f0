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

// Fixtures shared by the unit and acceptance suites: the four activation
// messages of the worked example and the E/S/D abbreviation key used to
// describe them.

#ifndef SENTAGG_TESTS_FIXTURES_H_
#define SENTAGG_TESTS_FIXTURES_H_

#include <fstream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "sentagg/aggregate.h"
#include "sentagg/config.h"
#include "sentagg/message.h"

namespace sentagg::testing {

inline const std::string kGoldenText =
    "This refinement activated DLC for CSAs 3122 and 3130 in the first quarter of 1994 and "
    "ALL-DLC for CSA 3134 in 1994 Q3.  It also activated DSS-DLC for CSA 3208 in 1994 Q3.";

inline const std::string kCrossingText =
    "This refinement activated ALL-DLC and DSS-DLC for CSAs 3122 and 3130 in the third "
    "quarter of 1993.";

inline Message Activation(const std::string &id, const std::string &equipment,
                          const std::string &site, int year, int quarter) {
  Message m;
  m.id = id;
  m.attrs = {{"class", Symbol{"refinement"}},
             {"action", Symbol{"activation"}},
             {"equipment-type", Symbol{equipment}},
             {"csa-site", Symbol{site}},
             {"date", QuarterDate{year, quarter}}};
  return m;
}

// (E1 S3 D2), (E2 S2 D1), (E3 S4 D2), (E2 S1 D1) in generator order.
inline std::vector<Message> ActivationMessages() {
  return {Activation("0", "ALL-DLC", "3134", 1994, 3), Activation("1", "DLC", "3130", 1994, 1),
          Activation("2", "DSS-DLC", "3208", 1994, 3), Activation("3", "DLC", "3122", 1994, 1)};
}

// {ALL-DLC, DSS-DLC} x {3122, 3130}, all in 1993 Q3.
inline std::vector<Message> CrossingMessages() {
  return {Activation("0", "DSS-DLC", "3130", 1993, 3), Activation("1", "ALL-DLC", "3122", 1993, 3),
          Activation("2", "DSS-DLC", "3122", 1993, 3), Activation("3", "ALL-DLC", "3130", 1993, 3)};
}

inline std::string Abbrev(const std::string &attr, const AtomicValue &v) {
  static const std::map<std::string, std::string> kKey = {
      {"ALL-DLC", "E1"}, {"DLC", "E2"},  {"DSS-DLC", "E3"}, {"3122", "S1"}, {"3130", "S2"},
      {"3134", "S3"},    {"3208", "S4"}, {"1994Q1", "D1"},  {"1994Q3", "D2"}};
  (void)attr;
  const std::string s = ValueToString(v);
  auto it = kKey.find(s);
  return it == kKey.end() ? s : it->second;
}

inline std::string Abbrev(const std::string &attr, const AttrValue &v) {
  if (!v.conjoined()) return Abbrev(attr, v.values.front());
  std::string out = "(";
  for (size_t i = 0; i < v.values.size(); ++i) {
    if (i) out += " ";
    out += Abbrev(attr, v.values[i]);
  }
  return out + ")";
}

// "(E2 (S1 S2) D1)"
inline std::string Abbrev(const AggregateMessage &m) {
  return "(" + Abbrev("equipment-type", m.attrs.at("equipment-type")) + " " +
         Abbrev("csa-site", m.attrs.at("csa-site")) + " " + Abbrev("date", m.attrs.at("date")) +
         ")";
}

inline std::string Abbrev(const Message &m) {
  return "(" + Abbrev("equipment-type", m.attrs.at("equipment-type")) + " " +
         Abbrev("csa-site", m.attrs.at("csa-site")) + " " + Abbrev("date", m.attrs.at("date")) +
         ")";
}

template <typename T>
std::vector<std::string> AbbrevAll(const std::vector<T> &items) {
  std::vector<std::string> out;
  for (const auto &m : items) out.push_back(Abbrev(m));
  return out;
}

inline std::vector<AggregateMessage> ToAggregates(const std::vector<Message> &msgs,
                                                  const AttributeSchema &schema) {
  std::vector<AggregateMessage> out;
  for (const auto &m : msgs) out.push_back(FromMessage(m, schema));
  return out;
}

inline std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string DataPath(const std::string &name) {
  return std::string(SENTAGG_TEST_DATA) + "/" + name;
}

}  // namespace sentagg::testing

#endif  // SENTAGG_TESTS_FIXTURES_H_
