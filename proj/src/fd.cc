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

#include "sentagg/fd.h"

#include <charconv>
#include <set>

#include "sentagg/error.h"

namespace sentagg {
namespace {

constexpr int kMaxDepth = 64;

struct Node {
  bool is_list = false;
  std::string atom;
  std::vector<Node> items;
  Position pos;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  // Returns false at end of input.
  bool Next(Node *out) {
    SkipSpace();
    if (AtEnd()) return false;
    *out = ReadNode(0);
    return true;
  }

 private:
  bool AtEnd() const { return at_ >= text_.size(); }
  Position Here() const { return {line_, col_}; }

  char Advance() {
    const char c = text_[at_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void SkipSpace() {
    while (!AtEnd()) {
      const char c = text_[at_];
      if (c == ';') {
        while (!AtEnd() && text_[at_] != '\n') Advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
        Advance();
      } else {
        break;
      }
    }
  }

  static bool IsDelimiter(char c) {
    return c == '(' || c == ')' || c == '"' || c == ';' || c == ' ' || c == '\t' ||
           c == '\n' || c == '\r' || c == '\f' || c == '\v';
  }

  Node ReadNode(int depth) {
    Node node;
    node.pos = Here();
    const char c = text_[at_];
    if (c == ')') {
      throw Error(ErrorCode::kUnbalancedParens, "unexpected ')'", node.pos);
    }
    if (c == '(') {
      if (depth >= kMaxDepth) {
        throw Error(ErrorCode::kSyntax, "nesting deeper than " + std::to_string(kMaxDepth),
                    node.pos);
      }
      Advance();
      node.is_list = true;
      for (;;) {
        SkipSpace();
        if (AtEnd()) {
          throw Error(ErrorCode::kUnbalancedParens, "'(' is never closed", node.pos);
        }
        if (text_[at_] == ')') {
          Advance();
          return node;
        }
        node.items.push_back(ReadNode(depth + 1));
      }
    }
    if (c == '"') {
      Advance();
      for (;;) {
        if (AtEnd()) throw Error(ErrorCode::kSyntax, "unterminated string", node.pos);
        char ch = Advance();
        if (ch == '"') return node;
        if (ch == '\\') {
          if (AtEnd()) throw Error(ErrorCode::kSyntax, "unterminated string", node.pos);
          ch = Advance();
        }
        node.atom.push_back(ch);
      }
    }
    while (!AtEnd() && !IsDelimiter(text_[at_])) node.atom.push_back(Advance());
    return node;
  }

  std::string_view text_;
  size_t at_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const Node &ExpectAtom(const Node &node, ErrorCode code, const std::string &what) {
  if (node.is_list) throw Error(code, what + " must be an atom", node.pos);
  return node;
}

// Splits "(key value)" into its two parts.
std::pair<const Node *, const Node *> ExpectPair(const Node &node, const std::string &what) {
  if (!node.is_list || node.items.size() != 2 || node.items[0].is_list) {
    throw Error(ErrorCode::kSyntax, what + " must be a (name value) pair", node.pos);
  }
  return {&node.items[0], &node.items[1]};
}

std::int64_t ParseInteger(const Node &node, const std::string &attr) {
  ExpectAtom(node, ErrorCode::kTypeMismatch, "value of '" + attr + "'");
  const std::string &s = node.atom;
  std::int64_t value = 0;
  const char *begin = s.data();
  const char *end = s.data() + s.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kTypeMismatch, "'" + attr + "' expects an integer, got '" + s + "'",
                node.pos);
  }
  return value;
}

QuarterDate ParseDate(const Node &node, const std::string &attr) {
  if (!node.is_list) {
    throw Error(ErrorCode::kTypeMismatch,
                "'" + attr + "' expects ((year Y) (quarter Q)), got '" + node.atom + "'",
                node.pos);
  }
  std::optional<std::int64_t> year, quarter;
  for (const Node &item : node.items) {
    if (!item.is_list || item.items.size() != 2 || item.items[0].is_list) {
      throw Error(ErrorCode::kTypeMismatch, "'" + attr + "' date parts must be (name value)",
                  item.pos);
    }
    const std::string key = ToLower(item.items[0].atom);
    std::optional<std::int64_t> *slot = key == "year"      ? &year
                                        : key == "quarter" ? &quarter
                                                           : nullptr;
    if (!slot) {
      throw Error(ErrorCode::kTypeMismatch,
                  "'" + attr + "' has unexpected date part '" + item.items[0].atom + "'",
                  item.pos);
    }
    if (slot->has_value()) {
      throw Error(ErrorCode::kSyntax, "'" + attr + "' repeats date part '" + key + "'",
                  item.pos);
    }
    *slot = ParseInteger(item.items[1], attr + "." + key);
  }
  if (!year || !quarter) {
    throw Error(ErrorCode::kTypeMismatch, "'" + attr + "' needs both year and quarter",
                node.pos);
  }
  if (*quarter < 1 || *quarter > 4) {
    throw Error(ErrorCode::kTypeMismatch,
                "'" + attr + "' quarter " + std::to_string(*quarter) + " outside 1-4", node.pos);
  }
  if (*year < INT32_MIN || *year > INT32_MAX) {
    throw Error(ErrorCode::kTypeMismatch, "'" + attr + "' year out of range", node.pos);
  }
  return QuarterDate{static_cast<int>(*year), static_cast<int>(*quarter)};
}

Message Interpret(const Node &fd, const AttributeSchema &schema, const SymbolCasing *casing,
                  std::string id) {
  if (!fd.is_list) {
    throw Error(ErrorCode::kSyntax, "expected '(' to start a message, got '" + fd.atom + "'",
                fd.pos);
  }
  Message msg;
  msg.id = std::move(id);
  bool saw_admin = false;
  for (const Node &entry : fd.items) {
    auto [key_node, value] = ExpectPair(entry, "message entry");
    const std::string &key = key_node->atom;
    const std::string folded = ToLower(key);
    if (folded == "cat") {
      if (value->is_list || ToLower(value->atom) != "message") {
        throw Error(ErrorCode::kSyntax, "only (cat message) is supported", value->pos);
      }
      continue;
    }
    if (folded == "admin") {
      if (saw_admin) throw Error(ErrorCode::kSyntax, "duplicate admin entry", entry.pos);
      saw_admin = true;
      if (!value->is_list) throw Error(ErrorCode::kSyntax, "admin must be a list", value->pos);
      for (const Node &item : value->items) {
        auto [k, v] = ExpectPair(item, "admin entry");
        ExpectAtom(*v, ErrorCode::kSyntax, "admin value");
        msg.admin.emplace_back(k->atom, v->atom);
      }
      continue;
    }
    const AttributeDecl *decl = schema.FindIgnoreCase(key);
    if (!decl) {
      throw Error(ErrorCode::kUnknownAttribute, "unknown attribute '" + key + "'",
                  key_node->pos);
    }
    if (msg.attrs.count(decl->name)) {
      throw Error(ErrorCode::kSyntax, "duplicate attribute '" + decl->name + "'", entry.pos);
    }
    switch (decl->type) {
      case ValueType::kSymbol: {
        ExpectAtom(*value, ErrorCode::kTypeMismatch, "value of '" + decl->name + "'");
        std::string text = casing ? casing->Canonicalize(decl->name, value->atom) : value->atom;
        msg.attrs.emplace(decl->name, Symbol{std::move(text)});
        break;
      }
      case ValueType::kInteger:
        msg.attrs.emplace(decl->name, ParseInteger(*value, decl->name));
        break;
      case ValueType::kQuarterDate:
        msg.attrs.emplace(decl->name, ParseDate(*value, decl->name));
        break;
    }
  }
  for (const auto &decl : schema.attributes) {
    if (!msg.attrs.count(decl.name)) {
      throw Error(ErrorCode::kMissingAttribute, "missing attribute '" + decl.name + "'",
                  fd.pos);
    }
  }
  return msg;
}

bool NeedsQuoting(const std::string &atom) {
  if (atom.empty()) return true;
  for (char c : atom) {
    const auto u = static_cast<unsigned char>(c);
    if (c == '(' || c == ')' || c == '"' || c == ';' || c == '\\' || u <= ' ' || u == 0x7f) {
      return true;
    }
  }
  return false;
}

std::string WriteAtom(const std::string &atom) {
  if (!NeedsQuoting(atom)) return atom;
  std::string out = "\"";
  for (char c : atom) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

Message ParseFd(std::string_view text, const AttributeSchema &schema,
                const SymbolCasing *casing, std::string id) {
  Reader reader(text);
  Node fd;
  if (!reader.Next(&fd)) {
    throw Error(ErrorCode::kSyntax, "empty input", Position{1, 1});
  }
  Node extra;
  if (reader.Next(&extra)) {
    throw Error(ErrorCode::kSyntax, "trailing content after message", extra.pos);
  }
  return Interpret(fd, schema, casing, std::move(id));
}

std::vector<Message> ParseFdStream(std::string_view text, const AttributeSchema &schema,
                                   const SymbolCasing *casing) {
  std::vector<Message> out;
  Reader reader(text);
  Node fd;
  while (reader.Next(&fd)) {
    out.push_back(Interpret(fd, schema, casing, std::to_string(out.size())));
  }
  return out;
}

std::string SerializeFd(const Message &msg, const AttributeSchema &schema) {
  std::string out = "((cat message)";
  if (!msg.admin.empty()) {
    out += "\n (admin (";
    for (size_t i = 0; i < msg.admin.size(); ++i) {
      if (i > 0) out += "\n         ";
      out += "(" + WriteAtom(msg.admin[i].first) + " " + WriteAtom(msg.admin[i].second) + ")";
    }
    out += "))";
  }
  for (const auto &decl : schema.attributes) {
    auto it = msg.attrs.find(decl.name);
    if (it == msg.attrs.end()) continue;
    out += "\n (" + decl.name + " ";
    const AtomicValue &value = it->second;
    if (const auto *s = std::get_if<Symbol>(&value)) {
      out += WriteAtom(s->text);
    } else if (const auto *i = std::get_if<std::int64_t>(&value)) {
      out += std::to_string(*i);
    } else {
      const auto &d = std::get<QuarterDate>(value);
      out += "((year " + std::to_string(d.year) + ") (quarter " + std::to_string(d.quarter) +
             "))";
    }
    out += ")";
  }
  out += ")\n";
  return out;
}

}  // namespace sentagg
