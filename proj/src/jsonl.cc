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

#include "sentagg/jsonl.h"

#include "sentagg/error.h"

namespace sentagg {
namespace {

using nlohmann::json;

std::int64_t ToInteger(const json &v, const std::string &attr, Position pos) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > INT64_MAX) {
      throw Error(ErrorCode::kTypeMismatch, "'" + attr + "' integer out of range", pos);
    }
    return v.get<std::int64_t>();
  }
  throw Error(ErrorCode::kTypeMismatch, "'" + attr + "' expects an integer, got " + v.dump(),
              pos);
}

AtomicValue ToValue(const json &v, const AttributeDecl &decl, const SymbolCasing *casing,
                    Position pos) {
  switch (decl.type) {
    case ValueType::kSymbol:
      if (!v.is_string()) {
        throw Error(ErrorCode::kTypeMismatch,
                    "'" + decl.name + "' expects a string, got " + v.dump(), pos);
      }
      return Symbol{casing ? casing->Canonicalize(decl.name, v.get<std::string>())
                           : v.get<std::string>()};
    case ValueType::kInteger:
      return ToInteger(v, decl.name, pos);
    case ValueType::kQuarterDate: {
      if (!v.is_object() || v.size() != 2 || !v.contains("year") || !v.contains("quarter")) {
        throw Error(ErrorCode::kTypeMismatch,
                    "'" + decl.name + "' expects {\"year\": Y, \"quarter\": Q}, got " + v.dump(),
                    pos);
      }
      const std::int64_t year = ToInteger(v["year"], decl.name + ".year", pos);
      const std::int64_t quarter = ToInteger(v["quarter"], decl.name + ".quarter", pos);
      if (quarter < 1 || quarter > 4) {
        throw Error(ErrorCode::kTypeMismatch,
                    "'" + decl.name + "' quarter " + std::to_string(quarter) + " outside 1-4",
                    pos);
      }
      if (year < INT32_MIN || year > INT32_MAX) {
        throw Error(ErrorCode::kTypeMismatch, "'" + decl.name + "' year out of range", pos);
      }
      return QuarterDate{static_cast<int>(year), static_cast<int>(quarter)};
    }
  }
  throw Error(ErrorCode::kTypeMismatch, "unsupported type", pos);
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r\f\v") == std::string_view::npos;
}

}  // namespace

std::vector<Message> ParseJsonl(std::string_view text, const AttributeSchema &schema,
                                const SymbolCasing *casing) {
  std::vector<Message> out;
  int line_no = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (IsBlank(line)) continue;

    const Position pos{line_no, 0};
    json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded()) {
      throw Error(ErrorCode::kMalformedLine, "line is not valid JSON", pos);
    }
    if (!obj.is_object()) {
      throw Error(ErrorCode::kMalformedLine, "line is not a JSON object", pos);
    }
    Message msg;
    msg.id = std::to_string(out.size());
    for (const auto &[key, value] : obj.items()) {
      if (key == "id") {
        if (value.is_string()) {
          msg.id = value.get<std::string>();
        } else if (value.is_number_integer()) {
          msg.id = value.dump();
        } else {
          throw Error(ErrorCode::kMalformedLine, "id must be a string or integer", pos);
        }
        continue;
      }
      if (key == "admin") {
        if (!value.is_object()) {
          throw Error(ErrorCode::kMalformedLine, "admin must be an object", pos);
        }
        for (const auto &[k, v] : value.items()) {
          msg.admin.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
        }
        continue;
      }
      const AttributeDecl *decl = schema.FindIgnoreCase(key);
      if (!decl) {
        throw Error(ErrorCode::kUnknownAttribute, "unknown attribute '" + key + "'", pos);
      }
      if (msg.attrs.count(decl->name)) {
        throw Error(ErrorCode::kMalformedLine, "duplicate attribute '" + decl->name + "'", pos);
      }
      msg.attrs.emplace(decl->name, ToValue(value, *decl, casing, pos));
    }
    for (const auto &decl : schema.attributes) {
      if (!msg.attrs.count(decl.name)) {
        throw Error(ErrorCode::kMissingAttribute, "missing attribute '" + decl.name + "'", pos);
      }
    }
    out.push_back(std::move(msg));
  }
  return out;
}

nlohmann::json AtomicValueToJson(const AtomicValue &value) {
  if (const auto *s = std::get_if<Symbol>(&value)) return s->text;
  if (const auto *i = std::get_if<std::int64_t>(&value)) return *i;
  const auto &d = std::get<QuarterDate>(value);
  return json{{"quarter", d.quarter}, {"year", d.year}};
}

nlohmann::json MessageToJson(const Message &msg) {
  json obj = json::object();
  obj["id"] = msg.id;
  if (!msg.admin.empty()) {
    json admin = json::object();
    for (const auto &[k, v] : msg.admin) admin[k] = v;
    obj["admin"] = std::move(admin);
  }
  for (const auto &[name, value] : msg.attrs) obj[name] = AtomicValueToJson(value);
  return obj;
}

std::string SerializeJsonl(const std::vector<Message> &msgs) {
  std::string out;
  for (const auto &msg : msgs) {
    out += MessageToJson(msg).dump();
    out += '\n';
  }
  return out;
}

}  // namespace sentagg
