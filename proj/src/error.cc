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

#include "sentagg/error.h"

namespace sentagg {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnbalancedParens: return "UnbalancedParens";
    case ErrorCode::kSyntax: return "Syntax";
    case ErrorCode::kUnknownAttribute: return "UnknownAttribute";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kMissingAttribute: return "MissingAttribute";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kInvalidSchema: return "InvalidSchema";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kMissingTemplate: return "MissingTemplate";
    case ErrorCode::kMissingVerb: return "MissingVerb";
    case ErrorCode::kUnrecoverableDeletion: return "UnrecoverableDeletion";
  }
  return "Unknown";
}

namespace {

std::string Format(ErrorCode code, const std::string &detail, Position pos) {
  std::string out(ErrorCodeName(code));
  if (pos.line > 0) {
    out += " at line " + std::to_string(pos.line);
    if (pos.column > 0) out += ", column " + std::to_string(pos.column);
  }
  out += ": ";
  out += detail;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string detail, Position pos)
    : std::runtime_error(Format(code, detail, pos)),
      code_(code),
      pos_(pos),
      detail_(std::move(detail)) {}

bool Error::IsInputError() const {
  switch (code_) {
    case ErrorCode::kUnbalancedParens:
    case ErrorCode::kSyntax:
    case ErrorCode::kUnknownAttribute:
    case ErrorCode::kTypeMismatch:
    case ErrorCode::kMissingAttribute:
    case ErrorCode::kMalformedLine:
      return true;
    default:
      return false;
  }
}

}  // namespace sentagg
