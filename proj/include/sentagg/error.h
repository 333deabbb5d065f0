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

#ifndef SENTAGG_ERROR_H_
#define SENTAGG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sentagg {

enum class ErrorCode {
  kUnbalancedParens,
  kSyntax,
  kUnknownAttribute,
  kTypeMismatch,
  kMissingAttribute,
  kMalformedLine,
  kInvalidSchema,
  kInvalidConfig,
  kMissingTemplate,
  kMissingVerb,
  kUnrecoverableDeletion,
};

std::string_view ErrorCodeName(ErrorCode code);

// Source position of a parse error. Lines and columns are 1-based; zero
// means "not applicable".
struct Position {
  int line = 0;
  int column = 0;
};

// Every recoverable failure in the library is reported as an Error. The
// what() string is "<CodeName> at line L, column C: <detail>" when a position
// is known, otherwise "<CodeName>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail, Position pos = {});

  ErrorCode code() const { return code_; }
  const Position &position() const { return pos_; }
  const std::string &detail() const { return detail_; }

  bool IsInputError() const;

 private:
  ErrorCode code_;
  Position pos_;
  std::string detail_;
};

}  // namespace sentagg

#endif  // SENTAGG_ERROR_H_
