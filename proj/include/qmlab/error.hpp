// Copyright 2026 The qmlab Authors
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

#ifndef QMLAB_ERROR_HPP_
#define QMLAB_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmlab {

enum class Errc {
  kDivisionByZero,
  kUnsupportedField,
  kInvalidField,
  kRegimeMismatch,
  kNoPairExists,
  kInvalidDelta,
  kDuplicatePoints,
  kBudgetExceeded,
  kInvalidScheme,
  kPreconditionViolated,
  kUnknownStrategy,
  kSchemaError,
  kInvalidArgument,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kUnsupportedField: return "UnsupportedField";
    case Errc::kInvalidField: return "InvalidField";
    case Errc::kRegimeMismatch: return "RegimeMismatch";
    case Errc::kNoPairExists: return "NoPairExists";
    case Errc::kInvalidDelta: return "InvalidDelta";
    case Errc::kDuplicatePoints: return "DuplicatePoints";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kInvalidScheme: return "InvalidScheme";
    case Errc::kPreconditionViolated: return "PreconditionViolated";
    case Errc::kUnknownStrategy: return "UnknownStrategy";
    case Errc::kSchemaError: return "SchemaError";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qmlab

#endif  // QMLAB_ERROR_HPP_
