// Copyright 2026 The moodkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moodkit {

// Broad failure category. The numeric values double as CLI exit codes.
enum class ErrorCategory : int {
  kIo = 1,
  kParse = 2,
  kValidation = 3,
  kCompute = 4,
};

enum class ErrorCode {
  kIo,
  kParse,
  kValidation,
  kUnknownClass,
  kDomain,
  kRankDeficient,
  kInsufficientData,
  kDegenerateResponse,
  kMissingPredictor,
  kUnknownColumn,
  kNonpositiveValue,
  kMalformedRow,
  kNonNumeric,
  kInvalidSpec,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code) noexcept;
ErrorCategory error_category(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return error_category(code_); }

 private:
  ErrorCode code_;
};

}  // namespace moodkit
