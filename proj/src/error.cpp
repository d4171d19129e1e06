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

#include "moodkit/error.hpp"

namespace moodkit {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kIo: return "IO_ERROR";
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kValidation: return "VALIDATION_ERROR";
    case ErrorCode::kUnknownClass: return "UNKNOWN_CLASS";
    case ErrorCode::kDomain: return "DOMAIN";
    case ErrorCode::kRankDeficient: return "RANK_DEFICIENT";
    case ErrorCode::kInsufficientData: return "INSUFFICIENT_DATA";
    case ErrorCode::kDegenerateResponse: return "DEGENERATE_RESPONSE";
    case ErrorCode::kMissingPredictor: return "MISSING_PREDICTOR";
    case ErrorCode::kUnknownColumn: return "UNKNOWN_COLUMN";
    case ErrorCode::kNonpositiveValue: return "NONPOSITIVE_VALUE";
    case ErrorCode::kMalformedRow: return "MALFORMED_ROW";
    case ErrorCode::kNonNumeric: return "NON_NUMERIC";
    case ErrorCode::kInvalidSpec: return "INVALID_SPEC";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

ErrorCategory error_category(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kIo: return ErrorCategory::kIo;
    case ErrorCode::kParse:
    case ErrorCode::kMalformedRow:
    case ErrorCode::kNonNumeric: return ErrorCategory::kParse;
    case ErrorCode::kValidation: return ErrorCategory::kValidation;
    default: return ErrorCategory::kCompute;
  }
}

}  // namespace moodkit
