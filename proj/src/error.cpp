// Copyright 2026 The Authors.
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

#include "halftruth/error.hpp"

namespace halftruth {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPriorOutOfRange: return "PriorOutOfRange";
    case ErrorCode::kParentIndexOutOfRange: return "ParentIndexOutOfRange";
    case ErrorCode::kTableLengthMismatch: return "TableLengthMismatch";
    case ErrorCode::kProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::kLinearCoeffsInvalid: return "LinearCoeffsInvalid";
    case ErrorCode::kParentCapExceeded: return "ParentCapExceeded";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kWrongMaskAction: return "WrongMaskAction";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kNonMonotoneTransition: return "NonMonotoneTransition";
    case ErrorCode::kWrongAction: return "WrongAction";
    case ErrorCode::kWrongNorm: return "WrongNorm";
    case ErrorCode::kNonLinearTransition: return "NonLinearTransition";
    case ErrorCode::kSpecInvalid: return "SpecInvalid";
    case ErrorCode::kWrongFamily: return "WrongFamily";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace halftruth
