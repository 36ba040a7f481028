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

#ifndef HALFTRUTH_ERROR_HPP_
#define HALFTRUTH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace halftruth {

enum class ErrorCode {
  kPriorOutOfRange,
  kParentIndexOutOfRange,
  kTableLengthMismatch,
  kProbabilityOutOfRange,
  kLinearCoeffsInvalid,
  kParentCapExceeded,
  kArityMismatch,
  kWrongMaskAction,
  kLengthMismatch,
  kInstanceTooLarge,
  kNonMonotoneTransition,
  kWrongAction,
  kWrongNorm,
  kNonLinearTransition,
  kSpecInvalid,
  kWrongFamily,
  kParseError,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported with this exception; `code()` identifies
// the violated precondition and `what()` carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace halftruth

#endif  // HALFTRUTH_ERROR_HPP_
