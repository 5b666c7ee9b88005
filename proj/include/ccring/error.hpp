/*
   Copyright 2026 The ccring Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CCRING_ERROR_HPP_
#define CCRING_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ccring {

enum class ErrorCode {
  kNotPrime,
  kReducibleModulus,
  kDegreeMismatch,
  kDivisionByZero,
  kContextMismatch,
  kZeroLambda,
  kNotSquarefree,
  kConstantInput,
  kBadModulus,
  kZeroPolynomial,
  kBothZero,
  kGcdViolation,
  kSZero,
  kIndexOutOfRange,
  kLengthMismatch,
  kRangeError,
  kInvalidSpec,
  kTooLarge,
  kNotSelfPairedLambda,
  kParseError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ccring

#endif  // CCRING_ERROR_HPP_
