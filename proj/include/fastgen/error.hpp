/*
 * Copyright 2026 The fastgen Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FASTGEN_ERROR_HPP_
#define FASTGEN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fastgen {

// Failure categories. The CLI maps each one onto a fixed exit code.
enum class ErrorCode {
  kInvalidArgument,   // precondition violated (bit length, epsilon, ...)
  kSearchExhausted,   // parameter search hit its attempt bound
  kNotInvertible,     // modular inverse does not exist
  kNotMember,         // value outside the order-p subgroup
  kIdentity,          // identity element where a generator is required
  kScaleBound,        // p exceeds the desk-scale discrete-log bound
  kTrapdoorMismatch,  // f^t does not reproduce the published generator
  kHeaderMismatch,    // ciphertext addressed to a different recipient
  kFormat,            // malformed file or encoding
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* to_string(ErrorCode code) noexcept;

}  // namespace fastgen

#endif  // FASTGEN_ERROR_HPP_
