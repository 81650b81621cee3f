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

#include "fastgen/error.hpp"

namespace fastgen {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid argument";
    case ErrorCode::kSearchExhausted:
      return "search exhausted";
    case ErrorCode::kNotInvertible:
      return "not invertible";
    case ErrorCode::kNotMember:
      return "not a subgroup member";
    case ErrorCode::kIdentity:
      return "identity element";
    case ErrorCode::kScaleBound:
      return "desk-scale bound exceeded";
    case ErrorCode::kTrapdoorMismatch:
      return "trapdoor mismatch";
    case ErrorCode::kHeaderMismatch:
      return "header mismatch";
    case ErrorCode::kFormat:
      return "format error";
  }
  return "unknown";
}

}  // namespace fastgen
