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

#include "fastgen/random.hpp"

#include "fastgen/error.hpp"

namespace fastgen {

BigInt Rng::random_bits(std::size_t bits) {
  BigInt out = 0;
  std::size_t remaining = bits;
  while (remaining > 0) {
    std::size_t take = remaining < 64 ? remaining : 64;
    std::uint64_t word = engine_();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    out <<= take;
    out += from_u64(word);
    remaining -= take;
  }
  return out;
}

BigInt Rng::below(const BigInt& bound) {
  if (bound <= 0) throw Error(ErrorCode::kInvalidArgument, "empty sampling range");
  if (bound == 1) return 0;
  std::size_t bits = bit_length(bound - 1);
  for (;;) {
    BigInt candidate = random_bits(bits);
    if (candidate < bound) return candidate;
  }
}

BigInt Rng::in_range(const BigInt& lo, const BigInt& hi) {
  if (hi < lo) throw Error(ErrorCode::kInvalidArgument, "empty sampling range");
  BigInt span = hi - lo + 1;
  return lo + below(span);
}

BigInt Rng::with_bits(std::size_t bits) {
  if (bits == 0) throw Error(ErrorCode::kInvalidArgument, "zero-bit sample");
  BigInt top = 1;
  top <<= bits - 1;
  return top + random_bits(bits - 1);
}

double Rng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace fastgen
