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

#include "fastgen/bigint.hpp"

#include "fastgen/error.hpp"

namespace fastgen {

std::string to_hex(const BigInt& v) {
  if (v < 0) throw Error(ErrorCode::kInvalidArgument, "negative value has no encoding");
  return v.get_str(16);
}

BigInt from_hex(std::string_view hex) {
  if (hex.empty()) throw Error(ErrorCode::kFormat, "empty hex string");
  for (char c : hex) {
    bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!ok) {
      throw Error(ErrorCode::kFormat,
                  "invalid hex digit in '" + std::string(hex) + "'");
    }
  }
  if (hex.size() > 1 && hex.front() == '0') {
    throw Error(ErrorCode::kFormat, "hex value has leading zeros: " + std::string(hex));
  }
  return BigInt(std::string(hex), 16);
}

BigInt from_u64(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || bit_length(v) > 64) {
    throw Error(ErrorCode::kInvalidArgument, "value does not fit 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::size_t popcount(const BigInt& v) {
  return mpz_popcount(v.get_mpz_t());
}

bool test_bit(const BigInt& v, std::size_t i) {
  return mpz_tstbit(v.get_mpz_t(), i) != 0;
}

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::size_t ceil_log2(const BigInt& n) {
  if (n <= 1) return 0;
  BigInt m = n - 1;
  return bit_length(m);
}

}  // namespace fastgen
