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

#ifndef FASTGEN_BIGINT_HPP_
#define FASTGEN_BIGINT_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace fastgen {

using BigInt = mpz_class;

// Canonical encoding: lowercase hex, big-endian, no prefix, no leading
// zeros. Zero encodes as "0".
std::string to_hex(const BigInt& v);

// Accepts only the canonical alphabet [0-9a-f]; throws Error(kFormat).
BigInt from_hex(std::string_view hex);

BigInt from_u64(std::uint64_t v);

// Requires 0 <= v < 2^64.
std::uint64_t to_u64(const BigInt& v);

// Number of significant bits; 0 for v == 0.
std::size_t bit_length(const BigInt& v);

std::size_t popcount(const BigInt& v);

bool test_bit(const BigInt& v, std::size_t i);

// Least non-negative residue of a modulo m (m > 0).
BigInt mod(const BigInt& a, const BigInt& m);

// ceil(log2 n) for n >= 1.
std::size_t ceil_log2(const BigInt& n);

}  // namespace fastgen

#endif  // FASTGEN_BIGINT_HPP_
