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

#ifndef FASTGEN_RANDOM_HPP_
#define FASTGEN_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "fastgen/bigint.hpp"

namespace fastgen {

// Seedable source for every random choice in the library. The output
// sequence depends only on the seed, so runs are reproducible across
// platforms (mt19937_64 is fully specified by the standard).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound); bound > 0. Rejection sampling on whole bits.
  BigInt below(const BigInt& bound);

  // Uniform in [lo, hi], lo <= hi.
  BigInt in_range(const BigInt& lo, const BigInt& hi);

  // Uniform integer with exactly `bits` bits (top bit set), bits >= 1.
  BigInt with_bits(std::size_t bits);

  // Uniform double in [0, 1).
  double unit();

 private:
  BigInt random_bits(std::size_t bits);

  std::mt19937_64 engine_;
};

// Seed drawn from the system entropy source.
std::uint64_t entropy_seed();

}  // namespace fastgen

#endif  // FASTGEN_RANDOM_HPP_
