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

#ifndef FASTGEN_BENCH_HPP_
#define FASTGEN_BENCH_HPP_

#include <cstddef>
#include <cstdint>

#include "json.hpp"

#include "fastgen/group.hpp"

namespace fastgen {

// Operation-count comparison between random-base square-and-multiply and
// fast-base exponentiation on identical exponents.
struct BenchReport {
  std::size_t bit_length = 0;  // bits of p (exponent size)
  std::uint64_t trials = 0;
  double mean_full_mults_baseline = 0;
  double mean_squarings = 0;
  double mean_fast_steps = 0;
  double mean_full_mults_fast = 0;
  // saved multiplications / (baseline multiplications + squarings)
  double savings_ratio = 0;
  // Same, with a squaring priced at kCheapSquareCost multiplications.
  double savings_ratio_cheap_squares = 0;
  double wall_seconds_baseline = 0;
  double wall_seconds_fast = 0;
};

inline constexpr double kCheapSquareCost = 0.8;

struct BenchOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  bool wall_time = false;
};

BenchReport bench_exp(const GroupParams& params, const BenchOptions& options);

// Stable key order; wall-clock fields appear only when measured.
nlohmann::json bench_to_json(const BenchReport& report, bool include_wall_time = false);

}  // namespace fastgen

#endif  // FASTGEN_BENCH_HPP_
