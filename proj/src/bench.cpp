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

#include "fastgen/bench.hpp"

#include <chrono>
#include <vector>

#include "fastgen/error.hpp"
#include "fastgen/random.hpp"

namespace fastgen {
namespace {

double ratio(double saved, double total) { return total > 0 ? saved / total : 0.0; }

template <typename Fn>
double timed(bool enabled, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  if (!enabled) return 0.0;
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

BenchReport bench_exp(const GroupParams& params, const BenchOptions& options) {
  if (options.trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be at least 1");

  Rng rng(options.seed);
  const BigInt p_minus_1 = params.p - 1;
  std::vector<BigInt> exponents;
  std::vector<Element> bases;
  exponents.reserve(options.trials);
  bases.reserve(options.trials);
  for (std::uint64_t i = 0; i < options.trials; ++i) {
    exponents.push_back(rng.in_range(1, p_minus_1));
    bases.push_back(power(generator(params), rng.in_range(1, p_minus_1), params));
  }

  CostCounter baseline;
  CostCounter fast;
  BenchReport report;
  report.bit_length = bit_length(params.p);
  report.trials = options.trials;
  report.wall_seconds_baseline = timed(options.wall_time, [&] {
    for (std::uint64_t i = 0; i < options.trials; ++i) {
      mod_exp(bases[i], exponents[i], params, &baseline);
    }
  });
  report.wall_seconds_fast = timed(options.wall_time, [&] {
    for (std::uint64_t i = 0; i < options.trials; ++i) {
      exp_fast_base(exponents[i], params, &fast);
    }
  });

  const double n = static_cast<double>(options.trials);
  report.mean_full_mults_baseline = static_cast<double>(baseline.full_mults) / n;
  report.mean_squarings = static_cast<double>(baseline.squarings) / n;
  report.mean_fast_steps = static_cast<double>(fast.fast_steps) / n;
  report.mean_full_mults_fast = static_cast<double>(fast.full_mults) / n;

  const double saved = static_cast<double>(baseline.full_mults) -
                       static_cast<double>(fast.full_mults);
  report.savings_ratio =
      ratio(saved, static_cast<double>(baseline.full_mults + baseline.squarings));
  report.savings_ratio_cheap_squares =
      ratio(saved, static_cast<double>(baseline.full_mults) +
                       kCheapSquareCost * static_cast<double>(baseline.squarings));
  return report;
}

nlohmann::json bench_to_json(const BenchReport& report, bool include_wall_time) {
  nlohmann::json doc{{"bit_length", report.bit_length},
                     {"trials", report.trials},
                     {"mean_full_mults_baseline", report.mean_full_mults_baseline},
                     {"mean_full_mults_fast", report.mean_full_mults_fast},
                     {"mean_squarings", report.mean_squarings},
                     {"mean_fast_steps", report.mean_fast_steps},
                     {"savings_ratio", report.savings_ratio},
                     {"savings_ratio_cheap_squares", report.savings_ratio_cheap_squares},
                     {"cheap_square_cost", kCheapSquareCost}};
  if (include_wall_time) {
    doc["wall_seconds_baseline"] = report.wall_seconds_baseline;
    doc["wall_seconds_fast"] = report.wall_seconds_fast;
  }
  return doc;
}

}  // namespace fastgen
