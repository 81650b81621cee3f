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

#ifndef FASTGEN_ORACLE_HPP_
#define FASTGEN_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>

#include "fastgen/group.hpp"

namespace fastgen {

// Discrete logs are only attempted when p fits this many bits.
inline constexpr std::size_t kDefaultDeskScaleBits = 48;

// Baby-step giant-step table for one base. Building costs ceil(sqrt(p))
// multiplications; each solve costs at most as many more.
class DiscreteLogTable {
 public:
  DiscreteLogTable(const Element& base, const GroupParams& params,
                   std::size_t max_order_bits = kDefaultDeskScaleBits);

  // x in [0, p-1] with base^x == h. Throws Error(kNotMember) for inputs
  // outside the subgroup.
  Exponent solve(const Element& h) const;

  const Element& base() const { return base_; }

 private:
  GroupParams params_;
  Element base_;
  BigInt step_count_;       // m = ceil(sqrt(p))
  Element giant_stride_;    // base^{-m}
  // Keyed on the low 64 bits of base^j; collisions are resolved by
  // checking every candidate j.
  std::unordered_multimap<std::uint64_t, std::uint64_t> baby_steps_;
};

Exponent bsgs_dlog(const Element& h, const Element& base, const GroupParams& params,
                   std::size_t max_order_bits = kDefaultDeskScaleBits);

// Answers DH queries (h^x, h^y) -> h^{xy} for a fixed base h and counts
// every invocation.
class DhOracle {
 public:
  using AnswerFn = std::function<Element(const Element&, const Element&)>;

  DhOracle(Element base, AnswerFn answer)
      : base_(std::move(base)), answer_(std::move(answer)) {}

  Element answer(const Element& hx, const Element& hy) {
    ++query_count_;
    return answer_(hx, hy);
  }

  const Element& base() const { return base_; }
  std::uint64_t query_count() const { return query_count_; }
  void reset_count() { query_count_ = 0; }

 private:
  Element base_;
  AnswerFn answer_;
  std::uint64_t query_count_ = 0;
};

// Answers h^x -> x for a fixed base h.
class DlOracle {
 public:
  using AnswerFn = std::function<Exponent(const Element&)>;

  DlOracle(Element base, AnswerFn answer)
      : base_(std::move(base)), answer_(std::move(answer)) {}

  Exponent answer(const Element& hx) {
    ++query_count_;
    return answer_(hx);
  }

  const Element& base() const { return base_; }
  std::uint64_t query_count() const { return query_count_; }
  void reset_count() { query_count_ = 0; }

 private:
  Element base_;
  AnswerFn answer_;
  std::uint64_t query_count_ = 0;
};

// Advantage-epsilon adversary model.
struct NoisySpec {
  double epsilon = 1.0;
  std::uint64_t seed = 0;
};

DhOracle make_perfect_dh_oracle(const GroupParams& params, const Element& base,
                                std::size_t max_order_bits = kDefaultDeskScaleBits);
DlOracle make_perfect_dl_oracle(const GroupParams& params, const Element& base,
                                std::size_t max_order_bits = kDefaultDeskScaleBits);

// f^{r^{-1} mod p} from fr = f^r, scanning p - 2 left to right:
// square with oracle(h, h), multiply with oracle(h, fr) on 1 bits.
// Uses at most 2 * ceil(log2 p) queries.
Element invert_exponent(DhOracle& oracle, const Element& fr, const GroupParams& params);

// g^{xy} from (g^x, g^y) using only a base-f DH oracle, where f is the
// oracle's base. At most 2 * ceil(log2 p) + 2 queries.
Element dh_any_base(DhOracle& oracle_f, const Element& g, const Element& gx,
                    const Element& gy, const GroupParams& params);

// x from g^x using exactly two base-f DL queries.
Exponent dl_any_base(DlOracle& oracle_f, const Element& g, const Element& gx,
                     const GroupParams& params);

// With probability epsilon forwards to `inner`; otherwise returns a
// uniformly random subgroup element. Deterministic per seed.
DhOracle make_noisy_dh_oracle(DhOracle inner, const NoisySpec& spec,
                              const GroupParams& params);

// Number of self-reduction rounds the amplifier runs per query.
std::uint64_t amplification_rounds(double epsilon, double target_error);

// Majority vote over randomized self-reductions of a noisy oracle:
// blind with random r, s, query, unblind with (rs)^{-1}. Ties go to the
// lexicographically smallest hex encoding.
DhOracle amplify(DhOracle noisy, double epsilon, double target_error,
                 std::uint64_t seed, const GroupParams& params);

}  // namespace fastgen

#endif  // FASTGEN_ORACLE_HPP_
