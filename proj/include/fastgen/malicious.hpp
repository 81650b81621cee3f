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

#ifndef FASTGEN_MALICIOUS_HPP_
#define FASTGEN_MALICIOUS_HPP_

#include <cstdint>
#include <functional>

#include "fastgen/group.hpp"
#include "fastgen/oracle.hpp"
#include "fastgen/protocol.hpp"

namespace fastgen {

// What a standards body publishes: the group and an advertised generator
// g. params.f holds g, so the fast generator never appears in it.
struct PublishedStandard {
  GroupParams params;
  Element g;
};

// Kept apart from the standard: g = f^t.
struct Trapdoor {
  Exponent t;
  Element f;
};

// Hypothetical leaky oracle for the fast generator:
// (f^x, f^y) -> F(f^{xy}) with F = derive_key.
class MdhOracle {
 public:
  using AnswerFn = std::function<DerivedKey(const Element&, const Element&)>;

  MdhOracle(Element base, AnswerFn answer)
      : base_(std::move(base)), answer_(std::move(answer)) {}

  DerivedKey answer(const Element& fx, const Element& fy) {
    ++query_count_;
    return answer_(fx, fy);
  }

  const Element& base() const { return base_; }
  std::uint64_t query_count() const { return query_count_; }
  void reset_count() { query_count_ = 0; }

 private:
  Element base_;
  AnswerFn answer_;
  std::uint64_t query_count_ = 0;
};

// Realizes the oracle by discrete logs at desk scale. Anyone holding it
// could break random bases too; it exists to exercise the trapdoor
// mechanics, not to model the hardness assumption.
MdhOracle make_simulated_mdh_oracle(const GroupParams& params,
                                    std::size_t max_order_bits = kDefaultDeskScaleBits);

struct ForgedStandard {
  PublishedStandard standard;
  Trapdoor trapdoor;
};

// t uniform in [1, p-1], g = f^t.
ForgedStandard forge_standard(const GroupParams& params, std::uint64_t seed);
ForgedStandard forge_standard_with(const GroupParams& params, const BigInt& t);

// Group parameters with the real fast generator restored.
GroupParams trapdoor_params(const PublishedStandard& standard, const Trapdoor& trapdoor);

// F(g^{ab}) from a transcript: f^b = (g^b)^{1/t}, then one oracle query
// on (g^a, f^b). Throws Error(kTrapdoorMismatch) when f^t != g.
DerivedKey authority_recover(const Trapdoor& trapdoor, const PublishedStandard& standard,
                             const Transcript& transcript, MdhOracle& oracle);

// End-to-end: honest agreement under standard.g, then recovery.
bool verify_recovery(const PublishedStandard& standard, const Trapdoor& trapdoor,
                     std::uint64_t seed_a, std::uint64_t seed_b, MdhOracle& oracle);

}  // namespace fastgen

#endif  // FASTGEN_MALICIOUS_HPP_
