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

#ifndef FASTGEN_GROUP_HPP_
#define FASTGEN_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

#include "fastgen/bigint.hpp"

namespace fastgen {

// Public description of the order-p subgroup of F_q^* together with its
// fast generator f. Instances built through make_params or
// generate_params always satisfy: q, p prime; cofactor * p == q - 1;
// f^p == 1 (mod q) and f != 1.
struct GroupParams {
  BigInt q;
  BigInt p;
  BigInt f;
  BigInt cofactor;

  bool operator==(const GroupParams&) const = default;
};

// A residue in [1, q-1]. Subgroup membership is checked where it
// matters (protocol boundaries), not on every construction.
class Element {
 public:
  Element() : value_(1) {}
  explicit Element(BigInt value) : value_(std::move(value)) {}

  const BigInt& value() const { return value_; }
  std::string hex() const { return to_hex(value_); }
  bool is_identity() const { return value_ == 1; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.value_ == b.value_;
  }

 private:
  BigInt value_;
};

// A residue modulo p. The constructor does not reduce; callers that
// know p use Exponent::reduced.
class Exponent {
 public:
  Exponent() : value_(0) {}
  explicit Exponent(BigInt value) : value_(std::move(value)) {}

  static Exponent reduced(const BigInt& v, const BigInt& p) {
    return Exponent(mod(v, p));
  }

  const BigInt& value() const { return value_; }
  std::string hex() const { return to_hex(value_); }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.value_ == b.value_;
  }

 private:
  BigInt value_;
};

// Operation tally for one or more exponentiations. Owned by the caller.
struct CostCounter {
  std::uint64_t full_mults = 0;  // general modular multiplications
  std::uint64_t squarings = 0;   // modular squarings
  std::uint64_t fast_steps = 0;  // shift-and-reduce / small-constant steps

  void reset() { *this = CostCounter{}; }
};

inline constexpr std::size_t kMinParamBits = 3;
inline constexpr std::size_t kMaxParamBits = 4096;

// Probabilistic primality: deterministic Miller-Rabin witnesses below
// 2^64, 40 rounds (error < 2^-80) above.
bool is_probable_prime(const BigInt& n);

// Validating constructor: derives the cofactor and checks every
// GroupParams invariant. Throws Error(kInvalidArgument).
GroupParams make_params(const BigInt& q, const BigInt& p, const BigInt& f);

struct ParamSearch {
  std::size_t bit_length = 0;
  std::uint64_t seed = 0;
  // 0 selects a default that grows with bit_length.
  std::uint64_t max_attempts = 0;
};

// Safe-prime group q = 2p + 1 with q = 7 (mod 8), so that 2 is a square
// mod q and generates the order-p subgroup; f = 2. q has exactly
// bit_length bits. Deterministic per seed.
GroupParams generate_params(const ParamSearch& search);
GroupParams generate_params(std::size_t bit_length, std::uint64_t seed);

// Smallest c >= 2 with c^p == 1 (mod q).
BigInt find_fast_generator(const BigInt& q, const BigInt& p);

// Left-to-right square-and-multiply. Adds bit_length(e) - 1 squarings
// and popcount(e) - 1 multiplications to `counter` (nothing for e == 0).
Element mod_exp(const Element& base, const BigInt& e, const GroupParams& params,
                CostCounter* counter = nullptr);

// 2h mod q with one shift and at most one subtraction.
Element fast_double(const Element& h, const BigInt& q,
                    CostCounter* counter = nullptr);

// f^e mod q where every multiply-by-f step is a shift-and-reduce (f = 2)
// or a word-sized multiply-and-reduce (other small f). Those steps are
// tallied as fast_steps; full_mults is never touched.
Element exp_fast_base(const BigInt& e, const GroupParams& params,
                      CostCounter* counter = nullptr);

bool is_subgroup_member(const BigInt& x, const GroupParams& params);

// Throws Error(kNotMember) unless x is a member.
void require_member(const Element& x, const GroupParams& params,
                    const char* what);

// s in [1, m-1] with s * a == 1 (mod m). Throws Error(kNotInvertible).
BigInt inv_mod(const BigInt& a, const BigInt& m);

// Generic (non-instrumented) helpers used by the higher layers.
Element mul(const Element& a, const Element& b, const GroupParams& params);
Element inverse(const Element& a, const GroupParams& params);
Element power(const Element& base, const BigInt& e, const GroupParams& params);

inline Element generator(const GroupParams& params) { return Element(params.f); }

}  // namespace fastgen

#endif  // FASTGEN_GROUP_HPP_
