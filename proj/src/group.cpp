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

#include "fastgen/group.hpp"

#include <array>
#include <string>

#include "fastgen/error.hpp"
#include "fastgen/hash.hpp"
#include "fastgen/random.hpp"

namespace fastgen {
namespace {

constexpr std::array<unsigned long, 54> kSmallPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
    191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};

// Sufficient witness set for every n < 2^64.
constexpr std::array<unsigned long, 12> kDeterministicWitnesses = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr int kRandomRounds = 40;

BigInt powm(const BigInt& base, const BigInt& e, const BigInt& m) {
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return out;
}

// One Miller-Rabin round for odd n > 3 with n - 1 = d * 2^s.
bool passes_round(const BigInt& n, const BigInt& d, unsigned long s,
                  const BigInt& witness) {
  const BigInt n_minus_1 = n - 1;
  BigInt x = powm(witness, d, n);
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Nonzero remainder by every small prime other than n itself.
bool survives_trial_division(const BigInt& n) {
  for (unsigned long sp : kSmallPrimes) {
    if (n == sp) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), sp)) return false;
  }
  return true;
}

void check_base(const Element& base, const BigInt& q) {
  if (base.value() < 1 || base.value() >= q) {
    throw Error(ErrorCode::kInvalidArgument,
                "base " + base.hex() + " is outside [1, q-1]");
  }
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  if (!survives_trial_division(n)) return false;
  if (n <= kSmallPrimes.back()) {
    for (unsigned long sp : kSmallPrimes) {
      if (n == sp) return true;
    }
    return false;
  }

  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  if (bit_length(n) <= 64) {
    for (unsigned long w : kDeterministicWitnesses) {
      if (!passes_round(n, d, s, BigInt(w))) return false;
    }
    return true;
  }

  // Witnesses are drawn from a generator keyed on n, so the verdict for a
  // given n never changes between runs.
  Sha256Digest digest = sha256(to_hex(n));
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i) seed = (seed << 8) | digest[i];
  Rng rng(seed);
  const BigInt hi = n - 2;
  for (int round = 0; round < kRandomRounds; ++round) {
    if (!passes_round(n, d, s, rng.in_range(2, hi))) return false;
  }
  return true;
}

GroupParams make_params(const BigInt& q, const BigInt& p, const BigInt& f) {
  if (!is_probable_prime(q)) {
    throw Error(ErrorCode::kInvalidArgument, "q = " + to_hex(q) + " is not prime");
  }
  if (!is_probable_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument, "p = " + to_hex(p) + " is not prime");
  }
  const BigInt q_minus_1 = q - 1;
  if (!mpz_divisible_p(q_minus_1.get_mpz_t(), p.get_mpz_t())) {
    throw Error(ErrorCode::kInvalidArgument, "p does not divide q - 1");
  }
  if (f < 2 || f >= q) {
    throw Error(ErrorCode::kInvalidArgument, "f must lie in [2, q-1]");
  }
  if (powm(f, p, q) != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "f = " + to_hex(f) + " does not have order p");
  }
  return GroupParams{q, p, f, q_minus_1 / p};
}

GroupParams generate_params(const ParamSearch& search) {
  const std::size_t bits = search.bit_length;
  if (bits < kMinParamBits || bits > kMaxParamBits) {
    throw Error(ErrorCode::kInvalidArgument,
                "bit length " + std::to_string(bits) + " outside [" +
                    std::to_string(kMinParamBits) + ", " +
                    std::to_string(kMaxParamBits) + "]");
  }
  const std::uint64_t attempts =
      search.max_attempts != 0 ? search.max_attempts
                               : std::uint64_t{64} * bits * bits + 1024;

  Rng rng(search.seed);
  for (std::uint64_t attempt = 0; attempt < attempts; ++attempt) {
    // p = 3 (mod 4) makes q = 2p + 1 = 7 (mod 8).
    BigInt p = rng.with_bits(bits - 1);
    mpz_setbit(p.get_mpz_t(), 0);
    mpz_setbit(p.get_mpz_t(), 1);
    BigInt q = 2 * p + 1;
    if (!survives_trial_division(p) || !survives_trial_division(q)) continue;
    if (!is_probable_prime(p) || !is_probable_prime(q)) continue;
    return make_params(q, p, BigInt(2));
  }
  throw Error(ErrorCode::kSearchExhausted,
              "no safe prime of " + std::to_string(bits) + " bits found in " +
                  std::to_string(attempts) + " attempts");
}

GroupParams generate_params(std::size_t bit_length, std::uint64_t seed) {
  return generate_params(ParamSearch{bit_length, seed, 0});
}

BigInt find_fast_generator(const BigInt& q, const BigInt& p) {
  const BigInt q_minus_1 = q - 1;
  if (p < 2 || !mpz_divisible_p(q_minus_1.get_mpz_t(), p.get_mpz_t())) {
    throw Error(ErrorCode::kInvalidArgument, "p does not divide q - 1");
  }
  for (BigInt c = 2; c < q; ++c) {
    if (powm(c, p, q) == 1) return c;
  }
  throw Error(ErrorCode::kInvalidArgument, "no element of order p below q");
}

Element mod_exp(const Element& base, const BigInt& e, const GroupParams& params,
                CostCounter* counter) {
  check_base(base, params.q);
  if (e < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  if (e == 0) return Element(BigInt(1));

  const BigInt& q = params.q;
  BigInt acc = base.value();
  for (std::size_t i = bit_length(e) - 1; i-- > 0;) {
    acc = acc * acc % q;
    if (counter) ++counter->squarings;
    if (test_bit(e, i)) {
      acc = acc * base.value() % q;
      if (counter) ++counter->full_mults;
    }
  }
  return Element(std::move(acc));
}

Element fast_double(const Element& h, const BigInt& q, CostCounter* counter) {
  if (h.value() < 1 || h.value() >= q) {
    throw Error(ErrorCode::kInvalidArgument, "fast_double input outside [1, q-1]");
  }
  BigInt doubled;
  mpz_mul_2exp(doubled.get_mpz_t(), h.value().get_mpz_t(), 1);
  if (doubled >= q) doubled -= q;
  if (counter) ++counter->fast_steps;
  return Element(std::move(doubled));
}

Element exp_fast_base(const BigInt& e, const GroupParams& params,
                      CostCounter* counter) {
  if (e < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  if (bit_length(params.f) > 64) {
    throw Error(ErrorCode::kInvalidArgument,
                "fast-base exponentiation needs a word-sized generator");
  }
  if (e == 0) return Element(BigInt(1));

  const BigInt& q = params.q;
  const unsigned long small_f = mpz_get_ui(params.f.get_mpz_t());
  const bool doubling = small_f == 2;
  BigInt acc = params.f;
  for (std::size_t i = bit_length(e) - 1; i-- > 0;) {
    acc = acc * acc % q;
    if (counter) ++counter->squarings;
    if (!test_bit(e, i)) continue;
    if (doubling) {
      acc = fast_double(Element(std::move(acc)), q, counter).value();
    } else {
      mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), small_f);
      mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), q.get_mpz_t());
      if (counter) ++counter->fast_steps;
    }
  }
  return Element(std::move(acc));
}

bool is_subgroup_member(const BigInt& x, const GroupParams& params) {
  if (x < 1 || x >= params.q) return false;
  return powm(x, params.p, params.q) == 1;
}

void require_member(const Element& x, const GroupParams& params, const char* what) {
  if (!is_subgroup_member(x.value(), params)) {
    throw Error(ErrorCode::kNotMember,
                std::string(what) + " " + x.hex() + " is not in the order-p subgroup");
  }
}

BigInt inv_mod(const BigInt& a, const BigInt& m) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "modulus must be at least 2");
  BigInt reduced = mod(a, m);
  BigInt out;
  if (reduced == 0 ||
      mpz_invert(out.get_mpz_t(), reduced.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kNotInvertible,
                to_hex(reduced) + " has no inverse modulo " + to_hex(m));
  }
  return out;
}

Element mul(const Element& a, const Element& b, const GroupParams& params) {
  return Element(a.value() * b.value() % params.q);
}

Element inverse(const Element& a, const GroupParams& params) {
  return Element(inv_mod(a.value(), params.q));
}

Element power(const Element& base, const BigInt& e, const GroupParams& params) {
  return Element(powm(base.value(), mod(e, params.q - 1), params.q));
}

}  // namespace fastgen
