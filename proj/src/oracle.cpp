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

#include "fastgen/oracle.hpp"

#include <cmath>
#include <map>
#include <string>

#include "fastgen/error.hpp"
#include "fastgen/random.hpp"

namespace fastgen {
namespace {

std::uint64_t table_key(const BigInt& v) { return mpz_get_ui(v.get_mpz_t()); }

void check_scale(const GroupParams& params, std::size_t max_order_bits) {
  if (bit_length(params.p) > max_order_bits) {
    throw Error(ErrorCode::kScaleBound,
                "p has " + std::to_string(bit_length(params.p)) +
                    " bits; discrete logs are limited to " +
                    std::to_string(max_order_bits));
  }
}

void require_non_identity(const Element& g, const char* what) {
  if (g.is_identity()) {
    throw Error(ErrorCode::kIdentity, std::string(what) + " must not be the identity");
  }
}

}  // namespace

DiscreteLogTable::DiscreteLogTable(const Element& base, const GroupParams& params,
                                   std::size_t max_order_bits)
    : params_(params), base_(base) {
  check_scale(params, max_order_bits);
  require_member(base, params, "discrete-log base");
  require_non_identity(base, "discrete-log base");

  mpz_sqrt(step_count_.get_mpz_t(), params.p.get_mpz_t());
  if (step_count_ * step_count_ < params.p) ++step_count_;

  const std::uint64_t m = to_u64(step_count_);
  baby_steps_.reserve(m);
  BigInt acc = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby_steps_.emplace(table_key(acc), j);
    acc = acc * base.value() % params.q;
  }
  // acc == base^m here.
  giant_stride_ = inverse(Element(acc), params);
}

Exponent DiscreteLogTable::solve(const Element& h) const {
  require_member(h, params_, "discrete-log input");
  const bool exact_keys = bit_length(params_.q) <= 64;
  const std::uint64_t m = to_u64(step_count_);

  BigInt gamma = h.value();
  for (std::uint64_t i = 0; i < m; ++i) {
    auto [first, last] = baby_steps_.equal_range(table_key(gamma));
    for (auto it = first; it != last; ++it) {
      BigInt x = BigInt(step_count_) * from_u64(i) + from_u64(it->second);
      if (exact_keys || power(base_, x, params_) == h) {
        return Exponent::reduced(x, params_.p);
      }
    }
    gamma = gamma * giant_stride_.value() % params_.q;
  }
  // Unreachable for subgroup members: every x < p <= m^2 is covered.
  throw Error(ErrorCode::kNotMember, "no discrete log for " + h.hex());
}

Exponent bsgs_dlog(const Element& h, const Element& base, const GroupParams& params,
                   std::size_t max_order_bits) {
  require_member(h, params, "discrete-log input");
  return DiscreteLogTable(base, params, max_order_bits).solve(h);
}

DhOracle make_perfect_dh_oracle(const GroupParams& params, const Element& base,
                                std::size_t max_order_bits) {
  auto table = std::make_shared<const DiscreteLogTable>(base, params, max_order_bits);
  return DhOracle(base, [table, params](const Element& hx, const Element& hy) {
    const Exponent x = table->solve(hx);
    const Exponent y = table->solve(hy);
    return power(table->base(), x.value() * y.value() % params.p, params);
  });
}

DlOracle make_perfect_dl_oracle(const GroupParams& params, const Element& base,
                                std::size_t max_order_bits) {
  auto table = std::make_shared<const DiscreteLogTable>(base, params, max_order_bits);
  return DlOracle(base, [table](const Element& hx) { return table->solve(hx); });
}

Element invert_exponent(DhOracle& oracle, const Element& fr, const GroupParams& params) {
  require_member(fr, params, "f^r");
  require_non_identity(fr, "f^r");

  // r^{p-2} == r^{-1} (mod p) by Fermat.
  const BigInt e = params.p - 2;
  if (e <= 0) return fr;

  Element acc = fr;
  for (std::size_t i = bit_length(e) - 1; i-- > 0;) {
    acc = oracle.answer(acc, acc);
    if (test_bit(e, i)) acc = oracle.answer(acc, fr);
  }
  return acc;
}

Element dh_any_base(DhOracle& oracle_f, const Element& g, const Element& gx,
                    const Element& gy, const GroupParams& params) {
  require_member(g, params, "base g");
  require_non_identity(g, "base g");
  require_member(gx, params, "g^x");
  require_member(gy, params, "g^y");

  if (g == oracle_f.base()) return oracle_f.answer(gx, gy);

  // g = f^r: f^{1/r} turns g^y into f^y, and DH_f(f^{rx}, f^y) = g^{xy}.
  const Element f_inv_r = invert_exponent(oracle_f, g, params);
  const Element fy = oracle_f.answer(f_inv_r, gy);
  return oracle_f.answer(gx, fy);
}

Exponent dl_any_base(DlOracle& oracle_f, const Element& g, const Element& gx,
                     const GroupParams& params) {
  require_member(g, params, "base g");
  require_non_identity(g, "base g");
  require_member(gx, params, "g^x");

  const Exponent r = oracle_f.answer(g);
  const Exponent rx = oracle_f.answer(gx);
  const BigInt s = inv_mod(r.value(), params.p);
  return Exponent::reduced(s * rx.value(), params.p);
}

DhOracle make_noisy_dh_oracle(DhOracle inner, const NoisySpec& spec,
                              const GroupParams& params) {
  if (!(spec.epsilon > 0.0 && spec.epsilon <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 1]");
  }
  Element base = inner.base();
  auto forward = std::make_shared<DhOracle>(std::move(inner));
  auto rng = std::make_shared<Rng>(spec.seed);
  const double epsilon = spec.epsilon;
  return DhOracle(base, [forward, rng, epsilon, params, base](const Element& hx,
                                                              const Element& hy) {
    if (rng->unit() < epsilon) return forward->answer(hx, hy);
    return power(base, rng->below(params.p), params);
  });
}

std::uint64_t amplification_rounds(double epsilon, double target_error) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 1]");
  }
  if (!(target_error > 0.0 && target_error < 0.5)) {
    throw Error(ErrorCode::kInvalidArgument, "target error must lie in (0, 0.5)");
  }
  // A perfect oracle needs no vote.
  if (epsilon == 1.0) return 1;
  constexpr double kChernoffSlack = 8.0;
  return static_cast<std::uint64_t>(
      std::ceil(kChernoffSlack * std::log(1.0 / target_error) / (epsilon * epsilon)));
}

DhOracle amplify(DhOracle noisy, double epsilon, double target_error,
                 std::uint64_t seed, const GroupParams& params) {
  const std::uint64_t rounds = amplification_rounds(epsilon, target_error);
  Element base = noisy.base();
  auto inner = std::make_shared<DhOracle>(std::move(noisy));
  auto rng = std::make_shared<Rng>(seed);
  return DhOracle(base, [inner, rng, rounds, params](const Element& fx,
                                                     const Element& fy) {
    const BigInt p_minus_1 = params.p - 1;
    // Ordered by hex encoding, so the first maximum is the tie winner.
    std::map<std::string, std::uint64_t> votes;
    for (std::uint64_t round = 0; round < rounds; ++round) {
      const BigInt r = rng->in_range(1, p_minus_1);
      const BigInt s = rng->in_range(1, p_minus_1);
      const Element blinded = inner->answer(power(fx, r, params), power(fy, s, params));
      const BigInt unblind = inv_mod(r * s, params.p);
      ++votes[power(blinded, unblind, params).hex()];
    }
    auto best = votes.begin();
    for (auto it = votes.begin(); it != votes.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    return Element(from_hex(best->first));
  });
}

}  // namespace fastgen
