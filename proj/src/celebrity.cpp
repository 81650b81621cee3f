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

#include "fastgen/celebrity.hpp"

#include <algorithm>

#include "fastgen/error.hpp"
#include "fastgen/random.hpp"

namespace fastgen {
namespace {

void require_usable_public(const Element& v, const GroupParams& params, const char* what) {
  require_member(v, params, what);
  if (v.is_identity()) {
    throw Error(ErrorCode::kNotMember, std::string(what) + " is the identity");
  }
}

void require_generator(const Element& g, const GroupParams& params) {
  if (g.is_identity()) throw Error(ErrorCode::kIdentity, "generator must not be the identity");
  require_member(g, params, "generator");
}

void check_exponent(const BigInt& e, const GroupParams& params, const char* what) {
  if (e < 1 || e >= params.p) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " outside [1, p-1]");
  }
}

Ciphertext seal(const Element& recipient, const DerivedKey& key_material,
                std::span<const std::uint8_t> msg) {
  Ciphertext ct;
  ct.recipient = recipient_digest(recipient);
  ct.body = stream_encrypt(symmetric_key(key_material), msg);
  return ct;
}

std::vector<std::uint8_t> open(const Element& recipient, const DerivedKey& key_material,
                               const Ciphertext& ct) {
  if (ct.version != kCiphertextVersion) {
    throw Error(ErrorCode::kFormat, "unsupported ciphertext version");
  }
  if (ct.recipient != recipient_digest(recipient)) {
    throw Error(ErrorCode::kHeaderMismatch, "ciphertext is addressed to another recipient");
  }
  return stream_encrypt(symmetric_key(key_material), ct.body);
}

}  // namespace

CelebrityKey celebrity_keygen(const GroupParams& params, std::uint64_t seed) {
  Rng rng(seed);
  return celebrity_keygen_from(params, rng.in_range(1, params.p - 1));
}

CelebrityKey celebrity_keygen_from(const GroupParams& params, const BigInt& r) {
  check_exponent(r, params, "celebrity secret");
  Element g = bit_length(params.f) <= 64 ? exp_fast_base(r, params)
                                         : mod_exp(generator(params), r, params);
  return CelebrityKey{Exponent(r), std::move(g)};
}

SubscriberKey subscriber_keygen(const Element& g, const GroupParams& params,
                                std::uint64_t seed) {
  require_generator(g, params);
  Rng rng(seed);
  return subscriber_keygen_from(g, params, rng.in_range(1, params.p - 1));
}

SubscriberKey subscriber_keygen_from(const Element& g, const GroupParams& params,
                                     const BigInt& a) {
  require_generator(g, params);
  check_exponent(a, params, "subscriber secret");
  return SubscriberKey{Exponent(a), mod_exp(g, a, params)};
}

RecipientDigest recipient_digest(const Element& public_key) {
  const Sha256Digest digest = sha256(public_key.hex());
  RecipientDigest out;
  std::copy_n(digest.begin(), kRecipientDigestBytes, out.begin());
  return out;
}

Sha256Digest symmetric_key(const DerivedKey& key_material) {
  return sha256(key_material.bytes);
}

std::vector<std::uint8_t> stream_encrypt(const Sha256Digest& key,
                                         std::span<const std::uint8_t> msg) {
  std::vector<std::uint8_t> out(msg.begin(), msg.end());
  std::array<std::uint8_t, 32 + 8> block_input{};
  std::copy(key.begin(), key.end(), block_input.begin());
  Sha256Digest keystream{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t offset = i % keystream.size();
    if (offset == 0) {
      std::uint64_t counter = i / keystream.size();
      for (int b = 7; b >= 0; --b) {
        block_input[32 + b] = static_cast<std::uint8_t>(counter & 0xff);
        counter >>= 8;
      }
      keystream = sha256(block_input);
    }
    out[i] ^= keystream[offset];
  }
  return out;
}

DerivedKey celebrity_key_material(const CelebrityKey& ck, const Element& subscriber_public,
                                  MdhOracle& oracle, const GroupParams& params) {
  require_usable_public(subscriber_public, params, "subscriber public value");
  // g^a = f^{ra}, so (g^a)^{1/r} = f^a and DH_f(f^{ra}, f^a) = F(f^{ra^2}) = F(g^{a^2}).
  const Element fa = mod_exp(subscriber_public, inv_mod(ck.r.value(), params.p), params);
  return oracle.answer(subscriber_public, fa);
}

Ciphertext celebrity_encrypt(const CelebrityKey& ck, const Element& subscriber_public,
                             std::span<const std::uint8_t> msg, MdhOracle& oracle,
                             const GroupParams& params) {
  const DerivedKey material = celebrity_key_material(ck, subscriber_public, oracle, params);
  return seal(subscriber_public, material, msg);
}

std::vector<std::uint8_t> subscriber_decrypt(const SubscriberKey& sk, const Element& g,
                                             const Ciphertext& ct,
                                             const GroupParams& params) {
  require_generator(g, params);
  if (ct.recipient != recipient_digest(sk.public_key)) {
    throw Error(ErrorCode::kHeaderMismatch, "ciphertext is addressed to another recipient");
  }
  const Element shared = mod_exp(sk.public_key, sk.a.value(), params);
  return open(sk.public_key, derive_key(shared), ct);
}

ClassicalCelebrityKey classical_celebrity_keygen(const Element& g, const GroupParams& params,
                                                 std::uint64_t seed) {
  require_generator(g, params);
  Rng rng(seed);
  return classical_celebrity_keygen_from(g, params, rng.in_range(1, params.p - 1));
}

ClassicalCelebrityKey classical_celebrity_keygen_from(const Element& g,
                                                      const GroupParams& params,
                                                      const BigInt& b) {
  require_generator(g, params);
  check_exponent(b, params, "celebrity secret");
  return ClassicalCelebrityKey{Exponent(b), g, mod_exp(g, b, params)};
}

Ciphertext classical_encrypt(const ClassicalCelebrityKey& bob, const Element& subscriber_public,
                             std::span<const std::uint8_t> msg, const GroupParams& params) {
  require_usable_public(subscriber_public, params, "subscriber public value");
  const Element shared = mod_exp(subscriber_public, bob.b.value(), params);
  return seal(subscriber_public, derive_key(shared), msg);
}

std::vector<std::uint8_t> classical_decrypt(const SubscriberKey& sk,
                                            const Element& celebrity_public,
                                            const Ciphertext& ct, const GroupParams& params) {
  require_usable_public(celebrity_public, params, "celebrity public value");
  const Element shared = mod_exp(celebrity_public, sk.a.value(), params);
  return open(sk.public_key, derive_key(shared), ct);
}

SquaringOracle make_perfect_squaring_oracle(const GroupParams& params, const Element& g,
                                            std::size_t max_order_bits) {
  auto table = std::make_shared<const DiscreteLogTable>(g, params, max_order_bits);
  return SquaringOracle(g, [table, params](const Element& gx) {
    const BigInt x = table->solve(gx).value();
    return power(table->base(), x * x % params.p, params);
  });
}

Element square_to_dh(SquaringOracle& sq, const Element& g, const Element& gx,
                     const Element& gy, const GroupParams& params) {
  require_generator(g, params);
  require_member(gx, params, "g^x");
  require_member(gy, params, "g^y");

  const Element gx2 = sq.answer(gx);
  const Element gy2 = sq.answer(gy);
  const Element gsum2 = sq.answer(mul(gx, gy, params));
  const Element g2xy = mul(gsum2, inverse(mul(gx2, gy2, params), params), params);
  return mod_exp(g2xy, inv_mod(2, params.p), params);
}

}  // namespace fastgen
