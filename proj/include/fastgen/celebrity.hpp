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

#ifndef FASTGEN_CELEBRITY_HPP_
#define FASTGEN_CELEBRITY_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fastgen/group.hpp"
#include "fastgen/hash.hpp"
#include "fastgen/malicious.hpp"
#include "fastgen/protocol.hpp"

namespace fastgen {

inline constexpr std::uint8_t kCiphertextVersion = 1;
inline constexpr std::size_t kRecipientDigestBytes = 10;

using RecipientDigest = std::array<std::uint8_t, kRecipientDigestBytes>;

// Bob, the sender to many recipients: publishes g = f^r, keeps r.
struct CelebrityKey {
  Exponent r;
  Element g;
};

// A recipient registered under g: publishes g^a.
struct SubscriberKey {
  Exponent a;
  Element public_key;
};

// Body is exactly as long as the plaintext; the header is not counted.
struct Ciphertext {
  std::uint8_t version = kCiphertextVersion;
  RecipientDigest recipient{};
  std::vector<std::uint8_t> body;
};

// g^x -> g^{x^2} for a fixed base g.
class SquaringOracle {
 public:
  using AnswerFn = std::function<Element(const Element&)>;

  SquaringOracle(Element base, AnswerFn answer)
      : base_(std::move(base)), answer_(std::move(answer)) {}

  Element answer(const Element& gx) {
    ++query_count_;
    return answer_(gx);
  }

  const Element& base() const { return base_; }
  std::uint64_t query_count() const { return query_count_; }
  void reset_count() { query_count_ = 0; }

 private:
  Element base_;
  AnswerFn answer_;
  std::uint64_t query_count_ = 0;
};

CelebrityKey celebrity_keygen(const GroupParams& params, std::uint64_t seed);
CelebrityKey celebrity_keygen_from(const GroupParams& params, const BigInt& r);

SubscriberKey subscriber_keygen(const Element& g, const GroupParams& params,
                                std::uint64_t seed);
SubscriberKey subscriber_keygen_from(const Element& g, const GroupParams& params,
                                     const BigInt& a);

// First 10 octets of SHA-256 over the canonical hex of a public value.
RecipientDigest recipient_digest(const Element& public_key);

// Symmetric key: SHA-256 over the 10 octets of F(shared element).
Sha256Digest symmetric_key(const DerivedKey& key_material);

// out[i] = msg[i] XOR keystream[i]; keystream block j is
// SHA-256(key || j as 8 big-endian octets). Test-grade, not production
// secure. Applying it twice with the same key is the identity.
std::vector<std::uint8_t> stream_encrypt(const Sha256Digest& key,
                                         std::span<const std::uint8_t> msg);

// Bob's side: f^a = (g^a)^{1/r}, then F(g^{a^2}) = oracle(g^a, f^a).
// Exactly one oracle query.
Ciphertext celebrity_encrypt(const CelebrityKey& ck, const Element& subscriber_public,
                             std::span<const std::uint8_t> msg, MdhOracle& oracle,
                             const GroupParams& params);

// F(g^{a^2}) derived on Bob's side for a subscriber, same single query.
DerivedKey celebrity_key_material(const CelebrityKey& ck, const Element& subscriber_public,
                                  MdhOracle& oracle, const GroupParams& params);

// Alice's side: g^{a^2} = (g^a)^a. Throws Error(kHeaderMismatch) when the
// ciphertext names another recipient.
std::vector<std::uint8_t> subscriber_decrypt(const SubscriberKey& sk, const Element& g,
                                             const Ciphertext& ct,
                                             const GroupParams& params);

// Classical baseline: Bob publishes g and g^b; shared element g^{ab}.
struct ClassicalCelebrityKey {
  Exponent b;
  Element g;
  Element public_key;  // g^b
};

ClassicalCelebrityKey classical_celebrity_keygen(const Element& g, const GroupParams& params,
                                                 std::uint64_t seed);
ClassicalCelebrityKey classical_celebrity_keygen_from(const Element& g,
                                                      const GroupParams& params,
                                                      const BigInt& b);

Ciphertext classical_encrypt(const ClassicalCelebrityKey& bob, const Element& subscriber_public,
                             std::span<const std::uint8_t> msg, const GroupParams& params);

std::vector<std::uint8_t> classical_decrypt(const SubscriberKey& sk,
                                            const Element& celebrity_public,
                                            const Ciphertext& ct, const GroupParams& params);

SquaringOracle make_perfect_squaring_oracle(const GroupParams& params, const Element& g,
                                            std::size_t max_order_bits = kDefaultDeskScaleBits);

// g^{xy} from three squaring queries:
// g^{2xy} = g^{(x+y)^2} / (g^{x^2} g^{y^2}), then raise to 2^{-1} mod p.
Element square_to_dh(SquaringOracle& sq, const Element& g, const Element& gx,
                     const Element& gy, const GroupParams& params);

}  // namespace fastgen

#endif  // FASTGEN_CELEBRITY_HPP_
