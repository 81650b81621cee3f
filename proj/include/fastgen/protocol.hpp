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

#ifndef FASTGEN_PROTOCOL_HPP_
#define FASTGEN_PROTOCOL_HPP_

#include <array>
#include <cstdint>
#include <string>

#include "fastgen/group.hpp"

namespace fastgen {

inline constexpr std::size_t kDerivedKeyBytes = 10;  // 80 bits

// F: first 80 bits of SHA-256 over the canonical hex encoding of an
// element. With p < 2^80 the real entropy is capped at log2 p.
struct DerivedKey {
  std::array<std::uint8_t, kDerivedKeyBytes> bytes{};

  std::string hex() const;
  bool operator==(const DerivedKey&) const = default;
};

struct KeyPair {
  Exponent secret;  // in [1, p-1]
  Element public_key;
};

struct Transcript {
  std::string params_id;  // SHA-256 of the canonical parameter file
  Element generator;
  Element msg_a;
  Element msg_b;
};

enum class ExpPath {
  kAuto,     // fast-base routine when the generator is params.f
  kGeneric,  // always square-and-multiply
};

KeyPair keygen(const GroupParams& params, const Element& generator, std::uint64_t seed,
               ExpPath path = ExpPath::kAuto);

// Deterministic variant with a caller-chosen secret in [1, p-1].
KeyPair keygen_from_secret(const GroupParams& params, const Element& generator,
                           const BigInt& secret, ExpPath path = ExpPath::kAuto);

// peer_public^secret after screening peer_public for subgroup membership.
Element shared_secret(const KeyPair& own, const Element& peer_public,
                      const GroupParams& params);

DerivedKey derive_key(const Element& s);

struct Agreement {
  Transcript transcript;
  KeyPair alice;
  KeyPair bob;
  Element alice_shared;
  Element bob_shared;
  DerivedKey alice_key;
  DerivedKey bob_key;
};

Agreement run_agreement(const GroupParams& params, const Element& generator,
                        std::uint64_t seed_a, std::uint64_t seed_b,
                        ExpPath path = ExpPath::kAuto);

// Both parties' secrets fixed by the caller.
Agreement run_agreement_with(const GroupParams& params, const KeyPair& alice,
                             const KeyPair& bob, const Element& generator);

}  // namespace fastgen

#endif  // FASTGEN_PROTOCOL_HPP_
