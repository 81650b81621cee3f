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

#include "fastgen/protocol.hpp"

#include <algorithm>

#include "fastgen/error.hpp"
#include "fastgen/files.hpp"
#include "fastgen/hash.hpp"
#include "fastgen/random.hpp"

namespace fastgen {
namespace {

void require_generator(const Element& generator, const GroupParams& params) {
  if (generator.is_identity()) {
    throw Error(ErrorCode::kIdentity, "generator must not be the identity");
  }
  require_member(generator, params, "generator");
}

}  // namespace

std::string DerivedKey::hex() const { return hex_bytes(bytes); }

KeyPair keygen(const GroupParams& params, const Element& generator, std::uint64_t seed,
               ExpPath path) {
  require_generator(generator, params);
  Rng rng(seed);
  return keygen_from_secret(params, generator, rng.in_range(1, params.p - 1), path);
}

KeyPair keygen_from_secret(const GroupParams& params, const Element& generator,
                           const BigInt& secret, ExpPath path) {
  require_generator(generator, params);
  if (secret < 1 || secret >= params.p) {
    throw Error(ErrorCode::kInvalidArgument, "secret exponent outside [1, p-1]");
  }
  const bool fast = path == ExpPath::kAuto && generator.value() == params.f &&
                    bit_length(params.f) <= 64;
  Element pub = fast ? exp_fast_base(secret, params) : mod_exp(generator, secret, params);
  return KeyPair{Exponent(secret), std::move(pub)};
}

Element shared_secret(const KeyPair& own, const Element& peer_public,
                      const GroupParams& params) {
  require_member(peer_public, params, "peer public value");
  if (peer_public.is_identity()) {
    throw Error(ErrorCode::kNotMember, "peer public value is the identity");
  }
  return mod_exp(peer_public, own.secret.value(), params);
}

DerivedKey derive_key(const Element& s) {
  const Sha256Digest digest = sha256(s.hex());
  DerivedKey key;
  std::copy_n(digest.begin(), kDerivedKeyBytes, key.bytes.begin());
  return key;
}

Agreement run_agreement(const GroupParams& params, const Element& generator,
                        std::uint64_t seed_a, std::uint64_t seed_b, ExpPath path) {
  const KeyPair alice = keygen(params, generator, seed_a, path);
  const KeyPair bob = keygen(params, generator, seed_b, path);
  return run_agreement_with(params, alice, bob, generator);
}

Agreement run_agreement_with(const GroupParams& params, const KeyPair& alice,
                             const KeyPair& bob, const Element& generator) {
  require_generator(generator, params);
  Agreement out;
  out.transcript = Transcript{params_id(params), generator, alice.public_key,
                              bob.public_key};
  out.alice = alice;
  out.bob = bob;
  out.alice_shared = shared_secret(alice, bob.public_key, params);
  out.bob_shared = shared_secret(bob, alice.public_key, params);
  out.alice_key = derive_key(out.alice_shared);
  out.bob_key = derive_key(out.bob_shared);
  return out;
}

}  // namespace fastgen
