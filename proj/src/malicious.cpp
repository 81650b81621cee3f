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

#include "fastgen/malicious.hpp"

#include "fastgen/error.hpp"
#include "fastgen/random.hpp"

namespace fastgen {

MdhOracle make_simulated_mdh_oracle(const GroupParams& params,
                                    std::size_t max_order_bits) {
  const Element f = generator(params);
  auto table = std::make_shared<const DiscreteLogTable>(f, params, max_order_bits);
  return MdhOracle(f, [table, params](const Element& fx, const Element& fy) {
    const Exponent x = table->solve(fx);
    const Exponent y = table->solve(fy);
    return derive_key(power(table->base(), x.value() * y.value() % params.p, params));
  });
}

ForgedStandard forge_standard(const GroupParams& params, std::uint64_t seed) {
  Rng rng(seed);
  return forge_standard_with(params, rng.in_range(1, params.p - 1));
}

ForgedStandard forge_standard_with(const GroupParams& params, const BigInt& t) {
  if (t < 1 || t >= params.p) {
    throw Error(ErrorCode::kInvalidArgument, "trapdoor exponent outside [1, p-1]");
  }
  const Element f = generator(params);
  const Element g = mod_exp(f, t, params);
  GroupParams advertised = params;
  advertised.f = g.value();
  return ForgedStandard{PublishedStandard{advertised, g}, Trapdoor{Exponent(t), f}};
}

GroupParams trapdoor_params(const PublishedStandard& standard, const Trapdoor& trapdoor) {
  GroupParams params = standard.params;
  params.f = trapdoor.f.value();
  require_member(trapdoor.f, params, "trapdoor generator");
  if (trapdoor.f.is_identity()) {
    throw Error(ErrorCode::kTrapdoorMismatch, "trapdoor generator is the identity");
  }
  return params;
}

DerivedKey authority_recover(const Trapdoor& trapdoor, const PublishedStandard& standard,
                             const Transcript& transcript, MdhOracle& oracle) {
  const GroupParams params = trapdoor_params(standard, trapdoor);
  const BigInt& t = trapdoor.t.value();
  if (t < 1 || t >= params.p || mod_exp(trapdoor.f, t, params) != standard.g) {
    throw Error(ErrorCode::kTrapdoorMismatch, "f^t does not match the published generator");
  }
  for (const Element* msg : {&transcript.msg_a, &transcript.msg_b}) {
    require_member(*msg, params, "transcript message");
    if (msg->is_identity()) {
      throw Error(ErrorCode::kNotMember, "transcript message is the identity");
    }
  }

  // (g^b)^{1/t} = f^{tb/t} = f^b, and DH_f(f^{ta}, f^b) = F(f^{tab}) = F(g^{ab}).
  const BigInt t_inv = inv_mod(t, params.p);
  const Element fb = mod_exp(transcript.msg_b, t_inv, params);
  return oracle.answer(transcript.msg_a, fb);
}

bool verify_recovery(const PublishedStandard& standard, const Trapdoor& trapdoor,
                     std::uint64_t seed_a, std::uint64_t seed_b, MdhOracle& oracle) {
  const Agreement honest =
      run_agreement(standard.params, standard.g, seed_a, seed_b, ExpPath::kGeneric);
  const DerivedKey recovered =
      authority_recover(trapdoor, standard, honest.transcript, oracle);
  return recovered == honest.alice_key && recovered == honest.bob_key;
}

}  // namespace fastgen
