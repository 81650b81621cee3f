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

// fastgen: command-line front end for parameter generation, key agreement,
// the operation-count benchmark, oracle reductions, trapdoored standards
// and the celebrity public-key scheme.
//
// Exit codes: 0 success/MATCH, 1 MISMATCH or I/O failure, 2 parameter or
// usage error, 3 protocol/membership error, 4 desk-scale bound exceeded,
// 5 trapdoor inconsistency, 6 ciphertext header mismatch.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fastgen/bench.hpp"
#include "fastgen/celebrity.hpp"
#include "fastgen/error.hpp"
#include "fastgen/files.hpp"
#include "fastgen/malicious.hpp"
#include "fastgen/oracle.hpp"
#include "fastgen/protocol.hpp"
#include "fastgen/random.hpp"

namespace fastgen::cli {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParams = 2;
constexpr int kExitProtocol = 3;
constexpr int kExitScale = 4;
constexpr int kExitTrapdoor = 5;
constexpr int kExitHeader = 6;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kSearchExhausted:
    case ErrorCode::kFormat:
      return kExitParams;
    case ErrorCode::kNotInvertible:
    case ErrorCode::kNotMember:
    case ErrorCode::kIdentity:
      return kExitProtocol;
    case ErrorCode::kScaleBound:
      return kExitScale;
    case ErrorCode::kTrapdoorMismatch:
      return kExitTrapdoor;
    case ErrorCode::kHeaderMismatch:
      return kExitHeader;
  }
  return kExitMismatch;
}

// Command-line numbers: decimal, or hex with a 0x prefix.
BigInt parse_number(const std::string& text) {
  if (text.rfind("0x", 0) == 0) {
    std::string digits = text.substr(2);
    for (char& c : digits) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    while (digits.size() > 1 && digits.front() == '0') digits.erase(digits.begin());
    return from_hex(digits);
  }
  BigInt out;
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos ||
      out.set_str(text, 10) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "not a number: '" + text + "'");
  }
  return out;
}

std::vector<Element> parse_elements(const std::string& csv, std::size_t expected) {
  std::vector<Element> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::size_t end = comma == std::string::npos ? csv.size() : comma;
    out.emplace_back(parse_number(csv.substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != expected) {
    throw Error(ErrorCode::kInvalidArgument, "--inputs expects " + std::to_string(expected) +
                                                 " comma-separated values");
  }
  return out;
}

// Explicit seed, or one drawn from the system and reported on stderr.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed, const char* name) {
  if (seed) return *seed;
  const std::uint64_t drawn = entropy_seed();
  std::cerr << name << ": " << drawn << '\n';
  return drawn;
}

void print_json(const json& doc) { std::cout << doc.dump(2) << '\n'; }

GroupParams load_params(const std::string& path) { return params_from_json(read_json_file(path)); }

int verdict(json& doc, bool match) {
  doc["verdict"] = match ? "MATCH" : "MISMATCH";
  print_json(doc);
  return match ? kExitOk : kExitMismatch;
}

struct Options {
  std::size_t bits = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> seed_a;
  std::optional<std::uint64_t> seed_b;
  std::string params;
  std::string standard;
  std::string trapdoor;
  std::string transcript;
  std::string out;
  std::string generator;
  std::string base;
  std::string inputs;
  std::string secret;
  std::string secret_a;
  std::string secret_b;
  std::string transcript_out;
  std::string standard_out;
  std::string trapdoor_out;
  std::string public_out;
  std::string key;
  std::string recipient;
  std::string celebrity;
  std::string in;
  std::string role;
  std::uint64_t trials = 1000;
  double epsilon = 0.2;
  double target_error = 0.01;
  bool wall_time = false;
};

int cmd_params_gen(const Options& o) {
  const GroupParams params = generate_params(o.bits, resolve_seed(o.seed, "seed"));
  if (!o.out.empty()) write_json_file(o.out, params_to_json(params));
  std::cout << "q " << to_hex(params.q) << '\n'
            << "p " << to_hex(params.p) << '\n'
            << "f " << to_hex(params.f) << '\n';
  return kExitOk;
}

int cmd_agree(const Options& o) {
  GroupParams params;
  Element g;
  if (!o.standard.empty()) {
    const PublishedStandard standard = standard_from_json(read_json_file(o.standard));
    params = standard.params;
    g = standard.g;
  } else {
    params = load_params(o.params);
    g = o.generator.empty() ? generator(params) : Element(parse_number(o.generator));
  }

  const auto party = [&](const std::string& forced, const std::optional<std::uint64_t>& seed,
                         const char* name) {
    if (!forced.empty()) return keygen_from_secret(params, g, parse_number(forced));
    return keygen(params, g, resolve_seed(seed, name));
  };
  const KeyPair alice = party(o.secret_a, o.seed_a, "seed-a");
  const KeyPair bob = party(o.secret_b, o.seed_b, "seed-b");
  const Agreement agreement = run_agreement_with(params, alice, bob, g);

  if (!o.transcript_out.empty()) {
    write_json_file(o.transcript_out, transcript_to_json(agreement.transcript));
  }
  const bool equal = agreement.alice_key == agreement.bob_key;
  print_json(json{{"key_a", agreement.alice_key.hex()},
                  {"key_b", agreement.bob_key.hex()},
                  {"shared", agreement.alice_shared.hex()},
                  {"transcript", transcript_to_json(agreement.transcript)},
                  {"match", equal}});
  return equal ? kExitOk : kExitMismatch;
}

int cmd_bench_exp(const Options& o) {
  const GroupParams params = load_params(o.params);
  const BenchReport report =
      bench_exp(params, BenchOptions{o.trials, resolve_seed(o.seed, "seed"), o.wall_time});
  print_json(bench_to_json(report, o.wall_time));
  return kExitOk;
}

Element oracle_base(const Options& o, const GroupParams& params) {
  return o.base.empty() ? generator(params) : Element(parse_number(o.base));
}

int cmd_reduce_dhp(const Options& o) {
  const GroupParams params = load_params(o.params);
  const Element g = oracle_base(o, params);
  const auto in = parse_elements(o.inputs, 2);
  DhOracle oracle = make_perfect_dh_oracle(params, generator(params));
  const Element answer = dh_any_base(oracle, g, in[0], in[1], params);
  const Element truth = power(in[1], bsgs_dlog(in[0], g, params).value(), params);
  json doc{{"answer", answer.hex()},
           {"ground_truth", truth.hex()},
           {"queries", oracle.query_count()},
           {"query_bound", 2 * ceil_log2(params.p) + 2}};
  return verdict(doc, answer == truth);
}

int cmd_reduce_dlp(const Options& o) {
  const GroupParams params = load_params(o.params);
  const Element g = oracle_base(o, params);
  const auto in = parse_elements(o.inputs, 1);
  DlOracle oracle = make_perfect_dl_oracle(params, generator(params));
  const Exponent answer = dl_any_base(oracle, g, in[0], params);
  const Exponent truth = bsgs_dlog(in[0], g, params);
  json doc{{"answer", answer.hex()}, {"ground_truth", truth.hex()}, {"queries", oracle.query_count()}};
  return verdict(doc, answer == truth);
}

int cmd_amplify(const Options& o) {
  const GroupParams params = load_params(o.params);
  const Element f = oracle_base(o, params);
  const auto in = parse_elements(o.inputs, 2);
  const std::uint64_t seed = resolve_seed(o.seed, "seed");
  DhOracle noisy =
      make_noisy_dh_oracle(make_perfect_dh_oracle(params, f), NoisySpec{o.epsilon, seed}, params);
  DhOracle amplified = amplify(std::move(noisy), o.epsilon, o.target_error, seed ^ 0x5bd1e995u, params);
  const Element answer = amplified.answer(in[0], in[1]);
  const Element truth = power(in[1], bsgs_dlog(in[0], f, params).value(), params);
  const std::uint64_t rounds = amplification_rounds(o.epsilon, o.target_error);
  json doc{{"answer", answer.hex()},
           {"ground_truth", truth.hex()},
           {"rounds", rounds},
           {"queries", rounds}};
  return verdict(doc, answer == truth);
}

int cmd_forge(const Options& o) {
  const GroupParams params = load_params(o.params);
  const ForgedStandard forged = o.secret.empty()
                                    ? forge_standard(params, resolve_seed(o.seed, "seed"))
                                    : forge_standard_with(params, parse_number(o.secret));
  if (!o.standard_out.empty()) write_json_file(o.standard_out, standard_to_json(forged.standard));
  if (!o.trapdoor_out.empty()) {
    write_json_file(o.trapdoor_out, trapdoor_to_json(forged.trapdoor), true);
  }
  print_json(standard_to_json(forged.standard));
  return kExitOk;
}

int cmd_recover(const Options& o) {
  const PublishedStandard standard = standard_from_json(read_json_file(o.standard));
  const Trapdoor trapdoor = trapdoor_from_json(read_json_file(o.trapdoor));
  MdhOracle oracle = make_simulated_mdh_oracle(trapdoor_params(standard, trapdoor));

  std::optional<Agreement> honest;
  Transcript transcript;
  if (!o.transcript.empty()) {
    transcript = transcript_from_json(read_json_file(o.transcript));
    if (transcript.params_id != params_id(standard.params)) {
      std::cerr << "warning: transcript params_id does not match the standard\n";
    }
  } else {
    honest = run_agreement(standard.params, standard.g, resolve_seed(o.seed_a, "seed-a"),
                           resolve_seed(o.seed_b, "seed-b"), ExpPath::kGeneric);
    transcript = honest->transcript;
  }

  const DerivedKey recovered = authority_recover(trapdoor, standard, transcript, oracle);
  json doc{{"recovered_key", recovered.hex()},
           {"oracle_queries", oracle.query_count()},
           {"transcript", transcript_to_json(transcript)}};
  if (!honest) {
    print_json(doc);
    return kExitOk;
  }
  doc["key_a"] = honest->alice_key.hex();
  doc["key_b"] = honest->bob_key.hex();
  return verdict(doc, recovered == honest->alice_key && recovered == honest->bob_key);
}

int cmd_pkc_keygen(const Options& o) {
  const GroupParams params = load_params(o.params);
  KeyPair key;
  if (o.role == "celebrity") {
    const CelebrityKey ck = o.secret.empty()
                                ? celebrity_keygen(params, resolve_seed(o.seed, "seed"))
                                : celebrity_keygen_from(params, parse_number(o.secret));
    key = KeyPair{ck.r, ck.g};
  } else {
    if (o.celebrity.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "subscriber keys need --celebrity <public key file>");
    }
    const Element g = public_key_from_json(read_json_file(o.celebrity));
    const SubscriberKey sk = o.secret.empty()
                                 ? subscriber_keygen(g, params, resolve_seed(o.seed, "seed"))
                                 : subscriber_keygen_from(g, params, parse_number(o.secret));
    key = KeyPair{sk.a, sk.public_key};
  }
  write_json_file(o.out, key_to_json(key), true);
  if (!o.public_out.empty()) write_json_file(o.public_out, public_key_to_json(key.public_key));
  print_json(public_key_to_json(key.public_key));
  return kExitOk;
}

int cmd_pkc_encrypt(const Options& o) {
  const GroupParams params = load_params(o.params);
  const KeyPair celeb = key_from_json(read_json_file(o.key));
  const CelebrityKey ck{celeb.secret, celeb.public_key};
  if (mod_exp(generator(params), ck.r.value(), params) != ck.g) {
    throw Error(ErrorCode::kTrapdoorMismatch, "celebrity key does not satisfy g = f^r");
  }
  const Element recipient = public_key_from_json(read_json_file(o.recipient));
  MdhOracle oracle = make_simulated_mdh_oracle(params);
  const Ciphertext ct =
      celebrity_encrypt(ck, recipient, read_binary_file(o.in), oracle, params);
  write_binary_file(o.out, encode_ciphertext(ct));
  print_json(json{{"body_bytes", ct.body.size()},
                  {"oracle_queries", oracle.query_count()},
                  {"recipient", hex_bytes(ct.recipient)}});
  return kExitOk;
}

int cmd_pkc_decrypt(const Options& o) {
  const GroupParams params = load_params(o.params);
  const KeyPair own = key_from_json(read_json_file(o.key));
  const SubscriberKey sk{own.secret, own.public_key};
  const Element g = public_key_from_json(read_json_file(o.celebrity));
  const Ciphertext ct = decode_ciphertext(read_binary_file(o.in));
  const auto plain = subscriber_decrypt(sk, g, ct, params);
  write_binary_file(o.out, plain);
  print_json(json{{"plaintext_bytes", plain.size()}});
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Diffie-Hellman fast-generator toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* params_gen = app.add_subcommand("params-gen", "Generate a safe-prime group with f = 2");
  params_gen->add_option("--bits", o.bits, "Bit length of q")->required();
  params_gen->add_option("--seed", o.seed, "Random seed");
  params_gen->add_option("--out", o.out, "Parameter file to write");

  auto* agree = app.add_subcommand("agree", "Run both sides of the key agreement");
  auto* agree_params = agree->add_option("--params", o.params, "Parameter file");
  auto* agree_standard = agree->add_option("--standard", o.standard, "Published standard file");
  agree_params->excludes(agree_standard);
  agree->add_option("--generator", o.generator, "Generator (default: f)");
  agree->add_option("--seed-a", o.seed_a, "Alice's seed");
  agree->add_option("--seed-b", o.seed_b, "Bob's seed");
  agree->add_option("--secret-a", o.secret_a, "Force Alice's secret exponent");
  agree->add_option("--secret-b", o.secret_b, "Force Bob's secret exponent");
  agree->add_option("--transcript-out", o.transcript_out, "Transcript file to write");

  auto* bench = app.add_subcommand("bench-exp", "Operation-count benchmark");
  bench->add_option("--params", o.params, "Parameter file")->required();
  bench->add_option("--trials", o.trials, "Number of exponentiations")->check(CLI::PositiveNumber);
  bench->add_option("--seed", o.seed, "Random seed");
  bench->add_flag("--wall-time", o.wall_time, "Also report wall-clock seconds");

  auto* dhp = app.add_subcommand("reduce-dhp", "DH for base g from a base-f DH oracle");
  auto* dlp = app.add_subcommand("reduce-dlp", "DL for base g from a base-f DL oracle");
  auto* amp = app.add_subcommand("amplify", "Majority-vote a noisy base-f DH oracle");
  for (auto* sub : {dhp, dlp, amp}) {
    sub->add_option("--params", o.params, "Parameter file")->required();
    sub->add_option("--base", o.base, "Base g (default: f)");
    sub->add_option("--inputs", o.inputs, "Comma-separated group elements")->required();
  }
  amp->add_option("--epsilon", o.epsilon, "Oracle advantage in (0, 1]");
  amp->add_option("--target-error", o.target_error, "Per-query failure bound in (0, 0.5)");
  amp->add_option("--seed", o.seed, "Random seed");

  auto* forge = app.add_subcommand("forge", "Publish a standard with a hidden trapdoor");
  forge->add_option("--params", o.params, "Parameter file")->required();
  forge->add_option("--seed", o.seed, "Random seed");
  forge->add_option("--trapdoor-value", o.secret, "Force the trapdoor exponent t");
  forge->add_option("--standard-out", o.standard_out, "Standard file to write");
  forge->add_option("--trapdoor-out", o.trapdoor_out, "Trapdoor file to write");

  auto* recover = app.add_subcommand("recover", "Recover F(g^ab) with the trapdoor");
  recover->add_option("--standard", o.standard, "Standard file")->required();
  recover->add_option("--trapdoor", o.trapdoor, "Trapdoor file")->required();
  auto* recover_transcript = recover->add_option("--transcript", o.transcript, "Transcript file");
  auto* recover_seed_a = recover->add_option("--seed-a", o.seed_a, "Demo mode: Alice's seed");
  recover->add_option("--seed-b", o.seed_b, "Demo mode: Bob's seed");
  recover_transcript->excludes(recover_seed_a);

  auto* pkc_keygen = app.add_subcommand("pkc-keygen", "Celebrity or subscriber key pair");
  pkc_keygen->add_option("--params", o.params, "Parameter file")->required();
  pkc_keygen->add_option("--role", o.role, "celebrity or subscriber")
      ->required()
      ->check(CLI::IsMember({"celebrity", "subscriber"}));
  pkc_keygen->add_option("--celebrity", o.celebrity, "Celebrity public key (subscribers)");
  pkc_keygen->add_option("--seed", o.seed, "Random seed");
  pkc_keygen->add_option("--secret", o.secret, "Force the secret exponent");
  pkc_keygen->add_option("--out", o.out, "Key file to write (owner-read-only)")->required();
  pkc_keygen->add_option("--public-out", o.public_out, "Public key file to write");

  auto* pkc_encrypt = app.add_subcommand("pkc-encrypt", "Celebrity encrypts to a subscriber");
  pkc_encrypt->add_option("--params", o.params, "Parameter file")->required();
  pkc_encrypt->add_option("--key", o.key, "Celebrity key file")->required();
  pkc_encrypt->add_option("--recipient", o.recipient, "Subscriber public key file")->required();
  pkc_encrypt->add_option("--in", o.in, "Plaintext file")->required();
  pkc_encrypt->add_option("--out", o.out, "Ciphertext file")->required();

  auto* pkc_decrypt = app.add_subcommand("pkc-decrypt", "Subscriber decrypts");
  pkc_decrypt->add_option("--params", o.params, "Parameter file")->required();
  pkc_decrypt->add_option("--key", o.key, "Subscriber key file")->required();
  pkc_decrypt->add_option("--celebrity", o.celebrity, "Celebrity public key file")->required();
  pkc_decrypt->add_option("--in", o.in, "Ciphertext file")->required();
  pkc_decrypt->add_option("--out", o.out, "Plaintext file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParams;
  }

  try {
    if (*params_gen) return cmd_params_gen(o);
    if (*agree) {
      if (o.params.empty() && o.standard.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "agree needs --params or --standard");
      }
      return cmd_agree(o);
    }
    if (*bench) return cmd_bench_exp(o);
    if (*dhp) return cmd_reduce_dhp(o);
    if (*dlp) return cmd_reduce_dlp(o);
    if (*amp) return cmd_amplify(o);
    if (*forge) return cmd_forge(o);
    if (*recover) return cmd_recover(o);
    if (*pkc_keygen) return cmd_pkc_keygen(o);
    if (*pkc_encrypt) return cmd_pkc_encrypt(o);
    if (*pkc_decrypt) return cmd_pkc_decrypt(o);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitParams;
}

}  // namespace
}  // namespace fastgen::cli

int main(int argc, char** argv) { return fastgen::cli::run(argc, argv); }
