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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Ground truth comes from the word-sized reference
// arithmetic in test_support.hpp, never from the library under test.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fastgen/bench.hpp"
#include "fastgen/celebrity.hpp"
#include "fastgen/malicious.hpp"
#include "fastgen/oracle.hpp"
#include "fastgen/protocol.hpp"
#include "test_support.hpp"

namespace fastgen {
namespace {

using testing::brute_inverse;
using testing::el;
using testing::u64;
using testing::word;
using testing::word_pow;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Records the first failure; later checks keep running so the detail line
// reflects the whole sweep.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_++ == 0) first_ = what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    return ok() ? "" : std::to_string(failures_) + " failure(s), first: " + first_;
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

std::string fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

struct SmallGroup {
  GroupParams params;
  u64 q, p, f;
};

SmallGroup small(const GroupParams& params) {
  return SmallGroup{params, word(params.q), word(params.p), word(params.f)};
}

SmallGroup q23() { return small(testing::tiny_group()); }
SmallGroup q2039() { return small(make_params(2039, 1019, 2)); }
// p below 2^20.
SmallGroup p20() { return small(generate_params(21, 2026)); }
// p near 2^16.
SmallGroup p16() { return small(generate_params(17, 2026)); }

u64 uniform(std::mt19937_64& rng, u64 lo, u64 hi) {
  return std::uniform_int_distribution<u64>(lo, hi)(rng);
}

u64 mulmod(u64 a, u64 b, u64 m) { return testing::mulmod(a, b, m); }

// 1. Fast-base savings ratio.
Outcome check_savings() {
  const auto start = Clock::now();
  const GroupParams params = generate_params(257, 1);
  const BenchReport report = bench_exp(params, BenchOptions{1000, 7, false});
  const double elapsed = seconds_since(start);
  Outcome out;
  out.pass = bit_length(params.q) == 257 && report.trials == 1000 &&
             report.savings_ratio >= 0.30 && report.savings_ratio <= 0.36 && elapsed < 30.0;
  out.detail = fmt("savings_ratio=%.4f in [0.30, 0.36], %.2fs < 30s", report.savings_ratio,
                   elapsed);
  return out;
}

// 2. invert_exponent: correctness and query bound.
Outcome invert_exponent_bound() {
  Check check;
  std::mt19937_64 rng(11);
  std::uint64_t worst = 0;
  for (const SmallGroup& g : {q23(), q2039(), p20()}) {
    DhOracle oracle = make_perfect_dh_oracle(g.params, generator(g.params));
    const std::uint64_t bound = 2 * ceil_log2(g.params.p);
    std::vector<u64> rs;
    if (g.p == 11) {
      for (u64 r = 1; r < g.p; ++r) rs.push_back(r);
    } else {
      for (int i = 0; i < 100; ++i) rs.push_back(uniform(rng, 1, g.p - 1));
    }
    for (u64 r : rs) {
      oracle.reset_count();
      const Element got = invert_exponent(oracle, el(word_pow(g.f, r, g.q)), g.params);
      const u64 want = word_pow(g.f, brute_inverse(r, g.p), g.q);
      check.expect(got == el(want), "p=" + std::to_string(g.p) + " r=" + std::to_string(r));
      check.expect(oracle.query_count() <= bound, "query bound at p=" + std::to_string(g.p));
      worst = std::max(worst, oracle.query_count());
    }
  }
  return {check.ok(), check.ok() ? fmt("p in {11, 1019, ~2^20}, max queries %.0f <= 2*ceil(log2 p)",
                                       static_cast<double>(worst))
                                 : check.summary()};
}

// 3. dh_any_base against g^{xy}.
Outcome check_dh_any_base() {
  const auto start = Clock::now();
  Check check;
  std::mt19937_64 rng(12);
  for (const SmallGroup& g : {q23(), q2039(), p20()}) {
    DhOracle oracle = make_perfect_dh_oracle(g.params, generator(g.params));
    const std::uint64_t bound = 2 * ceil_log2(g.params.p) + 2;
    for (int i = 0; i < 100; ++i) {
      const u64 base = word_pow(g.f, uniform(rng, 1, g.p - 1), g.q);
      const u64 x = uniform(rng, 0, g.p - 1);
      const u64 y = uniform(rng, 0, g.p - 1);
      oracle.reset_count();
      const Element got = dh_any_base(oracle, el(base), el(word_pow(base, x, g.q)),
                                      el(word_pow(base, y, g.q)), g.params);
      check.expect(got == el(word_pow(base, mulmod(x, y, g.p), g.q)),
                   "p=" + std::to_string(g.p) + " trial " + std::to_string(i));
      check.expect(oracle.query_count() <= bound, "query bound at p=" + std::to_string(g.p));
    }
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 60.0, "runtime");
  return {check.ok(), check.ok() ? fmt("300 triples over 3 groups, queries <= 2*ceil(log2 p)+2, %.2fs < 60s", elapsed)
                                 : check.summary()};
}

// 4. dl_any_base, exhaustive at p = 11.
Outcome check_dl_any_base() {
  Check check;
  const SmallGroup g = q23();
  DlOracle oracle = make_perfect_dl_oracle(g.params, generator(g.params));
  int cases = 0;
  for (u64 k = 1; k < g.p; ++k) {
    const u64 base = word_pow(g.f, k, g.q);
    for (u64 x = 0; x < g.p; ++x) {
      oracle.reset_count();
      const Exponent got = dl_any_base(oracle, el(base), el(word_pow(base, x, g.q)), g.params);
      check.expect(word(got.value()) == x, "g=" + std::to_string(base) + " x=" + std::to_string(x));
      check.expect(oracle.query_count() == 2, "query count");
      ++cases;
    }
  }
  return {check.ok(), check.ok() ? fmt("%.0f (g, x) pairs, exactly 2 queries each", cases)
                                 : check.summary()};
}

// 5. Amplified noisy oracle.
double amplified_success(const SmallGroup& g, std::uint64_t seed_base) {
  std::mt19937_64 rng(seed_base);
  int correct = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Element f = generator(g.params);
    DhOracle noisy = make_noisy_dh_oracle(make_perfect_dh_oracle(g.params, f),
                                          NoisySpec{0.2, seed_base * 1000 + trial}, g.params);
    DhOracle amplified = amplify(std::move(noisy), 0.2, 0.01, seed_base * 7919 + trial, g.params);
    const u64 x = uniform(rng, 0, g.p - 1);
    const u64 y = uniform(rng, 0, g.p - 1);
    const Element got = amplified.answer(el(word_pow(g.f, x, g.q)), el(word_pow(g.f, y, g.q)));
    correct += got == el(word_pow(g.f, mulmod(x, y, g.p), g.q));
  }
  return correct / 200.0;
}

Outcome check_amplification() {
  const double tiny = amplified_success(q23(), 5);
  const double mid = amplified_success(p16(), 6);
  return {tiny >= 0.99 && mid >= 0.98,
          fmt("eps=0.2 te=0.01: q=23 %.3f >= 0.99, p~2^16 %.3f >= 0.98", tiny, mid)};
}

// 6. Trapdoor recovery and forged-generator uniformity.
Outcome check_recovery() {
  Check check;
  std::size_t pairs = 0;
  const auto recover_pairs = [&](const SmallGroup& g, std::uint64_t seed, bool exhaustive) {
    const ForgedStandard forged = forge_standard(g.params, seed);
    const PublishedStandard& standard = forged.standard;
    const u64 base = word(standard.g.value());
    MdhOracle oracle = make_simulated_mdh_oracle(trapdoor_params(standard, forged.trapdoor));
    std::mt19937_64 rng(seed);
    std::vector<std::array<u64, 2>> ab;
    if (exhaustive) {
      for (u64 a = 1; a < g.p; ++a)
        for (u64 b = 1; b < g.p; ++b) ab.push_back({a, b});
    } else {
      for (int i = 0; i < 100; ++i) ab.push_back({uniform(rng, 1, g.p - 1), uniform(rng, 1, g.p - 1)});
    }
    for (const auto& [a, b] : ab) {
      const KeyPair alice = keygen_from_secret(standard.params, standard.g, BigInt(a));
      const KeyPair bob = keygen_from_secret(standard.params, standard.g, BigInt(b));
      const Agreement honest = run_agreement_with(standard.params, alice, bob, standard.g);
      oracle.reset_count();
      const DerivedKey got =
          authority_recover(forged.trapdoor, standard, honest.transcript, oracle);
      const DerivedKey want = derive_key(el(word_pow(base, mulmod(a, b, g.p), g.q)));
      const std::string tag = "p=" + std::to_string(g.p) + " a=" + std::to_string(a) +
                              " b=" + std::to_string(b);
      check.expect(got == honest.alice_key && got == honest.bob_key, tag);
      check.expect(got == want, tag + " vs reference");
      check.expect(oracle.query_count() == 1, "query count");
      ++pairs;
    }
  };
  recover_pairs(q23(), 3, true);
  recover_pairs(p16(), 4, false);

  // Chi-square over G \ {1} at p = 11, 9 degrees of freedom; 21.666 is
  // the 0.99 quantile.
  const SmallGroup g = q23();
  std::vector<int> counts(g.q, 0);
  constexpr int kForgeries = 10000;
  for (int seed = 0; seed < kForgeries; ++seed) {
    const u64 value = word(forge_standard(g.params, seed).standard.g.value());
    check.expect(value != 1 && word_pow(value, g.p, g.q) == 1, "forged g outside G \\ {1}");
    ++counts[value];
  }
  const double expected = kForgeries / static_cast<double>(g.p - 1);
  double chi2 = 0;
  for (u64 k = 1; k < g.p; ++k) {
    const double d = counts[word_pow(g.f, k, g.q)] - expected;
    chi2 += d * d / expected;
  }
  check.expect(chi2 < 21.666, "chi-square " + std::to_string(chi2));
  return {check.ok(), check.ok() ? fmt("%.0f recovered pairs match honest keys, chi2=%.3f < 21.666",
                                       static_cast<double>(pairs), chi2)
                                 : check.summary()};
}

// 7. Celebrity public-key roundtrip.
Outcome check_pkc_roundtrip() {
  Check check;
  const SmallGroup g = p20();
  const CelebrityKey celebrity = celebrity_keygen(g.params, 21);
  MdhOracle oracle = make_simulated_mdh_oracle(g.params);
  std::mt19937_64 rng(22);
  int messages = 0;
  for (std::size_t length : {0, 1, 16, 1000}) {
    for (int i = 0; i < 100; ++i) {
      const SubscriberKey alice = subscriber_keygen(celebrity.g, g.params, rng());
      std::vector<std::uint8_t> msg(length);
      for (auto& byte : msg) byte = static_cast<std::uint8_t>(rng());
      const Ciphertext ct = celebrity_encrypt(celebrity, alice.public_key, msg, oracle, g.params);
      check.expect(ct.body.size() == msg.size(), "body length " + std::to_string(length));
      check.expect(subscriber_decrypt(alice, celebrity.g, ct, g.params) == msg,
                   "roundtrip length " + std::to_string(length));
      ++messages;
    }
  }
  return {check.ok(), check.ok() ? fmt("%.0f messages of lengths {0, 1, 16, 1000}, body == plaintext length", messages)
                                 : check.summary()};
}

// 8. Squaring-oracle reduction.
Outcome check_squaring() {
  Check check;
  int cases = 0;
  const auto one = [&](const SmallGroup& g, SquaringOracle& sq, u64 base, u64 x, u64 y) {
    sq.reset_count();
    const Element got = square_to_dh(sq, el(base), el(word_pow(base, x, g.q)),
                                     el(word_pow(base, y, g.q)), g.params);
    check.expect(got == el(word_pow(base, mulmod(x, y, g.p), g.q)),
                 "p=" + std::to_string(g.p) + " g=" + std::to_string(base) + " x=" +
                     std::to_string(x) + " y=" + std::to_string(y));
    check.expect(sq.query_count() == 3, "query count");
    ++cases;
  };
  const SmallGroup tiny = q23();
  for (u64 k = 1; k < tiny.p; ++k) {
    const u64 base = word_pow(tiny.f, k, tiny.q);
    SquaringOracle sq = make_perfect_squaring_oracle(tiny.params, el(base));
    for (u64 x = 0; x < tiny.p; ++x)
      for (u64 y = 0; y < tiny.p; ++y) one(tiny, sq, base, x, y);
  }
  const SmallGroup mid = p20();
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const u64 base = word_pow(mid.f, uniform(rng, 1, mid.p - 1), mid.q);
    SquaringOracle sq = make_perfect_squaring_oracle(mid.params, el(base));
    one(mid, sq, base, uniform(rng, 0, mid.p - 1), uniform(rng, 0, mid.p - 1));
  }
  return {check.ok(), check.ok() ? fmt("%.0f triples, exactly 3 squaring queries each", cases)
                                 : check.summary()};
}

// 9. Key agreement across parameter sizes.
Outcome check_agreement() {
  Check check;
  for (std::size_t bits : {5, 64, 256}) {
    const GroupParams params = generate_params(bits, 9);
    check.expect(bit_length(params.q) == bits, "bit length " + std::to_string(bits));
    const bool small_words = bits <= 64;
    for (std::uint64_t i = 0; i < 100; ++i) {
      const Agreement run = run_agreement(params, generator(params), 2 * i + 1, 2 * i + 2);
      check.expect(run.alice_key == run.bob_key, std::to_string(bits) + "-bit pair " + std::to_string(i));
      if (small_words) {
        const u64 q = word(params.q);
        const u64 f = word(params.f);
        const u64 a = word(run.alice.secret.value());
        const u64 b = word(run.bob.secret.value());
        check.expect(run.transcript.msg_a == el(word_pow(f, a, q)), "public key reference");
        check.expect(run.alice_shared == el(word_pow(word(run.transcript.msg_b.value()), a, q)) &&
                         run.bob_shared == el(word_pow(word_pow(f, a, q), b, q)),
                     "shared secret reference");
      }
    }
  }
  return {check.ok(), check.ok() ? "100 seed pairs each at 5-, 64- and 256-bit q: keys equal"
                                 : check.summary()};
}

}  // namespace
}  // namespace fastgen

int main() {
  using fastgen::Outcome;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"savings-ratio", fastgen::check_savings},
      {"invert-exponent-queries", fastgen::invert_exponent_bound},
      {"dh-any-base", fastgen::check_dh_any_base},
      {"dl-any-base", fastgen::check_dl_any_base},
      {"noisy-amplification", fastgen::check_amplification},
      {"trapdoor-recovery", fastgen::check_recovery},
      {"celebrity-roundtrip", fastgen::check_pkc_roundtrip},
      {"squaring-reduction", fastgen::check_squaring},
      {"key-agreement", fastgen::check_agreement},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", out.pass ? "PASS" : "FAIL", c.name, out.detail.c_str());
    std::fflush(stdout);
    failed += !out.pass;
  }
  return failed == 0 ? 0 : 1;
}
