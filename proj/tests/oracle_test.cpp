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

#include <gtest/gtest.h>

#include <cmath>

#include "fastgen/error.hpp"
#include "fastgen/random.hpp"
#include "test_support.hpp"

namespace fastgen {
namespace {

using testing::el;
using testing::naive_pow;
using testing::tiny_group;
using testing::u64;
using testing::word;

TEST(Bsgs, SpecExamples) {
  const GroupParams params = tiny_group();
  EXPECT_EQ(bsgs_dlog(el(16), el(2), params).value(), 4);
  EXPECT_EQ(bsgs_dlog(el(8), el(8), params).value(), 1);
  EXPECT_EQ(bsgs_dlog(el(1), el(2), params).value(), 0);
}

TEST(Bsgs, ExhaustiveAgainstLinearScan) {
  const GroupParams params = make_params(2039, 1019, 2);
  for (u64 base : {2ULL, 9ULL, 1024ULL}) {
    const Element b = el(testing::word_pow(base, 2, 2039));
    const DiscreteLogTable table(b, params);
    for (u64 x = 0; x < 1019; ++x) {
      const u64 h = testing::word_pow(word(b.value()), x, 2039);
      ASSERT_EQ(word(table.solve(el(h)).value()), x);
    }
  }
}

TEST(Bsgs, RandomLargerGroup) {
  const GroupParams params = generate_params(33, 5);
  Rng rng(5);
  const DiscreteLogTable table(generator(params), params);
  for (int i = 0; i < 20; ++i) {
    const BigInt x = rng.below(params.p);
    EXPECT_EQ(table.solve(power(generator(params), x, params)).value(), x);
  }
}

TEST(Bsgs, RejectsNonMembersAndOversizedGroups) {
  const GroupParams params = tiny_group();
  try {
    bsgs_dlog(el(5), el(2), params);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMember);
  }
  const GroupParams big = generate_params(64, 1);
  try {
    bsgs_dlog(generator(big), generator(big), big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kScaleBound);
  }
  // The bound is configurable.
  EXPECT_THROW(bsgs_dlog(el(2), el(2), params, 3), Error);
}

TEST(PerfectDhOracle, SpecExamples) {
  const GroupParams params = tiny_group();
  DhOracle oracle = make_perfect_dh_oracle(params, el(2));
  EXPECT_EQ(oracle.answer(el(8), el(16)), el(2));
  EXPECT_EQ(oracle.answer(el(2), el(2)), el(2));
  EXPECT_EQ(oracle.answer(el(1), el(16)), el(1));
  EXPECT_EQ(oracle.query_count(), 3u);
}

TEST(PerfectDhOracle, ExhaustiveTinyGroup) {
  const GroupParams params = tiny_group();
  DhOracle oracle = make_perfect_dh_oracle(params, el(2));
  for (u64 x = 0; x < 11; ++x) {
    for (u64 y = 0; y < 11; ++y) {
      EXPECT_EQ(word(oracle.answer(el(naive_pow(2, x, 23)), el(naive_pow(2, y, 23))).value()),
                naive_pow(2, x * y, 23));
    }
  }
}

TEST(InvertExponent, SpecExamples) {
  const GroupParams params = tiny_group();
  DhOracle oracle = make_perfect_dh_oracle(params, el(2));
  EXPECT_EQ(invert_exponent(oracle, el(8), params), el(16));
  EXPECT_EQ(invert_exponent(oracle, el(2), params), el(2));
  EXPECT_EQ(invert_exponent(oracle, el(12), params), el(12));
}

TEST(InvertExponent, ExhaustiveWithQueryBound) {
  for (auto [q, p] : {std::pair<u64, u64>{7, 3}, {23, 11}, {2039, 1019}}) {
    const GroupParams params = make_params(q, p, 2);
    DhOracle oracle = make_perfect_dh_oracle(params, el(2));
    const std::uint64_t bound = 2 * ceil_log2(params.p);
    for (u64 r = 1; r < p; ++r) {
      oracle.reset_count();
      const Element got = invert_exponent(oracle, el(naive_pow(2, r, q)), params);
      ASSERT_EQ(word(got.value()), naive_pow(2, testing::brute_inverse(r, p), q)) << r;
      ASSERT_LE(oracle.query_count(), bound);
    }
  }
}

TEST(InvertExponent, RejectsIdentity) {
  const GroupParams params = tiny_group();
  DhOracle oracle = make_perfect_dh_oracle(params, el(2));
  try {
    invert_exponent(oracle, el(1), params);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIdentity);
  }
}

TEST(DhAnyBase, SpecExamples) {
  const GroupParams params = tiny_group();
  DhOracle oracle = make_perfect_dh_oracle(params, el(2));
  EXPECT_EQ(dh_any_base(oracle, el(8), el(18), el(16), params), el(3));
  EXPECT_LE(oracle.query_count(), 2 * ceil_log2(params.p) + 2);

  EXPECT_EQ(dh_any_base(oracle, el(8), el(8), el(8), params), el(8));

  oracle.reset_count();
  EXPECT_EQ(dh_any_base(oracle, el(2), el(8), el(16), params), el(2));
  EXPECT_EQ(oracle.query_count(), 1u);
}

TEST(DhAnyBase, ExhaustiveTinyGroup) {
  const GroupParams params = tiny_group();
  DhOracle oracle = make_perfect_dh_oracle(params, el(2));
  for (u64 r = 1; r < 11; ++r) {
    const u64 g = naive_pow(2, r, 23);
    for (u64 x = 0; x < 11; ++x) {
      for (u64 y = 0; y < 11; ++y) {
        oracle.reset_count();
        const Element got =
            dh_any_base(oracle, el(g), el(naive_pow(g, x, 23)), el(naive_pow(g, y, 23)), params);
        ASSERT_EQ(word(got.value()), naive_pow(g, x * y, 23));
        ASSERT_LE(oracle.query_count(), 2 * ceil_log2(params.p) + 2);
      }
    }
  }
}

TEST(DhAnyBase, RejectsIdentityBase) {
  const GroupParams params = tiny_group();
  DhOracle oracle = make_perfect_dh_oracle(params, el(2));
  EXPECT_THROW(dh_any_base(oracle, el(1), el(1), el(1), params), Error);
  EXPECT_THROW(dh_any_base(oracle, el(8), el(5), el(1), params), Error);
}

TEST(DlAnyBase, SpecExamples) {
  const GroupParams params = tiny_group();
  DlOracle oracle = make_perfect_dl_oracle(params, el(2));
  EXPECT_EQ(dl_any_base(oracle, el(8), el(16), params).value(), 5);
  EXPECT_EQ(oracle.query_count(), 2u);
  EXPECT_EQ(dl_any_base(oracle, el(8), el(8), params).value(), 1);
  EXPECT_EQ(dl_any_base(oracle, el(8), el(1), params).value(), 0);
}

TEST(DlAnyBase, ExhaustiveBelowTwoToTheTen) {
  for (auto [q, p] : {std::pair<u64, u64>{23, 11}, {167, 83}, {1319, 659}}) {
    const GroupParams params = make_params(q, p, 2);
    DlOracle oracle = make_perfect_dl_oracle(params, el(2));
    for (u64 r : {u64{1}, u64{2}, p - 1, p / 2}) {
      const u64 g = naive_pow(2, r, q);
      for (u64 x = 0; x < p; ++x) {
        oracle.reset_count();
        const Exponent got = dl_any_base(oracle, el(g), el(testing::word_pow(g, x, q)), params);
        ASSERT_EQ(word(got.value()), x);
        ASSERT_EQ(oracle.query_count(), 2u);
      }
    }
  }
}

TEST(NoisyOracle, EpsilonOneIsTransparent) {
  const GroupParams params = tiny_group();
  DhOracle noisy = make_noisy_dh_oracle(make_perfect_dh_oracle(params, el(2)), {1.0, 3}, params);
  for (u64 x = 1; x < 11; ++x) {
    EXPECT_EQ(noisy.answer(el(naive_pow(2, x, 23)), el(16)), el(naive_pow(2, 4 * x, 23)));
  }
  EXPECT_EQ(noisy.query_count(), 10u);
}

TEST(NoisyOracle, CorrectFrequencyWithinThreeSigma) {
  const GroupParams params = tiny_group();
  DhOracle noisy = make_noisy_dh_oracle(make_perfect_dh_oracle(params, el(2)), {0.2, 17}, params);
  constexpr int kCalls = 10000;
  int correct = 0;
  for (int i = 0; i < kCalls; ++i) correct += noisy.answer(el(8), el(16)) == el(2);
  EXPECT_EQ(noisy.query_count(), static_cast<std::uint64_t>(kCalls));
  const double prob = 0.2 + 0.8 / 11.0;
  const double sigma = std::sqrt(kCalls * prob * (1 - prob));
  EXPECT_NEAR(correct, kCalls * prob, 3 * sigma);
}

TEST(NoisyOracle, RejectsBadEpsilon) {
  const GroupParams params = tiny_group();
  for (double eps : {0.0, -0.1, 1.5}) {
    EXPECT_THROW(make_noisy_dh_oracle(make_perfect_dh_oracle(params, el(2)), {eps, 1}, params),
                 Error);
  }
}

TEST(Amplify, RoundCount) {
  EXPECT_EQ(amplification_rounds(0.2, 0.01), 922u);
  EXPECT_EQ(amplification_rounds(1.0, 0.01), 1u);
  EXPECT_EQ(amplification_rounds(0.5, 0.25), 45u);  // ceil(8 ln 4 / 0.25)
  EXPECT_THROW(amplification_rounds(0.2, 0.5), Error);
  EXPECT_THROW(amplification_rounds(0.2, 0.0), Error);
}

TEST(Amplify, PerfectOracleIsExactInOneRound) {
  const GroupParams params = tiny_group();
  DhOracle amplified = amplify(make_perfect_dh_oracle(params, el(2)), 1.0, 0.01, 4, params);
  for (u64 x = 0; x < 11; ++x) {
    for (u64 y = 0; y < 11; ++y) {
      ASSERT_EQ(word(amplified.answer(el(naive_pow(2, x, 23)), el(naive_pow(2, y, 23))).value()),
                naive_pow(2, x * y, 23));
    }
  }
}

TEST(Amplify, NoisyTinyGroupSucceedsInNinetyNinePercent) {
  const GroupParams params = tiny_group();
  int correct = 0;
  constexpr int kTrials = 200;
  for (int trial = 0; trial < kTrials; ++trial) {
    DhOracle noisy = make_noisy_dh_oracle(make_perfect_dh_oracle(params, el(2)),
                                          {0.2, 1000 + static_cast<std::uint64_t>(trial)}, params);
    DhOracle amplified = amplify(std::move(noisy), 0.2, 0.01, 5000 + trial, params);
    correct += amplified.answer(el(8), el(16)) == el(2);
  }
  EXPECT_GE(correct, 198);
}

TEST(Amplify, UnblindingAlgebraExhaustiveForElevenPrime) {
  // (f^{(xr)(ys)})^{(rs)^{-1}} == f^{xy} for every r, s, x, y in [1, p-1].
  const GroupParams params = tiny_group();
  for (u64 r = 1; r < 11; ++r) {
    for (u64 s = 1; s < 11; ++s) {
      const BigInt t = inv_mod(BigInt(static_cast<unsigned long>(r * s)), 11);
      for (u64 x = 1; x < 11; ++x) {
        for (u64 y = 1; y < 11; ++y) {
          const Element blinded = el(naive_pow(2, (x * r % 11) * (y * s % 11), 23));
          ASSERT_EQ(word(power(blinded, t, params).value()), naive_pow(2, x * y, 23));
        }
      }
    }
  }
}

}  // namespace
}  // namespace fastgen
