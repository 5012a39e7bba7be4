// Copyright 2026 The dpvo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpvo/arith_coder.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dpvo/error.h"

namespace dpvo {
namespace {

double Entropy(double p) {
  return p <= 0 || p >= 1 ? 0.0 : -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

// Exactly round(n p) ones in random order, so the empirical entropy equals
// H(p) up to rounding.
BitString ExactBernoulli(size_t n, double p, std::mt19937_64& rng) {
  BitString s(n, 0);
  std::fill_n(s.begin(), static_cast<size_t>(std::llround(n * p)), 1);
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

TEST(ArithCoderTest, EmptyInputGivesEmptyCode) {
  EXPECT_TRUE(ArithEncode({}).empty());
  EXPECT_TRUE(ArithDecode({}, 0).empty());
}

TEST(ArithCoderTest, ExhaustiveUpToTwelveBits) {
  for (int len = 0; len <= 12; ++len) {
    for (uint32_t v = 0; v < (1u << len); ++v) {
      BitString s;
      AppendBits(s, v, len);
      ASSERT_EQ(ArithDecode(ArithEncode(s), s.size()), s) << len << ":" << v;
    }
  }
}

TEST(ArithCoderTest, RandomRoundTrip) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const size_t n = rng() % 5000;
    std::bernoulli_distribution bit(static_cast<double>(rng() % 1000) / 1000.0);
    BitString s(n);
    for (auto& b : s) b = bit(rng);
    ASSERT_EQ(ArithDecode(ArithEncode(s), n), s);
  }
}

TEST(ArithCoderTest, TenThousandZerosUnderTwoHundredBits) {
  EXPECT_LT(ArithEncode(BitString(10000, 0)).size(), 200u);
}

TEST(ArithCoderTest, NearEntropyOnBernoulliSources) {
  std::mt19937_64 rng(5);
  constexpr size_t kN = 100000;
  for (double p : {0.01, 0.1, 0.5}) {
    const BitString s = ExactBernoulli(kN, p, rng);
    const double bound = kN * Entropy(p) + 64;
    EXPECT_LE(static_cast<double>(ArithEncode(s).size()), bound) << p;
  }
}

TEST(ArithCoderTest, ModelHalvesAtLimit) {
  AdaptiveBitModel m;
  for (uint32_t i = 0; i + 3 < kModelCountLimit; ++i) m.Update(0);
  EXPECT_EQ(m.c0() + m.c1(), kModelCountLimit - 1);
  m.Update(1);
  EXPECT_EQ(m.c0(), (kModelCountLimit - 2) / 2);
  EXPECT_EQ(m.c1(), 1u);
}

TEST(ArithCoderTest, WrongLengthOrCorruptCodeDesyncs) {
  std::mt19937_64 rng(3);
  BitString s(300);
  for (auto& b : s) b = rng() & 1;
  const BitString code = ArithEncode(s);
  EXPECT_THROW(ArithDecode(code, s.size() + 40), Error);
  BitString extended = code;
  extended.push_back(1);
  EXPECT_THROW(ArithDecode(extended, s.size()), Error);
  BitString flipped = code;
  flipped[code.size() / 2] ^= 1;
  try {
    const BitString got = ArithDecode(flipped, s.size());
    EXPECT_NE(got, s);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCodecDesync);
  }
}

TEST(ArithCoderTest, PrefixDecodeReportsConsumedLength) {
  const BitString s = BitString(500, 0);
  BitString code = ArithEncode(s);
  const size_t len = code.size();
  code.insert(code.end(), {1, 0, 1, 1});
  size_t consumed = 0;
  EXPECT_EQ(ArithDecodePrefix(code, s.size(), &consumed), s);
  EXPECT_EQ(consumed, len);
}

}  // namespace
}  // namespace dpvo
