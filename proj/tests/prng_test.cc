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

#include "dpvo/prng.h"

#include <gtest/gtest.h>

namespace dpvo {
namespace {

// Golden values computed with arbitrary-precision integers from the
// recurrence s' = 6364136223846793005 s + 1442695040888963407 (mod 2^64).
TEST(PrngTest, SeedZeroGolden) {
  EXPECT_EQ(BitsToString(PrngPayload(0, 8)), "00100100");
  EXPECT_EQ(BitsToString(PrngPayload(0, 64)),
            "0010010000100010110011100000010010111110000010100011110100100101");
}

TEST(PrngTest, OtherSeedGolden) {
  EXPECT_EQ(BitsToString(PrngPayload(0x0123456789abcdefULL, 32)),
            "01111011001100000000001010100000");
}

TEST(PrngTest, EmptyAndDeterministic) {
  EXPECT_TRUE(PrngPayload(7, 0).empty());
  EXPECT_EQ(PrngPayload(7, 1000), PrngPayload(7, 1000));
  EXPECT_NE(PrngPayload(7, 1000), PrngPayload(8, 1000));
}

TEST(PrngTest, ShorterIsPrefix) {
  const BitString a = PrngPayload(3, 100);
  const BitString b = PrngPayload(3, 40);
  EXPECT_TRUE(std::equal(b.begin(), b.end(), a.begin()));
}

}  // namespace
}  // namespace dpvo
