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

#include "dpvo/li_baseline.h"

#include <gtest/gtest.h>

#include <random>

#include "dpvo/error.h"
#include "dpvo/prng.h"
#include "test_util.h"

namespace dpvo {
namespace {

TEST(LiBlockTest, Goldens) {
  const BitString one = BitsFromString("1");
  LiBlock blk = MakeLiBlock(std::vector<int>{150, 162, 158, 161});
  BitCursor c(one);
  EXPECT_EQ(LiEmbedBlock(blk, c), 1);
  EXPECT_EQ(blk.values.back(), 163);
  EXPECT_EQ(UnsortLiBlock(blk), (std::vector<int>{150, 163, 158, 161}));

  LiBlock shift = MakeLiBlock(std::vector<int>{161, 163, 100, 120});
  BitCursor c2(one);
  EXPECT_EQ(LiEmbedBlock(shift, c2), 0);
  EXPECT_EQ(shift.values.back(), 164);

  LiBlock flat = MakeLiBlock(std::vector<int>{9, 9, 3, 1});
  BitCursor c3(one);
  EXPECT_EQ(LiEmbedBlock(flat, c3), 0);
  EXPECT_EQ(UnsortLiBlock(flat), (std::vector<int>{9, 9, 3, 1}));
  EXPECT_FALSE(LiExtractBlock(flat).has_value());
}

TEST(LiBlockTest, ExhaustiveFourTuples) {
  std::vector<int> v(4);
  for (int code = 0; code < 10000; ++code) {
    int x = code;
    for (int i = 0; i < 4; ++i, x /= 10) v[i] = x % 10;
    for (int bit = 0; bit <= 1; ++bit) {
      LiBlock blk = MakeLiBlock(v);
      const std::vector<uint8_t> perm = blk.perm;
      const int e = blk.values[3] - blk.values[2];
      const BitString src{static_cast<uint8_t>(bit)};
      BitCursor c(src);
      const int used = LiEmbedBlock(blk, c);
      ASSERT_EQ(used, e == 1 ? 1 : 0);
      const int want_hat = e == 0 ? 0 : e == 1 ? 1 + bit : e + 1;
      ASSERT_EQ(blk.values[3], blk.values[2] + want_hat);
      // Re-sorting the embedded values yields the same order.
      ASSERT_EQ(MakeLiBlock(UnsortLiBlock(blk)).perm, perm);
      const auto got = LiExtractBlock(blk);
      ASSERT_EQ(UnsortLiBlock(blk), v);
      ASSERT_EQ(got.has_value(), used == 1);
      if (got) ASSERT_EQ(*got, bit);
    }
  }
}

TEST(LiImageTest, RoundTrip) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    GrayImage cover = testing::SmoothImage(26, 20, rng);
    cover.at(0, 0) = 255;
    const size_t cap = LiCapacity(cover);
    const BitString payload = PrngPayload(t, rng() % (cap + 1));
    const LiEmbedding e = LiEmbedImage(cover, payload);
    EXPECT_EQ(e.bits - e.padding, payload.size());
    BitString got;
    EXPECT_EQ(LiExtractImage(e.stego, e.overflow, e.bits, &got), cover);
    got.resize(payload.size());
    EXPECT_EQ(got, payload);
  }
}

TEST(LiImageTest, RejectsTinyBlocks) {
  EXPECT_THROW(LiCapacity(GrayImage(4, 4), 1), Error);
}

}  // namespace
}  // namespace dpvo
