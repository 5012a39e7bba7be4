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

#include "dpvo/container_header.h"

#include <gtest/gtest.h>

#include "dpvo/error.h"

namespace dpvo {
namespace {

ContainerHeader Sample() {
  ContainerHeader h;
  h.reserved_rows = 37;
  h.lsb_carry = LsbCarry::kInRegion;
  h.data_len = 0xDEADBEEF;
  h.fwd_bits = 33405;
  h.bwd_bits = 7137;
  h.lm_clen = kMaxMapCodeBits;
  h.mou_clen = 12;
  return h;
}

TEST(ContainerHeaderTest, PackedSizeAndMagicBytes) {
  const BitString bits = PackHeader(Sample());
  ASSERT_EQ(bits.size(), static_cast<size_t>(kHeaderBits));
  EXPECT_EQ(ReadBits(bits, 0, 8), 0x44u);
  EXPECT_EQ(ReadBits(bits, 8, 8), 0x50u);
  EXPECT_EQ(ReadBits(bits, 16, 8), 0x56u);
  EXPECT_EQ(ReadBits(bits, 24, 8), 0x4Fu);
  EXPECT_EQ(ReadBits(bits, 32, 8), kContainerVersion);
}

TEST(ContainerHeaderTest, FieldLayout) {
  const BitString bits = PackHeader(Sample());
  EXPECT_EQ(ReadBits(bits, 40, 12), 37u);
  EXPECT_EQ(ReadBits(bits, 52, 4), 1u);
  EXPECT_EQ(ReadBits(bits, 56, 32), 0xDEADBEEFu);
  EXPECT_EQ(ReadBits(bits, 88, 32), 33405u);
  EXPECT_EQ(ReadBits(bits, 120, 32), 7137u);
  EXPECT_EQ(ReadBits(bits, 152, 20), kMaxMapCodeBits);
  EXPECT_EQ(ReadBits(bits, 172, 20), 12u);
}

TEST(ContainerHeaderTest, RoundTrip) {
  const ContainerHeader h = Sample();
  EXPECT_EQ(UnpackHeader(PackHeader(h)), h);
  ContainerHeader zero;
  EXPECT_EQ(UnpackHeader(PackHeader(zero)), zero);
}

TEST(ContainerHeaderTest, IgnoresTrailingBits) {
  BitString bits = PackHeader(Sample());
  bits.insert(bits.end(), 50, 1);
  EXPECT_EQ(UnpackHeader(bits), Sample());
}

TEST(ContainerHeaderTest, RejectsBadMagic) {
  BitString bits = PackHeader(Sample());
  bits[3] ^= 1;
  try {
    UnpackHeader(bits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kContainerInvalid);
    EXPECT_STREQ(e.what(), "not a dPVO container");
  }
}

TEST(ContainerHeaderTest, RejectsBadVersionAndShortInput) {
  BitString bits = PackHeader(Sample());
  bits[39] ^= 1;
  try {
    UnpackHeader(bits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "unsupported version");
  }
  EXPECT_THROW(UnpackHeader(BitString(191, 0)), Error);
}

TEST(ContainerHeaderTest, PackRejectsOutOfRangeFields) {
  ContainerHeader h = Sample();
  h.reserved_rows = kMaxReservedRows + 1;
  EXPECT_THROW(PackHeader(h), Error);
  h = Sample();
  h.mou_clen = kMaxMapCodeBits + 1;
  EXPECT_THROW(PackHeader(h), Error);
}

}  // namespace
}  // namespace dpvo
