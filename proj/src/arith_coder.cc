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

#include <algorithm>

#include "dpvo/error.h"

namespace dpvo {
namespace {

constexpr uint32_t kHalf = 0x80000000u;
constexpr uint32_t kQuarter = 0x40000000u;
constexpr uint32_t kThreeQuarters = 0xC0000000u;

}  // namespace

void AdaptiveBitModel::Update(int bit) {
  if (bit) {
    ++c1_;
  } else {
    ++c0_;
  }
  if (c0_ + c1_ >= kModelCountLimit) {
    c0_ = std::max<uint32_t>(1, c0_ / 2);
    c1_ = std::max<uint32_t>(1, c1_ / 2);
  }
}

void ArithEncoder::Emit(int bit) {
  out_.push_back(static_cast<uint8_t>(bit));
  for (; pending_ > 0; --pending_) out_.push_back(static_cast<uint8_t>(!bit));
}

void ArithEncoder::Encode(int bit) {
  const uint64_t range = static_cast<uint64_t>(high_ - low_) + 1;
  const uint32_t split = low_ + static_cast<uint32_t>(model_.Split(range));
  if (bit) {
    low_ = split;
  } else {
    high_ = split - 1;
  }
  model_.Update(bit);
  ++symbols_;
  for (;;) {
    if (high_ < kHalf) {
      Emit(0);
    } else if (low_ >= kHalf) {
      Emit(1);
      low_ -= kHalf;
      high_ -= kHalf;
    } else if (low_ >= kQuarter && high_ < kThreeQuarters) {
      ++pending_;
      low_ -= kQuarter;
      high_ -= kQuarter;
    } else {
      break;
    }
    low_ <<= 1;
    high_ = (high_ << 1) | 1u;
  }
}

BitString ArithEncoder::Finish() {
  if (symbols_ == 0) return {};
  // Two more bits (plus pending) select a quarter lying inside [low, high],
  // so any continuation the decoder reads stays in the final interval.
  ++pending_;
  Emit(low_ < kQuarter ? 0 : 1);
  return std::move(out_);
}

ArithDecoder::ArithDecoder(std::span<const uint8_t> code) : code_(code) {
  for (int i = 0; i < 32; ++i) value_ = (value_ << 1) | NextCodeBit();
}

int ArithDecoder::Decode() {
  const uint64_t range = static_cast<uint64_t>(high_ - low_) + 1;
  const uint32_t split = low_ + static_cast<uint32_t>(model_.Split(range));
  const int bit = value_ >= split ? 1 : 0;
  if (bit) {
    low_ = split;
  } else {
    high_ = split - 1;
  }
  if (value_ < low_ || value_ > high_) {
    throw Error(ErrorCode::kCodecDesync, "codec desync");
  }
  model_.Update(bit);
  ++symbols_;
  for (;;) {
    if (high_ < kHalf) {
      // nothing to subtract
    } else if (low_ >= kHalf) {
      low_ -= kHalf;
      high_ -= kHalf;
      value_ -= kHalf;
    } else if (low_ >= kQuarter && high_ < kThreeQuarters) {
      low_ -= kQuarter;
      high_ -= kQuarter;
      value_ -= kQuarter;
    } else {
      break;
    }
    low_ <<= 1;
    high_ = (high_ << 1) | 1u;
    value_ = (value_ << 1) | NextCodeBit();
  }
  return bit;
}

BitString ArithEncode(std::span<const uint8_t> bits) {
  ArithEncoder enc;
  for (uint8_t b : bits) enc.Encode(b & 1);
  return enc.Finish();
}

BitString ArithDecodePrefix(std::span<const uint8_t> code, size_t n,
                            size_t* consumed) {
  ArithDecoder dec(code);
  BitString out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(static_cast<uint8_t>(dec.Decode()));
  // The code is canonical, so re-encoding pins down its exact length and
  // rejects codes that merely decode to something.
  const BitString canonical = ArithEncode(out);
  if (canonical.size() > code.size() ||
      !std::equal(canonical.begin(), canonical.end(), code.begin())) {
    throw Error(ErrorCode::kCodecDesync, "codec desync");
  }
  *consumed = canonical.size();
  return out;
}

BitString ArithDecode(std::span<const uint8_t> code, size_t n) {
  size_t consumed = 0;
  BitString out = ArithDecodePrefix(code, n, &consumed);
  if (consumed != code.size()) {
    throw Error(ErrorCode::kCodecDesync, "codec desync");
  }
  return out;
}

}  // namespace dpvo
