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

// Adaptive order-0 binary arithmetic coder used for the location maps.
//
// Model: counts start at c0 = c1 = 1 and are incremented after each symbol;
// both are halved (floor, minimum 1) once c0 + c1 reaches kModelCountLimit.
// Coder: 32-bit low/high interval with E1/E2/E3 renormalization and pending
// (underflow) bits. The decoder reads zeros past the end of the code.
//
// The code is not self-terminating: the decoder must be told how many
// symbols to produce.

#ifndef DPVO_ARITH_CODER_H_
#define DPVO_ARITH_CODER_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "dpvo/bits.h"

namespace dpvo {

inline constexpr uint32_t kModelCountLimit = 1u << 16;

class AdaptiveBitModel {
 public:
  // Width of the sub-interval assigned to symbol 0 within `range`.
  uint64_t Split(uint64_t range) const { return range * c0_ / (c0_ + c1_); }
  void Update(int bit);

  uint32_t c0() const { return c0_; }
  uint32_t c1() const { return c1_; }

 private:
  uint32_t c0_ = 1;
  uint32_t c1_ = 1;
};

class ArithEncoder {
 public:
  void Encode(int bit);
  // Flushes the final interval; the encoder must not be used afterwards.
  BitString Finish();

 private:
  void Emit(int bit);

  AdaptiveBitModel model_;
  uint32_t low_ = 0;
  uint32_t high_ = 0xFFFFFFFFu;
  size_t pending_ = 0;
  size_t symbols_ = 0;
  BitString out_;
};

class ArithDecoder {
 public:
  explicit ArithDecoder(std::span<const uint8_t> code);
  int Decode();
  size_t symbols() const { return symbols_; }

 private:
  int NextCodeBit() { return pos_ < code_.size() ? code_[pos_++] : (++pos_, 0); }

  std::span<const uint8_t> code_;
  AdaptiveBitModel model_;
  uint32_t low_ = 0;
  uint32_t high_ = 0xFFFFFFFFu;
  uint32_t value_ = 0;
  size_t pos_ = 0;
  size_t symbols_ = 0;
};

BitString ArithEncode(std::span<const uint8_t> bits);

// Decodes exactly n symbols. `code` must be precisely ArithEncode of the
// result; anything else throws ErrorCode::kCodecDesync.
BitString ArithDecode(std::span<const uint8_t> code, size_t n);

// Like ArithDecode, but `code` may carry trailing bits. Returns the decoded
// symbols and stores the length of the code prefix in *consumed.
BitString ArithDecodePrefix(std::span<const uint8_t> code, size_t n,
                            size_t* consumed);

}  // namespace dpvo

#endif  // DPVO_ARITH_CODER_H_
