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

// Bit strings and MSB-first packing helpers.

#ifndef DPVO_BITS_H_
#define DPVO_BITS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dpvo {

// One element per bit, each 0 or 1.
using BitString = std::vector<uint8_t>;

// Appends the low `width` bits of `value`, most significant first.
void AppendBits(BitString& out, uint64_t value, int width);

// Reads `width` bits starting at `pos` (MSB first). Requires pos + width <=
// bits.size().
uint64_t ReadBits(std::span<const uint8_t> bits, size_t pos, int width);

BitString BytesToBits(std::span<const uint8_t> bytes);

// Packs MSB first; the final byte is zero-padded.
std::vector<uint8_t> BitsToBytes(std::span<const uint8_t> bits);

// "0101..." rendering, mostly for tests and diagnostics.
std::string BitsToString(std::span<const uint8_t> bits);
BitString BitsFromString(const std::string& s);

// Sequential reader used by the embedders. Reading past the end yields 0 and
// is counted as padding.
class BitCursor {
 public:
  explicit BitCursor(std::span<const uint8_t> bits) : bits_(bits) {}

  uint8_t Next() {
    if (pos_ < bits_.size()) return bits_[pos_++];
    ++padding_;
    return 0;
  }
  size_t remaining() const { return bits_.size() - pos_; }
  size_t position() const { return pos_; }
  size_t padding() const { return padding_; }

 private:
  std::span<const uint8_t> bits_;
  size_t pos_ = 0;
  size_t padding_ = 0;
};

}  // namespace dpvo

#endif  // DPVO_BITS_H_
