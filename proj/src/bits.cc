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

#include "dpvo/bits.h"

#include "dpvo/error.h"

namespace dpvo {

void AppendBits(BitString& out, uint64_t value, int width) {
  for (int i = width - 1; i >= 0; --i) {
    out.push_back(static_cast<uint8_t>((value >> i) & 1u));
  }
}

uint64_t ReadBits(std::span<const uint8_t> bits, size_t pos, int width) {
  if (pos + static_cast<size_t>(width) > bits.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bit read past end");
  }
  uint64_t v = 0;
  for (int i = 0; i < width; ++i) v = (v << 1) | (bits[pos + i] & 1u);
  return v;
}

BitString BytesToBits(std::span<const uint8_t> bytes) {
  BitString bits;
  bits.reserve(bytes.size() * 8);
  for (uint8_t b : bytes) AppendBits(bits, b, 8);
  return bits;
}

std::vector<uint8_t> BitsToBytes(std::span<const uint8_t> bits) {
  std::vector<uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) bytes[i / 8] |= static_cast<uint8_t>(0x80u >> (i % 8));
  }
  return bytes;
}

std::string BitsToString(std::span<const uint8_t> bits) {
  std::string s;
  s.reserve(bits.size());
  for (uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

BitString BitsFromString(const std::string& s) {
  BitString bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::kInvalidArgument, "bit string must be 0/1");
    }
    bits.push_back(c == '1');
  }
  return bits;
}

}  // namespace dpvo
