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

#include "dpvo/error.h"

namespace dpvo {

BitString PackHeader(const ContainerHeader& h) {
  if (h.reserved_rows > kMaxReservedRows || h.lm_clen > kMaxMapCodeBits ||
      h.mou_clen > kMaxMapCodeBits) {
    throw Error(ErrorCode::kInvalidArgument, "header field out of range");
  }
  BitString bits;
  bits.reserve(kHeaderBits);
  AppendBits(bits, kContainerMagic, 32);
  AppendBits(bits, h.version, 8);
  AppendBits(bits, h.reserved_rows, 12);
  AppendBits(bits, static_cast<uint8_t>(h.lsb_carry), 4);
  AppendBits(bits, h.data_len, 32);
  AppendBits(bits, h.fwd_bits, 32);
  AppendBits(bits, h.bwd_bits, 32);
  AppendBits(bits, h.lm_clen, 20);
  AppendBits(bits, h.mou_clen, 20);
  return bits;
}

ContainerHeader UnpackHeader(std::span<const uint8_t> bits) {
  if (bits.size() < static_cast<size_t>(kHeaderBits)) {
    throw Error(ErrorCode::kContainerInvalid, "not a dPVO container");
  }
  if (ReadBits(bits, 0, 32) != kContainerMagic) {
    throw Error(ErrorCode::kContainerInvalid, "not a dPVO container");
  }
  ContainerHeader h;
  h.version = static_cast<uint8_t>(ReadBits(bits, 32, 8));
  if (h.version != kContainerVersion) {
    throw Error(ErrorCode::kContainerInvalid, "unsupported version");
  }
  h.reserved_rows = static_cast<uint16_t>(ReadBits(bits, 40, 12));
  const uint64_t carry = ReadBits(bits, 52, 4);
  if (carry > static_cast<uint64_t>(LsbCarry::kInRegion)) {
    throw Error(ErrorCode::kContainerInvalid, "unknown LSB carry mode");
  }
  h.lsb_carry = static_cast<LsbCarry>(carry);
  h.data_len = static_cast<uint32_t>(ReadBits(bits, 56, 32));
  h.fwd_bits = static_cast<uint32_t>(ReadBits(bits, 88, 32));
  h.bwd_bits = static_cast<uint32_t>(ReadBits(bits, 120, 32));
  h.lm_clen = static_cast<uint32_t>(ReadBits(bits, 152, 20));
  h.mou_clen = static_cast<uint32_t>(ReadBits(bits, 172, 20));
  return h;
}

}  // namespace dpvo
