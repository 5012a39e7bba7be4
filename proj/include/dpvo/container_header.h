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

// Fixed 192-bit container header, packed MSB first:
//
//   magic          32   0x4450564F ("DPVO")
//   version         8   1
//   reserved_rows  12
//   lsb_carry       4   where the original reserved-region LSBs travel
//   data_len       32   user data bits
//   fwd_bits       32   payload bits consumed by the forward phase
//   bwd_bits       32   payload bits consumed by the backward phase
//   lm_clen        20   compressed skip-map bit length
//   mou_clen       20   compressed overflow-map bit length

#ifndef DPVO_CONTAINER_HEADER_H_
#define DPVO_CONTAINER_HEADER_H_

#include <cstdint>
#include <span>

#include "dpvo/bits.h"

namespace dpvo {

inline constexpr uint32_t kContainerMagic = 0x4450564Fu;
inline constexpr uint8_t kContainerVersion = 1;
inline constexpr int kHeaderBits = 192;
inline constexpr int kMaxReservedRows = (1 << 12) - 1;
inline constexpr uint32_t kMaxMapCodeBits = (1u << 20) - 1;

enum class LsbCarry : uint8_t {
  // Original LSBs lead the forward payload.
  kInPayload = 0,
  // Original LSBs are arithmetic-coded and stored after the maps inside the
  // reserved region itself.
  kInRegion = 1,
};

struct ContainerHeader {
  uint8_t version = kContainerVersion;
  uint16_t reserved_rows = 0;
  LsbCarry lsb_carry = LsbCarry::kInPayload;
  uint32_t data_len = 0;
  uint32_t fwd_bits = 0;
  uint32_t bwd_bits = 0;
  uint32_t lm_clen = 0;
  uint32_t mou_clen = 0;

  bool operator==(const ContainerHeader&) const = default;
};

BitString PackHeader(const ContainerHeader& h);

// Reads the first kHeaderBits bits.
ContainerHeader UnpackHeader(std::span<const uint8_t> bits);

}  // namespace dpvo

#endif  // DPVO_CONTAINER_HEADER_H_
