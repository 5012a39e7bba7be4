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

// Maximum-side PVO baseline on 1xn blocks: the largest pixel is predicted
// from the second largest, bin 1 carries a bit and larger errors shift.
// Provided for comparison only; it has no container format.

#ifndef DPVO_LI_BASELINE_H_
#define DPVO_LI_BASELINE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dpvo/bits.h"
#include "dpvo/image.h"

namespace dpvo {

struct LiBlock {
  std::vector<int> values;    // ascending
  std::vector<uint8_t> perm;  // perm[i]: original position of values[i]
};

LiBlock MakeLiBlock(std::span<const int> pixels);
std::vector<int> UnsortLiBlock(const LiBlock& blk);

// Requires values.size() >= 2 and the maximum <= 254.
int LiEmbedBlock(LiBlock& blk, BitCursor& bits);
std::optional<uint8_t> LiExtractBlock(LiBlock& blk);

struct LiEmbedding {
  GrayImage stego;
  BitString overflow;  // one bit per grid pixel: 255 lowered to 254
  size_t bits = 0;     // payload bits consumed, padding included
  size_t padding = 0;
};

inline constexpr int kLiDefaultBlockSize = 4;

// Sequential row-major 1xn blocks, same stopping rule as the forward phase.
LiEmbedding LiEmbedImage(const GrayImage& cover,
                         std::span<const uint8_t> payload,
                         int block_size = kLiDefaultBlockSize);
GrayImage LiExtractImage(const GrayImage& stego, const BitString& overflow,
                         size_t bits, BitString* payload,
                         int block_size = kLiDefaultBlockSize);
size_t LiCapacity(const GrayImage& cover, int block_size = kLiDefaultBlockSize);

}  // namespace dpvo

#endif  // DPVO_LI_BASELINE_H_
