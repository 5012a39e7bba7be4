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

// Forward phase: boundary preprocessing and minimum-PVO prediction-error
// expansion on 1x3 blocks. Within a block the minimum side is expanded (and
// consumes its bit) before the maximum side.

#ifndef DPVO_FORWARD_H_
#define DPVO_FORWARD_H_

#include <array>
#include <cstddef>
#include <span>

#include "dpvo/bits.h"
#include "dpvo/image.h"
#include "dpvo/trace.h"

namespace dpvo {

// One bit per block-grid pixel in block order; 1 marks a pixel moved off 0 or
// 255 by Preprocess.
struct OverflowMap {
  BitString bits;
};

// 255 -> 254 and 0 -> 1 on block-grid pixels only.
OverflowMap Preprocess(GrayImage& img, int reserved_rows);

// Inverse of Preprocess. Throws kContainerInvalid ("corrupt overflow map")
// when a marked pixel is not 1 or 254.
void PostprocessRestore(GrayImage& img, const OverflowMap& map,
                        int reserved_rows);

// Flat pixel index of entry i of an OverflowMap.
size_t GridPixelIndex(int width, size_t i);

struct ForwardErrors {
  int e_min = 0;  // x_sorted[0] - x_sorted[1], never positive
  int e_max = 0;  // x_sorted[2] - x_sorted[1], never negative
};

ForwardErrors ComputeForwardErrors(const SortedBlock& sb);

// Bits a block will consume, independent of their values.
int ForwardDemand(const SortedBlock& sb);

struct ForwardBlockOutcome {
  int consumed = 0;
  PixelOutcome min_side = PixelOutcome::kUntouched;
  PixelOutcome max_side = PixelOutcome::kUntouched;
};

// Expands the block in place. Values must lie in [1, 254].
ForwardBlockOutcome ForwardEmbedBlock(SortedBlock& sb, BitCursor& bits);

struct BlockBits {
  int count = 0;
  std::array<uint8_t, 2> bits{};  // minimum side first
};

// Restores the block in place and returns the bits it carried.
BlockBits ForwardExtractBlock(SortedBlock& sb);

struct ForwardEmbedResult {
  size_t fwd_bits = 0;  // bits consumed, padding included
  size_t padding = 0;
  size_t blocks_processed = 0;
};

// Embeds blocks in grid order up to and including the block where the
// payload runs out (zero-padding that block), or up to the last block with
// capacity if the payload is longer than the capacity. Later blocks are left
// untouched.
ForwardEmbedResult ForwardEmbedImage(GrayImage& img,
                                     std::span<const uint8_t> payload,
                                     int reserved_rows,
                                     PixelTrace* trace = nullptr);

// Restores blocks in grid order until fwd_bits bits are collected.
BitString ForwardExtractImage(GrayImage& img, size_t fwd_bits,
                              int reserved_rows);

// Number of blocks with e_min == -1 plus number with e_max == 1.
size_t ForwardCapacity(const GrayImage& img, int reserved_rows);

}  // namespace dpvo

#endif  // DPVO_FORWARD_H_
