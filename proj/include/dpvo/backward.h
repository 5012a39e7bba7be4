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

// Backward phase: pairwise PVO over the forward-expanded extreme pixels.
//
// A block's minimum (maximum) pixel joins the minimum (maximum) set when its
// gap to the middle value exceeds 1 after the forward phase; that is the
// footprint of a forward decrease (increase). Each set is cut into
// consecutive non-overlapping pairs. Minimum pairs move their larger pixel up
// by 0 or 1 and maximum pairs move their smaller pixel down by 0 or 1, so
// both partially undo the forward expansion. All minimum pairs are processed
// before any maximum pair.

#ifndef DPVO_BACKWARD_H_
#define DPVO_BACKWARD_H_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dpvo/bits.h"
#include "dpvo/image.h"
#include "dpvo/trace.h"

namespace dpvo {

enum class SetSide { kMin, kMax };

// One bit per block and side; 1 = the block's extreme pixel is excluded.
struct SkipMap {
  BitString min_bits;
  BitString max_bits;

  const BitString& side(SetSide s) const {
    return s == SetSide::kMin ? min_bits : max_bits;
  }
};

struct SetEntry {
  int value = 0;
  size_t pixel = 0;  // flat pixel index
  size_t block = 0;
};

using PixelSet = std::vector<SetEntry>;

struct BackwardSets {
  PixelSet min_set;
  PixelSet max_set;
  SkipMap skip;
};

// Gap between the middle value and the extreme on `side`.
int SideGap(const SortedBlock& sb, SetSide side);

BackwardSets CollectSets(const GrayImage& img, int reserved_rows);

// Pair values are given in set order and modified in place.
using PixelPair = std::array<int, 2>;

struct PairOutcome {
  int consumed = 0;
  PixelOutcome outcome = PixelOutcome::kUntouched;
  int changed_index = -1;  // which element moved or carried a bit
};

int PairDemand(const PixelPair& pair, SetSide side);
PairOutcome BackwardEmbedPair(PixelPair& pair, SetSide side, BitCursor& bits);
std::optional<uint8_t> BackwardExtractPair(PixelPair& pair, SetSide side);

inline PairOutcome BackwardEmbedPairMin(PixelPair& p, BitCursor& bits) {
  return BackwardEmbedPair(p, SetSide::kMin, bits);
}
inline PairOutcome BackwardEmbedPairMax(PixelPair& p, BitCursor& bits) {
  return BackwardEmbedPair(p, SetSide::kMax, bits);
}
inline std::optional<uint8_t> BackwardExtractPairMin(PixelPair& p) {
  return BackwardExtractPair(p, SetSide::kMin);
}
inline std::optional<uint8_t> BackwardExtractPairMax(PixelPair& p) {
  return BackwardExtractPair(p, SetSide::kMax);
}

struct BackwardEmbedResult {
  size_t bwd_bits = 0;  // padding included
  size_t padding = 0;
  size_t min_pairs = 0;  // pairs processed per side
  size_t max_pairs = 0;
  SkipMap skip;
  // Blocks a decoder inspects on each side before it has collected bwd_bits
  // bits. Skip-map entries past these are never read.
  size_t scan_min = 0;
  size_t scan_max = 0;
};

// Same stopping rule as ForwardEmbedImage, applied to the pair sequence.
BackwardEmbedResult BackwardEmbedImage(GrayImage& img,
                                       std::span<const uint8_t> payload,
                                       int reserved_rows,
                                       PixelTrace* trace = nullptr);

// Decides set membership while scanning an embedded image. Called with the
// block index and the block's current gap on that side.
using MembershipResolver =
    std::function<bool(SetSide side, size_t block, int gap)>;

BitString BackwardExtractImage(GrayImage& img,
                               const MembershipResolver& is_member,
                               size_t bwd_bits, int reserved_rows);

// Membership taken from the skip map alone.
BitString BackwardExtractImage(GrayImage& img, const SkipMap& skip,
                               size_t bwd_bits, int reserved_rows);

// Bits an unbounded payload would consume: minimum pairs with difference 1
// plus maximum pairs with difference 1.
size_t BackwardCapacity(const GrayImage& forward_img, int reserved_rows);

}  // namespace dpvo

#endif  // DPVO_BACKWARD_H_
