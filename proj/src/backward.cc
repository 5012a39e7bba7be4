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

#include "dpvo/backward.h"

#include "dpvo/error.h"

namespace dpvo {
namespace {

// Index of the lower and higher element of a pair; ties keep set order.
struct PairOrder {
  int lo;
  int hi;
};

PairOrder OrderOf(const PixelPair& p) {
  return p[0] <= p[1] ? PairOrder{0, 1} : PairOrder{1, 0};
}

// Signed prediction error: >= 0 for minimum pairs, <= 0 for maximum pairs.
int PairError(const PixelPair& p, SetSide side) {
  const PairOrder o = OrderOf(p);
  return side == SetSide::kMin ? p[o.hi] - p[o.lo] : p[o.lo] - p[o.hi];
}

struct PairRef {
  SetSide side;
  size_t first;  // index into the side's set; the pair is (first, first + 1)
};

}  // namespace

int SideGap(const SortedBlock& sb, SetSide side) {
  return side == SetSide::kMin ? sb.values[1] - sb.values[0]
                               : sb.values[2] - sb.values[1];
}

BackwardSets CollectSets(const GrayImage& img, int reserved_rows) {
  const size_t n = BlockCount(img.width, img.height, reserved_rows);
  BackwardSets s;
  s.skip.min_bits.assign(n, 0);
  s.skip.max_bits.assign(n, 0);
  for (size_t k = 0; k < n; ++k) {
    const SortedBlock sb = SortBlock(BlockAt(img, k));
    if (SideGap(sb, SetSide::kMin) > 1) {
      s.min_set.push_back(
          {sb.values[0], sb.origin.pixel(sb.perm[0], img.width), k});
    } else {
      s.skip.min_bits[k] = 1;
    }
    if (SideGap(sb, SetSide::kMax) > 1) {
      s.max_set.push_back(
          {sb.values[2], sb.origin.pixel(sb.perm[2], img.width), k});
    } else {
      s.skip.max_bits[k] = 1;
    }
  }
  return s;
}

int PairDemand(const PixelPair& pair, SetSide side) {
  const int e = PairError(pair, side);
  return side == SetSide::kMin ? e == 1 : e == -1;
}

PairOutcome BackwardEmbedPair(PixelPair& pair, SetSide side, BitCursor& bits) {
  const PairOrder o = OrderOf(pair);
  const int e = PairError(pair, side);
  PairOutcome out;
  if (e == 0) return out;
  // The predicted element: the larger of a minimum pair, the smaller of a
  // maximum pair. It moves toward its forward-phase origin.
  const int target = side == SetSide::kMin ? o.hi : o.lo;
  const int step = side == SetSide::kMin ? 1 : -1;
  out.changed_index = target;
  if (e == step) {
    const int b = bits.Next();
    pair[target] += step * b;
    out.consumed = 1;
    out.outcome = b ? PixelOutcome::kEmbedded1 : PixelOutcome::kEmbedded0;
  } else {
    pair[target] += step;
    out.outcome = PixelOutcome::kShifted;
  }
  return out;
}

std::optional<uint8_t> BackwardExtractPair(PixelPair& pair, SetSide side) {
  const PairOrder o = OrderOf(pair);
  // Work with the error magnitude; the sign convention differs per side.
  const int e = side == SetSide::kMin ? PairError(pair, side)
                                      : -PairError(pair, side);
  const int target = side == SetSide::kMin ? o.hi : o.lo;
  const int step = side == SetSide::kMin ? 1 : -1;
  if (e == 0) return std::nullopt;
  if (e <= 2) {
    const int b = e - 1;
    pair[target] -= step * b;
    return static_cast<uint8_t>(b);
  }
  pair[target] -= step;
  return std::nullopt;
}

BackwardEmbedResult BackwardEmbedImage(GrayImage& img,
                                       std::span<const uint8_t> payload,
                                       int reserved_rows, PixelTrace* trace) {
  BackwardSets sets = CollectSets(img, reserved_rows);
  const size_t n_blocks = sets.skip.min_bits.size();

  std::vector<PairRef> pairs;
  std::vector<uint8_t> demand;
  for (SetSide side : {SetSide::kMin, SetSide::kMax}) {
    const PixelSet& set = side == SetSide::kMin ? sets.min_set : sets.max_set;
    for (size_t i = 0; i + 1 < set.size(); i += 2) {
      pairs.push_back({side, i});
      demand.push_back(static_cast<uint8_t>(
          PairDemand({set[i].value, set[i + 1].value}, side)));
    }
  }

  // Process up to the pair where the payload runs out, or up to the last pair
  // with capacity when it never does.
  size_t stop = 0;
  if (!payload.empty()) {
    size_t total = 0;
    for (size_t j = 0; j < pairs.size(); ++j) {
      if (!demand[j]) continue;
      total += demand[j];
      stop = j + 1;
      if (total >= payload.size()) break;
    }
  }

  if (trace) {
    trace->assign(img.size(), PixelOutcome::kUntouched);
    for (size_t k = 0; k < n_blocks; ++k) {
      if (!sets.skip.min_bits[k] && !sets.skip.max_bits[k]) continue;
      const SortedBlock sb = SortBlock(BlockAt(img, k));
      if (sets.skip.min_bits[k]) {
        (*trace)[sb.origin.pixel(sb.perm[0], img.width)] =
            PixelOutcome::kSkipped;
      }
      if (sets.skip.max_bits[k]) {
        (*trace)[sb.origin.pixel(sb.perm[2], img.width)] =
            PixelOutcome::kSkipped;
      }
    }
  }

  BackwardEmbedResult r;
  BitCursor cursor(payload);
  for (size_t j = 0; j < stop; ++j) {
    const PairRef& ref = pairs[j];
    const PixelSet& set =
        ref.side == SetSide::kMin ? sets.min_set : sets.max_set;
    const SetEntry& a = set[ref.first];
    const SetEntry& b = set[ref.first + 1];
    PixelPair p{a.value, b.value};
    const PairOutcome o = BackwardEmbedPair(p, ref.side, cursor);
    img.pixels[a.pixel] = static_cast<uint8_t>(p[0]);
    img.pixels[b.pixel] = static_cast<uint8_t>(p[1]);
    if (trace && o.changed_index >= 0) {
      (*trace)[o.changed_index == 0 ? a.pixel : b.pixel] = o.outcome;
    }
    if (ref.side == SetSide::kMin) {
      ++r.min_pairs;
    } else {
      ++r.max_pairs;
    }
  }

  if (stop > 0) {
    const PairRef& last = pairs[stop - 1];
    const PixelSet& set =
        last.side == SetSide::kMin ? sets.min_set : sets.max_set;
    const size_t end_block = set[last.first + 1].block + 1;
    if (last.side == SetSide::kMin) {
      r.scan_min = end_block;
    } else {
      r.scan_min = n_blocks;
      r.scan_max = end_block;
    }
  }
  r.padding = cursor.padding();
  r.bwd_bits = cursor.position() + cursor.padding();
  r.skip = std::move(sets.skip);
  return r;
}

namespace {

// Walks one side of the block grid yielding members in scan order.
class MemberScanner {
 public:
  MemberScanner(const GrayImage& img, SetSide side, size_t n_blocks,
                const MembershipResolver& is_member)
      : img_(img), side_(side), n_(n_blocks), is_member_(is_member) {}

  bool Next(SetEntry* out) {
    while (next_ < n_) {
      const size_t k = next_++;
      const SortedBlock sb = SortBlock(BlockAt(img_, k));
      if (!is_member_(side_, k, SideGap(sb, side_))) continue;
      const int i = side_ == SetSide::kMin ? 0 : 2;
      *out = {sb.values[i], sb.origin.pixel(sb.perm[i], img_.width), k};
      return true;
    }
    return false;
  }

 private:
  const GrayImage& img_;
  SetSide side_;
  size_t n_;
  const MembershipResolver& is_member_;
  size_t next_ = 0;
};

}  // namespace

BitString BackwardExtractImage(GrayImage& img,
                               const MembershipResolver& is_member,
                               size_t bwd_bits, int reserved_rows) {
  const size_t n = BlockCount(img.width, img.height, reserved_rows);
  BitString bits;
  bits.reserve(bwd_bits);
  for (SetSide side : {SetSide::kMin, SetSide::kMax}) {
    MemberScanner scan(img, side, n, is_member);
    while (bits.size() < bwd_bits) {
      SetEntry a, b;
      if (!scan.Next(&a) || !scan.Next(&b)) break;
      PixelPair p{a.value, b.value};
      if (const auto bit = BackwardExtractPair(p, side)) bits.push_back(*bit);
      img.pixels[a.pixel] = static_cast<uint8_t>(p[0]);
      img.pixels[b.pixel] = static_cast<uint8_t>(p[1]);
    }
  }
  if (bits.size() != bwd_bits) {
    throw Error(ErrorCode::kContainerInvalid, "container inconsistent");
  }
  return bits;
}

BitString BackwardExtractImage(GrayImage& img, const SkipMap& skip,
                               size_t bwd_bits, int reserved_rows) {
  const size_t n = BlockCount(img.width, img.height, reserved_rows);
  if (skip.min_bits.size() != n || skip.max_bits.size() != n) {
    throw Error(ErrorCode::kContainerInvalid, "skip map size mismatch");
  }
  return BackwardExtractImage(
      img,
      [&](SetSide side, size_t k, int) { return skip.side(side)[k] == 0; },
      bwd_bits, reserved_rows);
}

size_t BackwardCapacity(const GrayImage& forward_img, int reserved_rows) {
  const BackwardSets sets = CollectSets(forward_img, reserved_rows);
  size_t total = 0;
  for (SetSide side : {SetSide::kMin, SetSide::kMax}) {
    const PixelSet& set = side == SetSide::kMin ? sets.min_set : sets.max_set;
    for (size_t i = 0; i + 1 < set.size(); i += 2) {
      total += PairDemand({set[i].value, set[i + 1].value}, side);
    }
  }
  return total;
}

}  // namespace dpvo
