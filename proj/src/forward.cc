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

#include "dpvo/forward.h"

#include <vector>

#include "dpvo/error.h"

namespace dpvo {

size_t GridPixelIndex(int width, size_t i) {
  const size_t grid_width = static_cast<size_t>(BlocksPerRow(width)) * 3;
  return (i / grid_width) * width + i % grid_width;
}

OverflowMap Preprocess(GrayImage& img, int reserved_rows) {
  const size_t n = BlockCount(img.width, img.height, reserved_rows) * 3;
  OverflowMap map;
  map.bits.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    uint8_t& p = img.pixels[GridPixelIndex(img.width, i)];
    if (p == 255) {
      p = 254;
      map.bits[i] = 1;
    } else if (p == 0) {
      p = 1;
      map.bits[i] = 1;
    }
  }
  return map;
}

void PostprocessRestore(GrayImage& img, const OverflowMap& map,
                        int reserved_rows) {
  const size_t n = BlockCount(img.width, img.height, reserved_rows) * 3;
  if (map.bits.size() != n) {
    throw Error(ErrorCode::kContainerInvalid, "corrupt overflow map");
  }
  for (size_t i = 0; i < n; ++i) {
    if (!map.bits[i]) continue;
    uint8_t& p = img.pixels[GridPixelIndex(img.width, i)];
    if (p == 254) {
      p = 255;
    } else if (p == 1) {
      p = 0;
    } else {
      throw Error(ErrorCode::kContainerInvalid, "corrupt overflow map");
    }
  }
}

ForwardErrors ComputeForwardErrors(const SortedBlock& sb) {
  return {sb.values[0] - sb.values[1], sb.values[2] - sb.values[1]};
}

int ForwardDemand(const SortedBlock& sb) {
  const ForwardErrors e = ComputeForwardErrors(sb);
  return (e.e_min == -1) + (e.e_max == 1);
}

ForwardBlockOutcome ForwardEmbedBlock(SortedBlock& sb, BitCursor& bits) {
  const ForwardErrors e = ComputeForwardErrors(sb);
  ForwardBlockOutcome out;

  int e_min = e.e_min;
  if (e_min == -1) {
    const int b = bits.Next();
    e_min -= b;
    ++out.consumed;
    out.min_side = b ? PixelOutcome::kEmbedded1 : PixelOutcome::kEmbedded0;
  } else if (e_min < -1) {
    e_min -= 1;
    out.min_side = PixelOutcome::kShifted;
  }

  int e_max = e.e_max;
  if (e_max == 1) {
    const int b = bits.Next();
    e_max += b;
    ++out.consumed;
    out.max_side = b ? PixelOutcome::kEmbedded1 : PixelOutcome::kEmbedded0;
  } else if (e_max > 1) {
    e_max += 1;
    out.max_side = PixelOutcome::kShifted;
  }

  sb.values[0] = sb.values[1] + e_min;
  sb.values[2] = sb.values[1] + e_max;
  return out;
}

BlockBits ForwardExtractBlock(SortedBlock& sb) {
  BlockBits out;
  const ForwardErrors e = ComputeForwardErrors(sb);
  if (e.e_min == -1 || e.e_min == -2) {
    const int b = -e.e_min - 1;
    out.bits[out.count++] = static_cast<uint8_t>(b);
    sb.values[0] += b;
  } else if (e.e_min < -2) {
    sb.values[0] += 1;
  }
  if (e.e_max == 1 || e.e_max == 2) {
    const int b = e.e_max - 1;
    out.bits[out.count++] = static_cast<uint8_t>(b);
    sb.values[2] -= b;
  } else if (e.e_max > 2) {
    sb.values[2] -= 1;
  }
  return out;
}

namespace {

// Index one past the last block to process for a payload of `length` bits,
// given per-block demands. See ForwardEmbedImage for the rule.
size_t StopAfter(const std::vector<uint8_t>& demand, size_t length) {
  if (length == 0) return 0;
  size_t total = 0;
  size_t last_with_capacity = 0;
  for (size_t k = 0; k < demand.size(); ++k) {
    if (demand[k] == 0) continue;
    total += demand[k];
    last_with_capacity = k + 1;
    if (total >= length) return k + 1;
  }
  return last_with_capacity;
}

}  // namespace

ForwardEmbedResult ForwardEmbedImage(GrayImage& img,
                                     std::span<const uint8_t> payload,
                                     int reserved_rows, PixelTrace* trace) {
  const size_t n = BlockCount(img.width, img.height, reserved_rows);
  std::vector<uint8_t> demand(n);
  for (size_t k = 0; k < n; ++k) {
    demand[k] = static_cast<uint8_t>(ForwardDemand(SortBlock(BlockAt(img, k))));
  }
  const size_t stop = StopAfter(demand, payload.size());

  if (trace) trace->assign(img.size(), PixelOutcome::kUntouched);
  BitCursor cursor(payload);
  for (size_t k = 0; k < stop; ++k) {
    SortedBlock sb = SortBlock(BlockAt(img, k));
    const ForwardBlockOutcome o = ForwardEmbedBlock(sb, cursor);
    WriteBack(sb, img);
    if (trace) {
      (*trace)[sb.origin.pixel(sb.perm[0], img.width)] = o.min_side;
      (*trace)[sb.origin.pixel(sb.perm[2], img.width)] = o.max_side;
    }
  }
  ForwardEmbedResult r;
  r.padding = cursor.padding();
  r.fwd_bits = cursor.position() + cursor.padding();
  r.blocks_processed = stop;
  return r;
}

BitString ForwardExtractImage(GrayImage& img, size_t fwd_bits,
                              int reserved_rows) {
  const size_t n = BlockCount(img.width, img.height, reserved_rows);
  BitString bits;
  bits.reserve(fwd_bits);
  for (size_t k = 0; k < n && bits.size() < fwd_bits; ++k) {
    SortedBlock sb = SortBlock(BlockAt(img, k));
    const BlockBits got = ForwardExtractBlock(sb);
    WriteBack(sb, img);
    bits.insert(bits.end(), got.bits.begin(), got.bits.begin() + got.count);
  }
  if (bits.size() != fwd_bits) {
    throw Error(ErrorCode::kContainerInvalid, "container inconsistent");
  }
  return bits;
}

size_t ForwardCapacity(const GrayImage& img, int reserved_rows) {
  const size_t n = BlockCount(img.width, img.height, reserved_rows);
  size_t total = 0;
  for (size_t k = 0; k < n; ++k) {
    total += ForwardDemand(SortBlock(BlockAt(img, k)));
  }
  return total;
}

}  // namespace dpvo
