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

// Encoder and decoder for the two-phase embedded-image container.
//
// Container layout, written into the LSBs of the bottom `reserved_rows` rows
// (bottom row first, left to right):
//
//   header (192 bits) | skip-map code | overflow-map code | [LSB code]
//
// The skip-map code covers only the entries a decoder cannot infer from the
// stego image; the overflow-map code covers only pixels whose value is 1 or
// 254 after preprocessing. The LSB code is present when the header says the
// original region LSBs are carried in the region itself.

#ifndef DPVO_PIPELINE_H_
#define DPVO_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "dpvo/backward.h"
#include "dpvo/bits.h"
#include "dpvo/container_header.h"
#include "dpvo/forward.h"
#include "dpvo/image.h"
#include "dpvo/trace.h"

namespace dpvo {

enum class Scheme { kTwoPhase, kForwardOnly };

struct EncodeOptions {
  Scheme scheme = Scheme::kTwoPhase;
  int reserved_rows = 0;  // 0 picks the smallest region that fits
};

struct EmbedReport {
  size_t gross_bits = 0;  // user bits embedded (= data_len)
  // gross minus the reserved-region LSB count; negative when the region
  // costs more than the payload.
  int64_t net_bits = 0;
  size_t aux_bits = 0;  // header, both map codes and the region LSB bits
  size_t fwd_bits = 0;
  size_t bwd_bits = 0;
  size_t padding = 0;
  size_t lm_clen = 0;
  size_t mou_clen = 0;
  size_t lsb_bits = 0;  // reserved-region LSB count
  size_t lsb_clen = 0;  // code length when carried in the region
  int reserved_rows = 0;
  LsbCarry lsb_carry = LsbCarry::kInPayload;
  double psnr_db = 0.0;
};

struct EmbedTraces {
  PixelTrace forward;
  PixelTrace backward;
};

// Preprocessing and both phases on the grid, no container.
struct PhaseResult {
  GrayImage image;
  OverflowMap overflow;
  BitString overflow_projection;  // map bits at OverflowCandidates
  ForwardEmbedResult forward;
  BackwardEmbedResult backward;
  size_t embedded = 0;  // payload bits placed, padding excluded
};

PhaseResult EmbedPhases(const GrayImage& cover,
                        std::span<const uint8_t> payload, Scheme scheme,
                        int reserved_rows, EmbedTraces* traces = nullptr);

// Rows needed for the header alone at this width.
int HeaderRows(int width);

struct EncodeResult {
  GrayImage stego;
  EmbedReport report;
};

EncodeResult Encode(const GrayImage& cover, std::span<const uint8_t> data,
                    const EncodeOptions& options = {},
                    EmbedTraces* traces = nullptr);

struct DecodeResult {
  GrayImage cover;
  BitString data;
  ContainerHeader header;
};

// kForwardOnly rejects containers with backward-phase bits.
DecodeResult Decode(const GrayImage& stego,
                    Scheme scheme = Scheme::kTwoPhase);

inline EncodeResult ForwardOnlyEncode(const GrayImage& cover,
                                      std::span<const uint8_t> data) {
  return Encode(cover, data, {Scheme::kForwardOnly, 0});
}
inline DecodeResult ForwardOnlyDecode(const GrayImage& stego) {
  return Decode(stego, Scheme::kForwardOnly);
}

// Largest data length Encode accepts, found by search over PRNG payloads.
size_t MaxPayload(const GrayImage& cover, const EncodeOptions& options = {},
                  uint64_t seed = 1);

// Phase capacities with an unbounded payload, no container.
struct CapacityReport {
  int reserved_rows = 0;
  size_t grid_pixels = 0;
  size_t fwd_bits = 0;
  size_t bwd_min_bits = 0;
  size_t bwd_max_bits = 0;
  size_t bwd_bits = 0;
  size_t gross_bits = 0;  // fwd_bits + bwd_bits
  double psnr_fwd = 0.0;        // forward phase filled to capacity
  double psnr_two_phase = 0.0;  // both phases filled to capacity
  size_t lm_bits = 0;   // full skip map, two bits per block
  size_t lm_clen = 0;   // its projected code at full capacity
  size_t mou_clen = 0;
};

CapacityReport AnalyzeCapacity(const GrayImage& cover, uint64_t seed = 1,
                               int reserved_rows = 0);

// Entries of the skip map a decoder must be told: blocks it scans whose
// current gap on that side is exactly 1. `img` is the image after backward
// embedding.
BitString ProjectSkipMap(const GrayImage& img, const BackwardEmbedResult& bwd);

// Grid pixels (in block order) whose value is 1 or 254.
std::vector<size_t> OverflowCandidates(const GrayImage& img, int reserved_rows);

}  // namespace dpvo

#endif  // DPVO_PIPELINE_H_
