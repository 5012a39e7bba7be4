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

#include "dpvo/pipeline.h"

#include <algorithm>
#include <optional>

#include "dpvo/arith_coder.h"
#include "dpvo/error.h"
#include "dpvo/metrics.h"
#include "dpvo/prng.h"

namespace dpvo {
namespace {

size_t CeilDiv(size_t a, size_t b) { return (a + b - 1) / b; }

struct Attempt {
  GrayImage stego;
  EmbedReport report;
  size_t container_bits = 0;
};

enum class AttemptStatus { kOk, kCapacity, kAux };

AttemptStatus TryEncode(const GrayImage& cover, std::span<const uint8_t> data,
                        Scheme scheme, int r, LsbCarry carry, Attempt* out,
                        EmbedTraces* traces) {
  const size_t region = static_cast<size_t>(r) * cover.width;
  const BitString lsbs = ReadLsbRegion(cover, r);

  BitString payload;
  if (carry == LsbCarry::kInPayload) payload = lsbs;
  payload.insert(payload.end(), data.begin(), data.end());

  PhaseResult ph = EmbedPhases(cover, payload, scheme, r, traces);
  if (ph.embedded < payload.size()) return AttemptStatus::kCapacity;
  GrayImage& img = ph.image;
  const ForwardEmbedResult& fwd = ph.forward;
  const BackwardEmbedResult& bwd = ph.backward;

  const BitString mou_code = ArithEncode(ph.overflow_projection);

  BitString lsb_code;
  if (carry == LsbCarry::kInRegion) lsb_code = ArithEncode(lsbs);

  const BitString lm_code =
      bwd.bwd_bits ? ArithEncode(ProjectSkipMap(img, bwd)) : BitString{};
  const size_t total =
      kHeaderBits + lm_code.size() + mou_code.size() + lsb_code.size();
  out->container_bits = total;
  if (total > region || lm_code.size() > kMaxMapCodeBits ||
      mou_code.size() > kMaxMapCodeBits) {
    return AttemptStatus::kAux;
  }

  ContainerHeader h;
  h.reserved_rows = static_cast<uint16_t>(r);
  h.lsb_carry = carry;
  h.data_len = static_cast<uint32_t>(data.size());
  h.fwd_bits = static_cast<uint32_t>(fwd.fwd_bits);
  h.bwd_bits = static_cast<uint32_t>(bwd.bwd_bits);
  h.lm_clen = static_cast<uint32_t>(lm_code.size());
  h.mou_clen = static_cast<uint32_t>(mou_code.size());
  BitString container = PackHeader(h);
  container.insert(container.end(), lm_code.begin(), lm_code.end());
  container.insert(container.end(), mou_code.begin(), mou_code.end());
  container.insert(container.end(), lsb_code.begin(), lsb_code.end());
  WriteLsbRegion(img, r, container);

  EmbedReport& rep = out->report;
  rep.gross_bits = data.size();
  rep.net_bits = static_cast<int64_t>(data.size()) - static_cast<int64_t>(region);
  rep.lsb_bits = region;
  rep.lsb_clen = lsb_code.size();
  rep.aux_bits = kHeaderBits + lm_code.size() + mou_code.size() +
                 (carry == LsbCarry::kInRegion ? lsb_code.size() : region);
  rep.fwd_bits = fwd.fwd_bits;
  rep.bwd_bits = bwd.bwd_bits;
  rep.padding = fwd.padding + bwd.padding;
  rep.lm_clen = lm_code.size();
  rep.mou_clen = mou_code.size();
  rep.reserved_rows = r;
  rep.lsb_carry = carry;
  rep.psnr_db = Psnr(cover, img);
  out->stego = std::move(img);
  return AttemptStatus::kOk;
}

void CheckDataLength(size_t n) {
  if (n > 0xFFFFFFFFu) {
    throw Error(ErrorCode::kCapacityExceeded, "capacity exceeded");
  }
}

}  // namespace

int HeaderRows(int width) {
  return static_cast<int>(CeilDiv(kHeaderBits, static_cast<size_t>(width)));
}

PhaseResult EmbedPhases(const GrayImage& cover,
                        std::span<const uint8_t> payload, Scheme scheme,
                        int reserved_rows, EmbedTraces* traces) {
  PhaseResult ph;
  ph.image = cover;
  ph.overflow = Preprocess(ph.image, reserved_rows);
  for (size_t i : OverflowCandidates(ph.image, reserved_rows)) {
    ph.overflow_projection.push_back(ph.overflow.bits[i]);
  }
  PixelTrace* ftrace = traces ? &traces->forward : nullptr;
  PixelTrace* btrace = traces ? &traces->backward : nullptr;
  ph.forward = ForwardEmbedImage(ph.image, payload, reserved_rows, ftrace);
  const size_t fwd_used = ph.forward.fwd_bits - ph.forward.padding;
  const auto rest = payload.subspan(fwd_used);
  if (scheme == Scheme::kTwoPhase && !rest.empty()) {
    ph.backward = BackwardEmbedImage(ph.image, rest, reserved_rows, btrace);
  } else if (btrace) {
    btrace->assign(ph.image.size(), PixelOutcome::kUntouched);
  }
  ph.embedded = fwd_used + ph.backward.bwd_bits - ph.backward.padding;
  return ph;
}

std::vector<size_t> OverflowCandidates(const GrayImage& img, int reserved_rows) {
  const size_t n = BlockCount(img.width, img.height, reserved_rows) * 3;
  std::vector<size_t> out;
  for (size_t i = 0; i < n; ++i) {
    const uint8_t p = img.pixels[GridPixelIndex(img.width, i)];
    if (p == 1 || p == 254) out.push_back(i);
  }
  return out;
}

BitString ProjectSkipMap(const GrayImage& img, const BackwardEmbedResult& bwd) {
  BitString out;
  for (SetSide side : {SetSide::kMin, SetSide::kMax}) {
    const size_t scan = side == SetSide::kMin ? bwd.scan_min : bwd.scan_max;
    const BitString& skip = bwd.skip.side(side);
    for (size_t k = 0; k < scan; ++k) {
      if (SideGap(SortBlock(BlockAt(img, k)), side) == 1) out.push_back(skip[k]);
    }
  }
  return out;
}

EncodeResult Encode(const GrayImage& cover, std::span<const uint8_t> data,
                    const EncodeOptions& options, EmbedTraces* traces) {
  if (cover.width < 1 || cover.height < 2) {
    throw Error(ErrorCode::kInvalidArgument, "image too small");
  }
  CheckDataLength(data.size());
  const int max_rows = std::min(cover.height - 1, kMaxReservedRows);
  int r = options.reserved_rows;
  int last = r;
  if (r == 0) {
    r = HeaderRows(cover.width);
    last = std::max<int>(cover.height / 4,
                         static_cast<int>(CeilDiv(2 * kHeaderBits, cover.width)));
    last = std::min(last, max_rows);
  } else if (r < 1 || r > max_rows) {
    throw Error(ErrorCode::kInvalidArgument, "reserved rows out of range");
  }

  bool capacity_hit = false;
  while (r <= last) {
    Attempt a;
    size_t need = 0;
    bool data_fits = true;
    capacity_hit = false;
    for (LsbCarry carry : {LsbCarry::kInRegion, LsbCarry::kInPayload}) {
      const AttemptStatus s =
          TryEncode(cover, data, options.scheme, r, carry, &a, traces);
      if (s == AttemptStatus::kOk) return {std::move(a.stego), a.report};
      if (s == AttemptStatus::kAux) {
        need = need ? std::min(need, a.container_bits) : a.container_bits;
      } else {
        capacity_hit = true;
        if (carry == LsbCarry::kInRegion) data_fits = false;
      }
    }
    // More rows only shrink the grid, so data that overflowed it on its own
    // never fits later.
    if (!data_fits) break;
    if (need == 0) need = static_cast<size_t>(r + 1) * cover.width;
    r = std::max<int>(r + 1, static_cast<int>(CeilDiv(need, cover.width)));
  }
  if (capacity_hit) throw Error(ErrorCode::kCapacityExceeded, "capacity exceeded");
  throw Error(ErrorCode::kAuxOverflow, "aux overflow");
}

DecodeResult Decode(const GrayImage& stego, Scheme scheme) {
  const int header_rows = HeaderRows(std::max(stego.width, 1));
  if (stego.width < 1 || header_rows >= stego.height) {
    throw Error(ErrorCode::kContainerInvalid, "not a dPVO container");
  }
  DecodeResult out;
  ContainerHeader& h = out.header;
  h = UnpackHeader(ReadLsbRegion(stego, header_rows));
  const int r = h.reserved_rows;
  const size_t region = static_cast<size_t>(r) * stego.width;
  if (r < header_rows || r >= stego.height ||
      kHeaderBits + static_cast<size_t>(h.lm_clen) + h.mou_clen > region) {
    throw Error(ErrorCode::kContainerInvalid, "container inconsistent");
  }
  if (scheme == Scheme::kForwardOnly && h.bwd_bits != 0) {
    throw Error(ErrorCode::kContainerInvalid, "not a forward-only container");
  }
  if (h.bwd_bits == 0 && h.lm_clen != 0) {
    throw Error(ErrorCode::kContainerInvalid, "container inconsistent");
  }

  const BitString region_bits = ReadLsbRegion(stego, r);
  const auto code_at = [&](size_t pos, size_t len) {
    return std::span<const uint8_t>(region_bits).subspan(pos, len);
  };
  const auto lm_code = code_at(kHeaderBits, h.lm_clen);
  const auto mou_code = code_at(kHeaderBits + h.lm_clen, h.mou_clen);
  const size_t rest_pos = kHeaderBits + h.lm_clen + h.mou_clen;
  const auto rest_code = code_at(rest_pos, region - rest_pos);

  GrayImage img = stego;
  BitString tail;
  if (h.bwd_bits > 0) {
    ArithDecoder dec(lm_code);
    BitString lm;
    const MembershipResolver resolve = [&](SetSide, size_t, int gap) {
      if (gap == 0) return false;
      if (gap >= 2) return true;
      lm.push_back(static_cast<uint8_t>(dec.Decode()));
      return lm.back() == 0;
    };
    tail = BackwardExtractImage(img, resolve, h.bwd_bits, r);
    if (ArithEncode(lm) != BitString(lm_code.begin(), lm_code.end())) {
      throw Error(ErrorCode::kCodecDesync, "codec desync");
    }
  }
  BitString payload = ForwardExtractImage(img, h.fwd_bits, r);
  payload.insert(payload.end(), tail.begin(), tail.end());

  size_t data_pos = 0;
  BitString lsbs;
  if (h.lsb_carry == LsbCarry::kInPayload) {
    if (payload.size() < region) {
      throw Error(ErrorCode::kContainerInvalid, "container inconsistent");
    }
    lsbs.assign(payload.begin(), payload.begin() + region);
    data_pos = region;
  } else {
    size_t consumed = 0;
    lsbs = ArithDecodePrefix(rest_code, region, &consumed);
  }
  if (payload.size() - data_pos < h.data_len) {
    throw Error(ErrorCode::kContainerInvalid, "container inconsistent");
  }
  WriteLsbRegion(img, r, lsbs);

  const std::vector<size_t> candidates = OverflowCandidates(img, r);
  const BitString mou = ArithDecode(mou_code, candidates.size());
  OverflowMap overflow;
  overflow.bits.assign(BlockCount(img.width, img.height, r) * 3, 0);
  for (size_t j = 0; j < candidates.size(); ++j) {
    overflow.bits[candidates[j]] = mou[j];
  }
  PostprocessRestore(img, overflow, r);

  out.cover = std::move(img);
  out.data.assign(payload.begin() + data_pos,
                  payload.begin() + data_pos + h.data_len);
  return out;
}

size_t MaxPayload(const GrayImage& cover, const EncodeOptions& options,
                  uint64_t seed) {
  const auto feasible = [&](size_t n) {
    try {
      Encode(cover, PrngPayload(seed, n), options);
      return true;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kCapacityExceeded ||
          e.code() == ErrorCode::kAuxOverflow) {
        return false;
      }
      throw;
    }
  };
  if (!feasible(0)) return 0;
  const int r = options.reserved_rows ? options.reserved_rows
                                      : HeaderRows(cover.width);
  const CapacityReport cap = AnalyzeCapacity(cover, seed, r);
  size_t lo = 0;
  size_t hi = (options.scheme == Scheme::kTwoPhase ? cap.gross_bits
                                                   : cap.fwd_bits) + 1;
  // Invariant: lo feasible, hi not.
  while (hi - lo > 1) {
    const size_t mid = lo + (hi - lo) / 2;
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

CapacityReport AnalyzeCapacity(const GrayImage& cover, uint64_t seed,
                               int reserved_rows) {
  const int r = reserved_rows ? reserved_rows : HeaderRows(cover.width);
  CapacityReport rep;
  rep.reserved_rows = r;
  rep.grid_pixels = BlockCount(cover.width, cover.height, r) * 3;

  GrayImage fwd_img = cover;
  const OverflowMap overflow = Preprocess(fwd_img, r);
  rep.fwd_bits = ForwardCapacity(fwd_img, r);
  BitString mou;
  for (size_t i : OverflowCandidates(fwd_img, r)) mou.push_back(overflow.bits[i]);
  rep.mou_clen = ArithEncode(mou).size();

  const BitString fwd_payload = PrngPayload(seed, rep.fwd_bits);
  ForwardEmbedImage(fwd_img, fwd_payload, r);
  rep.psnr_fwd = Psnr(cover, fwd_img);

  const BackwardSets sets = CollectSets(fwd_img, r);
  for (SetSide side : {SetSide::kMin, SetSide::kMax}) {
    const PixelSet& set = side == SetSide::kMin ? sets.min_set : sets.max_set;
    size_t& bits = side == SetSide::kMin ? rep.bwd_min_bits : rep.bwd_max_bits;
    for (size_t i = 0; i + 1 < set.size(); i += 2) {
      bits += PairDemand({set[i].value, set[i + 1].value}, side);
    }
  }
  rep.bwd_bits = rep.bwd_min_bits + rep.bwd_max_bits;
  rep.gross_bits = rep.fwd_bits + rep.bwd_bits;
  rep.lm_bits = 2 * sets.skip.min_bits.size();

  const BitString bwd_payload = PrngPayload(seed + 1, rep.bwd_bits);
  const BackwardEmbedResult bwd = BackwardEmbedImage(fwd_img, bwd_payload, r);
  rep.lm_clen = bwd.bwd_bits ? ArithEncode(ProjectSkipMap(fwd_img, bwd)).size() : 0;
  rep.psnr_two_phase = Psnr(cover, fwd_img);
  return rep;
}

}  // namespace dpvo
