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

#include "dpvo/metrics.h"

#include <cmath>
#include <cstdio>
#include <limits>

#include "dpvo/error.h"
#include "dpvo/forward.h"
#include "dpvo/prng.h"

namespace dpvo {

MseValue Mse(const GrayImage& a, const GrayImage& b) {
  if (a.width != b.width || a.height != b.height) {
    throw Error(ErrorCode::kInvalidArgument, "dimension mismatch");
  }
  MseValue m;
  m.count = a.size();
  for (size_t i = 0; i < a.size(); ++i) {
    const int64_t d = static_cast<int64_t>(a.pixels[i]) - b.pixels[i];
    m.sum_sq += static_cast<uint64_t>(d * d);
  }
  return m;
}

double Psnr(const GrayImage& a, const GrayImage& b) {
  const MseValue m = Mse(a, b);
  if (m.sum_sq == 0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 * static_cast<double>(m.count) /
                           static_cast<double>(m.sum_sq));
}

std::string FormatPsnr(double db, int digits) {
  if (std::isinf(db)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, db);
  return buf;
}

namespace {

void Tally(OutcomeCounts& c, PixelOutcome o) {
  switch (o) {
    case PixelOutcome::kEmbedded0:
      ++c.embedded_0;
      ++c.bits;
      break;
    case PixelOutcome::kEmbedded1:
      ++c.embedded_1;
      ++c.bits;
      break;
    case PixelOutcome::kShifted:
      ++c.shifted;
      break;
    default:
      ++c.unchanged;
  }
}

bool CarriesBit(PixelOutcome o) {
  return o == PixelOutcome::kEmbedded0 || o == PixelOutcome::kEmbedded1;
}

}  // namespace

PhaseStats ComputePhaseStats(const GrayImage& before, const GrayImage& after,
                             const EmbedTraces& traces, int reserved_rows) {
  if (before.width != after.width || before.height != after.height ||
      traces.forward.size() != before.size() ||
      traces.backward.size() != before.size()) {
    throw Error(ErrorCode::kInvalidArgument, "dimension mismatch");
  }
  PhaseStats s;
  s.region_pixels = BlockCount(before.width, before.height, reserved_rows) * 3;
  for (size_t i = 0; i < s.region_pixels; ++i) {
    const size_t p = GridPixelIndex(before.width, i);
    const PixelOutcome f = traces.forward[p];
    const PixelOutcome b = traces.backward[p];
    Tally(s.forward, f);
    Tally(s.backward, b);

    const bool same = before.pixels[p] == after.pixels[p];
    if (CarriesBit(b)) {
      Tally(s.overall, b);
    } else if (CarriesBit(f)) {
      Tally(s.overall, f);
    } else {
      Tally(s.overall, same ? PixelOutcome::kUntouched : PixelOutcome::kShifted);
    }
    if (same && (f == PixelOutcome::kShifted || f == PixelOutcome::kEmbedded1)) {
      ++s.overall.restored;
    }
  }
  // A pixel can carry one bit per phase.
  s.overall.bits = s.forward.bits + s.backward.bits;
  return s;
}

std::string PhaseStatsCsvHeader() {
  return "image,phase,region_pixels,unchanged,embedded_0,embedded_1,shifted,"
         "restored,bits,unchanged_rate,embedded_rate,shifted_rate";
}

std::string PhaseStatsCsv(const std::string& image, const PhaseStats& s) {
  std::string out;
  const auto row = [&](const char* phase, const OutcomeCounts& c) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%s,%s,%zu,%zu,%zu,%zu,%zu,%zu,%zu,%.4f,%.4f,%.4f\n",
                  image.c_str(), phase, s.region_pixels, c.unchanged,
                  c.embedded_0, c.embedded_1, c.shifted, c.restored, c.bits,
                  s.rate(c.unchanged), s.rate(c.embedded_0 + c.embedded_1),
                  s.rate(c.shifted));
    out += buf;
  };
  row("forward", s.forward);
  row("backward", s.backward);
  row("overall", s.overall);
  return out;
}

std::vector<RdRow> RdSweep(const GrayImage& img, const std::string& name,
                           std::span<const size_t> sizes, uint64_t seed) {
  const int r = HeaderRows(img.width);
  const auto phases = [&](const BitString& data,
                          Scheme scheme) -> std::optional<double> {
    const PhaseResult ph = EmbedPhases(img, data, scheme, r);
    if (ph.embedded < data.size()) return std::nullopt;
    return Psnr(img, ph.image);
  };
  std::vector<RdRow> rows;
  for (size_t n : sizes) {
    const BitString data = PrngPayload(seed, n);
    RdRow row;
    row.image = name;
    row.bits = n;
    row.psnr_fwd = phases(data, Scheme::kForwardOnly);
    row.psnr_two_phase = phases(data, Scheme::kTwoPhase);
    try {
      Encode(img, data);
      row.net = n;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCapacityExceeded &&
          e.code() != ErrorCode::kAuxOverflow) {
        throw;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool RdMonotone(std::span<const RdRow> rows) {
  for (auto pick : {&RdRow::psnr_fwd, &RdRow::psnr_two_phase}) {
    double prev = std::numeric_limits<double>::infinity();
    size_t prev_bits = 0;
    for (const RdRow& r : rows) {
      const std::optional<double>& db = r.*pick;
      if (!db) continue;
      if (r.bits < prev_bits || *db > prev) return false;
      prev = *db;
      prev_bits = r.bits;
    }
  }
  return true;
}

std::string RdCsvHeader() {
  return "image,bits,gross,net,psnr_fwd,psnr_two_phase";
}

std::string RdCsvRow(const RdRow& row) {
  const auto psnr = [](const std::optional<double>& db) {
    return db ? FormatPsnr(*db) : std::string("infeasible");
  };
  const std::string gross =
      row.psnr_two_phase ? std::to_string(row.bits) : "infeasible";
  const std::string net = row.net ? std::to_string(*row.net) : "infeasible";
  return row.image + "," + std::to_string(row.bits) + "," + gross + "," + net +
         "," + psnr(row.psnr_fwd) + "," + psnr(row.psnr_two_phase);
}

}  // namespace dpvo
