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

#ifndef DPVO_METRICS_H_
#define DPVO_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpvo/image.h"
#include "dpvo/pipeline.h"

namespace dpvo {

struct MseValue {
  uint64_t sum_sq = 0;
  uint64_t count = 0;
  double value() const {
    return count ? static_cast<double>(sum_sq) / static_cast<double>(count) : 0.0;
  }
};

MseValue Mse(const GrayImage& a, const GrayImage& b);

// +infinity for identical images.
double Psnr(const GrayImage& a, const GrayImage& b);

// "inf" for infinity, otherwise fixed with `digits` decimals.
std::string FormatPsnr(double db, int digits = 4);

struct OutcomeCounts {
  size_t unchanged = 0;
  size_t embedded_0 = 0;
  size_t embedded_1 = 0;
  size_t shifted = 0;
  size_t restored = 0;  // overall only: changed by forward, equal to cover at the end
  size_t bits = 0;
};

struct PhaseStats {
  size_t region_pixels = 0;  // grid pixels; the denominator of every rate
  OutcomeCounts forward;
  OutcomeCounts backward;
  OutcomeCounts overall;

  double rate(size_t count) const {
    return region_pixels ? static_cast<double>(count) / region_pixels : 0.0;
  }
};

// `before` is the cover, `after` the stego.
PhaseStats ComputePhaseStats(const GrayImage& before, const GrayImage& after,
                             const EmbedTraces& traces, int reserved_rows);

std::string PhaseStatsCsvHeader();
std::string PhaseStatsCsv(const std::string& image, const PhaseStats& s);

// PSNR columns measure the embedding phases alone (no container), filled
// with exactly `bits` payload bits. `net` is set when a full container
// encode of the same payload succeeds.
struct RdRow {
  std::string image;
  size_t bits = 0;
  std::optional<double> psnr_fwd;
  std::optional<double> psnr_two_phase;
  std::optional<size_t> net;
};

std::vector<RdRow> RdSweep(const GrayImage& img, const std::string& name,
                           std::span<const size_t> sizes, uint64_t seed);

// True when neither PSNR column rises with payload over feasible rows.
bool RdMonotone(std::span<const RdRow> rows);

std::string RdCsvHeader();
std::string RdCsvRow(const RdRow& row);

}  // namespace dpvo

#endif  // DPVO_METRICS_H_
