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

// dpvo: embed, extract, verify and benchmark two-phase PVO data hiding.
//
// Exit codes: 0 success, 2 capacity exceeded, 3 I/O or format error,
// 4 invalid container.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpvo/bits.h"
#include "dpvo/error.h"
#include "dpvo/image.h"
#include "dpvo/li_baseline.h"
#include "dpvo/metrics.h"
#include "dpvo/pipeline.h"
#include "dpvo/prng.h"

namespace {

using dpvo::BitString;
using dpvo::ErrorCode;
using dpvo::GrayImage;

constexpr int kExitCapacity = 2;
constexpr int kExitIo = 3;
constexpr int kExitContainer = 4;

struct Config {
  std::vector<std::string> inputs;
  std::string out;
  std::string payload;
  std::optional<size_t> random_bits;
  uint64_t seed = 1;
  std::string scheme = "dpvo";
  int reserved_rows = 0;
  std::string csv;
  std::vector<size_t> sizes{0, 5000, 10000, 15000, 20000, 25000, 30000};
};

dpvo::Scheme PipelineScheme(const Config& c) {
  return c.scheme == "forward-only" ? dpvo::Scheme::kForwardOnly
                                    : dpvo::Scheme::kTwoPhase;
}

std::vector<uint8_t> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dpvo::Error(ErrorCode::kFormat, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void WriteFile(const std::string& path, const std::vector<uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw dpvo::Error(ErrorCode::kFormat, "cannot write " + path);
}

BitString LoadPayload(const Config& c) {
  if (c.random_bits) return dpvo::PrngPayload(c.seed, *c.random_bits);
  if (c.payload.empty()) {
    throw dpvo::Error(ErrorCode::kInvalidArgument,
                      "embed needs --payload or --random-bits");
  }
  return dpvo::BytesToBits(ReadFile(c.payload));
}

void Emit(const std::string& key, const std::string& value) {
  std::cout << key << '=' << value << '\n';
}
void Emit(const std::string& key, size_t value) { Emit(key, std::to_string(value)); }

void PrintReport(const Config& c, const dpvo::EmbedReport& r) {
  Emit("scheme", c.scheme);
  Emit("gross_bits", r.gross_bits);
  Emit("net_bits", std::to_string(r.net_bits));
  Emit("aux_bits", r.aux_bits);
  Emit("fwd_bits", r.fwd_bits);
  Emit("bwd_bits", r.bwd_bits);
  Emit("padding", r.padding);
  Emit("lm_clen", r.lm_clen);
  Emit("mou_clen", r.mou_clen);
  Emit("reserved_rows", static_cast<size_t>(r.reserved_rows));
  Emit("lsb_carry", r.lsb_carry == dpvo::LsbCarry::kInRegion ? "region" : "payload");
  Emit("psnr_db", dpvo::FormatPsnr(r.psnr_db));
}

int CmdEmbed(const Config& c) {
  const GrayImage cover = dpvo::ReadPgmFile(c.inputs.at(0));
  const BitString data = LoadPayload(c);
  if (c.scheme == "li") {
    const dpvo::LiEmbedding li = dpvo::LiEmbedImage(cover, data);
    if (li.bits - li.padding < data.size()) {
      throw dpvo::Error(ErrorCode::kCapacityExceeded, "capacity exceeded");
    }
    dpvo::WritePgmFile(li.stego, c.out);
    Emit("scheme", "li");
    Emit("gross_bits", data.size());
    Emit("padding", li.padding);
    Emit("psnr_db", dpvo::FormatPsnr(dpvo::Psnr(cover, li.stego)));
    return 0;
  }
  const dpvo::EncodeResult res =
      dpvo::Encode(cover, data, {PipelineScheme(c), c.reserved_rows});
  dpvo::WritePgmFile(res.stego, c.out);
  PrintReport(c, res.report);
  return 0;
}

int CmdExtract(const Config& c) {
  if (c.scheme == "li") {
    throw dpvo::Error(ErrorCode::kFormat, "the li scheme has no container");
  }
  const GrayImage stego = dpvo::ReadPgmFile(c.inputs.at(0));
  const dpvo::DecodeResult res = dpvo::Decode(stego, PipelineScheme(c));
  dpvo::WritePgmFile(res.cover, c.out);
  if (!c.payload.empty()) WriteFile(c.payload, dpvo::BitsToBytes(res.data));
  Emit("data_bits", res.data.size());
  Emit("fwd_bits", res.header.fwd_bits);
  Emit("bwd_bits", res.header.bwd_bits);
  Emit("reserved_rows", res.header.reserved_rows);
  return 0;
}

int CmdVerify(const Config& c) {
  const GrayImage cover = dpvo::ReadPgmFile(c.inputs.at(0));
  const BitString data = LoadPayload(c);
  bool ok = false;
  if (c.scheme == "li") {
    const dpvo::LiEmbedding li = dpvo::LiEmbedImage(cover, data);
    if (li.bits - li.padding < data.size()) {
      throw dpvo::Error(ErrorCode::kCapacityExceeded, "capacity exceeded");
    }
    BitString got;
    const GrayImage back = dpvo::LiExtractImage(li.stego, li.overflow, li.bits, &got);
    got.resize(data.size());
    ok = back == cover && got == data;
  } else {
    const dpvo::EncodeResult enc =
        dpvo::Encode(cover, data, {PipelineScheme(c), c.reserved_rows});
    const dpvo::DecodeResult dec = dpvo::Decode(enc.stego, PipelineScheme(c));
    ok = dec.cover == cover && dec.data == data;
    Emit("psnr_db", dpvo::FormatPsnr(enc.report.psnr_db));
  }
  Emit("bits", data.size());
  Emit("verified", ok ? "1" : "0");
  return ok ? 0 : 1;
}

int CmdCapacity(const Config& c) {
  const GrayImage cover = dpvo::ReadPgmFile(c.inputs.at(0));
  if (c.scheme == "li") {
    Emit("scheme", "li");
    Emit("li_bits", dpvo::LiCapacity(cover));
    return 0;
  }
  const dpvo::CapacityReport r = dpvo::AnalyzeCapacity(cover, c.seed, c.reserved_rows);
  Emit("reserved_rows", static_cast<size_t>(r.reserved_rows));
  Emit("grid_pixels", r.grid_pixels);
  Emit("forward_bits", r.fwd_bits);
  Emit("backward_min_bits", r.bwd_min_bits);
  Emit("backward_max_bits", r.bwd_max_bits);
  Emit("backward_bits", r.bwd_bits);
  Emit("overall_bits", r.gross_bits);
  Emit("psnr_forward_db", dpvo::FormatPsnr(r.psnr_fwd));
  Emit("psnr_two_phase_db", dpvo::FormatPsnr(r.psnr_two_phase));
  Emit("skip_map_bits", r.lm_bits);
  Emit("skip_map_clen", r.lm_clen);
  Emit("overflow_map_clen", r.mou_clen);
  const dpvo::EncodeOptions opts{PipelineScheme(c), c.reserved_rows};
  Emit("net_max_bits", dpvo::MaxPayload(cover, opts, c.seed));
  return 0;
}

// Writes to --csv when given, else stdout.
class CsvSink {
 public:
  explicit CsvSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw dpvo::Error(ErrorCode::kFormat, "cannot write " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string Stem(const std::string& path) {
  const size_t slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const size_t dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

int CmdStats(const Config& c) {
  CsvSink sink(c.csv);
  sink.out() << dpvo::PhaseStatsCsvHeader() << '\n';
  for (const std::string& path : c.inputs) {
    const GrayImage cover = dpvo::ReadPgmFile(path);
    const int r = c.reserved_rows ? c.reserved_rows : dpvo::HeaderRows(cover.width);
    const dpvo::CapacityReport cap = dpvo::AnalyzeCapacity(cover, c.seed, r);
    dpvo::EmbedTraces traces;
    const BitString data = dpvo::PrngPayload(c.seed, cap.gross_bits);
    const dpvo::PhaseResult ph =
        dpvo::EmbedPhases(cover, data, PipelineScheme(c), r, &traces);
    sink.out() << dpvo::PhaseStatsCsv(
        Stem(path), dpvo::ComputePhaseStats(cover, ph.image, traces, r));
  }
  return 0;
}

int CmdBench(const Config& c) {
  CsvSink sink(c.csv);
  sink.out() << dpvo::RdCsvHeader() << '\n';
  for (const std::string& path : c.inputs) {
    const GrayImage cover = dpvo::ReadPgmFile(path);
    for (const dpvo::RdRow& row : dpvo::RdSweep(cover, Stem(path), c.sizes, c.seed)) {
      sink.out() << dpvo::RdCsvRow(row) << '\n';
    }
  }
  return 0;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCapacityExceeded:
    case ErrorCode::kAuxOverflow:
      return kExitCapacity;
    case ErrorCode::kContainerInvalid:
    case ErrorCode::kCodecDesync:
      return kExitContainer;
    default:
      return kExitIo;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible data hiding with two-phase pixel-value ordering"};
  app.require_subcommand(1);
  Config c;

  const auto add_common = [&](CLI::App* sub, bool many_inputs) {
    if (many_inputs) {
      sub->add_option("--in", c.inputs, "Input PGM images")->required();
    } else {
      sub->add_option("--in", c.inputs, "Input PGM image")
          ->required()
          ->expected(1);
    }
    sub->add_option("--scheme", c.scheme, "dpvo, forward-only or li")
        ->check(CLI::IsMember({"dpvo", "forward-only", "li"}));
    sub->add_option("--reserved-rows", c.reserved_rows,
                    "Reserved region height; 0 chooses automatically")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", c.seed, "PRNG seed");
  };
  const auto add_payload = [&](CLI::App* sub) {
    auto* file = sub->add_option("--payload", c.payload, "Raw payload bytes");
    auto* bits = sub->add_option("--random-bits", c.random_bits,
                                 "Pseudo-random payload length in bits");
    file->excludes(bits);
  };

  CLI::App* embed = app.add_subcommand("embed", "Embed a payload");
  add_common(embed, false);
  add_payload(embed);
  embed->add_option("--out", c.out, "Stego PGM")->required();

  CLI::App* extract = app.add_subcommand("extract", "Recover cover and payload");
  add_common(extract, false);
  extract->add_option("--out", c.out, "Recovered cover PGM")->required();
  extract->add_option("--payload", c.payload, "Recovered payload file");

  CLI::App* verify = app.add_subcommand("verify", "Embed, extract and compare");
  add_common(verify, false);
  add_payload(verify);

  CLI::App* capacity = app.add_subcommand("capacity", "Report phase capacities");
  add_common(capacity, false);

  CLI::App* stats = app.add_subcommand("stats", "Per-phase pixel statistics CSV");
  add_common(stats, true);
  stats->add_option("--csv", c.csv, "CSV output path");

  CLI::App* bench = app.add_subcommand("bench", "Rate-distortion sweep CSV");
  add_common(bench, true);
  bench->add_option("--csv", c.csv, "CSV output path");
  bench->add_option("--sizes", c.sizes, "Payload sizes in bits")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*embed) return CmdEmbed(c);
    if (*extract) return CmdExtract(c);
    if (*verify) return CmdVerify(c);
    if (*capacity) return CmdCapacity(c);
    if (*stats) return CmdStats(c);
    if (*bench) return CmdBench(c);
  } catch (const dpvo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
