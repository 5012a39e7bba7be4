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

#include "dpvo/image.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "dpvo/error.h"

namespace dpvo {
namespace {

// Minimal PNM tokenizer: skips whitespace and '#' comments.
class HeaderScanner {
 public:
  explicit HeaderScanner(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  long ReadNumber(const char* what) {
    SkipSpaceAndComments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw Error(ErrorCode::kFormat,
                  std::string("malformed PGM header: expected ") + what);
    }
    long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_++] - '0');
      if (v > (1L << 30)) {
        throw Error(ErrorCode::kFormat, "malformed PGM header: value too big");
      }
    }
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  size_t EndOfHeader() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw Error(ErrorCode::kFormat, "malformed PGM header");
    }
    return pos_ + 1;
  }

  size_t pos_ = 0;

 private:
  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const uint8_t> bytes_;
};

}  // namespace

GrayImage ReadPgm(std::span<const uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw Error(ErrorCode::kFormat, "not a binary PGM (P5)");
  }
  HeaderScanner scan(bytes);
  scan.pos_ = 2;
  const long width = scan.ReadNumber("width");
  const long height = scan.ReadNumber("height");
  const long maxval = scan.ReadNumber("maxval");
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kFormat, "malformed PGM header: empty image");
  }
  if (maxval != 255) throw Error(ErrorCode::kFormat, "unsupported bit depth");
  const size_t start = scan.EndOfHeader();
  const size_t n = static_cast<size_t>(width) * static_cast<size_t>(height);
  if (bytes.size() - start < n) {
    throw Error(ErrorCode::kFormat, "truncated PGM pixel data");
  }
  GrayImage img(static_cast<int>(width), static_cast<int>(height));
  std::copy_n(bytes.begin() + start, n, img.pixels.begin());
  return img;
}

std::vector<uint8_t> WritePgm(const GrayImage& img) {
  const std::string header = "P5\n" + std::to_string(img.width) + " " +
                             std::to_string(img.height) + "\n255\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

GrayImage ReadPgmFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFormat, "cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return ReadPgm(bytes);
}

void WritePgmFile(const GrayImage& img, const std::filesystem::path& path) {
  const std::vector<uint8_t> bytes = WritePgm(img);
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kFormat, "cannot write " + path.string());
}

int BlocksPerRow(int width) { return width / 3; }

size_t BlockCount(int width, int height, int reserved_rows) {
  if (reserved_rows < 0 || reserved_rows >= height) {
    throw Error(ErrorCode::kInvalidArgument,
                "reserved_rows must be in [0, height)");
  }
  return static_cast<size_t>(BlocksPerRow(width)) * (height - reserved_rows);
}

BlockRef BlockAt(const GrayImage& img, size_t k) {
  const size_t per_row = BlocksPerRow(img.width);
  BlockRef b;
  b.index = k;
  b.row = static_cast<int>(k / per_row);
  b.col = static_cast<int>(k % per_row) * 3;
  for (int i = 0; i < 3; ++i) b.values[i] = img.at(b.row, b.col + i);
  return b;
}

std::vector<BlockRef> PartitionBlocks(const GrayImage& img,
                                      int reserved_rows) {
  const size_t n = BlockCount(img.width, img.height, reserved_rows);
  std::vector<BlockRef> blocks;
  blocks.reserve(n);
  for (size_t k = 0; k < n; ++k) blocks.push_back(BlockAt(img, k));
  return blocks;
}

SortedBlock SortBlock(const BlockRef& b) {
  SortedBlock sb;
  sb.origin = b;
  sb.perm = {0, 1, 2};
  std::stable_sort(sb.perm.begin(), sb.perm.end(),
                   [&](uint8_t i, uint8_t j) {
                     return b.values[i] < b.values[j];
                   });
  for (int i = 0; i < 3; ++i) sb.values[i] = b.values[sb.perm[i]];
  return sb;
}

void WriteBack(const SortedBlock& sb, GrayImage& img) {
  for (int i = 0; i < 3; ++i) {
    img.at(sb.origin.row, sb.origin.col + sb.perm[i]) =
        static_cast<uint8_t>(sb.values[i]);
  }
}

BitString ReadLsbRegion(const GrayImage& img, int reserved_rows) {
  BitString bits;
  bits.reserve(static_cast<size_t>(reserved_rows) * img.width);
  for (int r = 0; r < reserved_rows; ++r) {
    const int row = img.height - 1 - r;
    for (int c = 0; c < img.width; ++c) bits.push_back(img.at(row, c) & 1u);
  }
  return bits;
}

void WriteLsbRegion(GrayImage& img, int reserved_rows,
                    std::span<const uint8_t> bits) {
  if (reserved_rows < 0 || reserved_rows > img.height ||
      bits.size() > static_cast<size_t>(reserved_rows) * img.width) {
    throw Error(ErrorCode::kInvalidArgument, "bits too long for LSB region");
  }
  for (size_t i = 0; i < bits.size(); ++i) {
    const int row = img.height - 1 - static_cast<int>(i / img.width);
    const int col = static_cast<int>(i % img.width);
    uint8_t& p = img.at(row, col);
    p = static_cast<uint8_t>((p & 0xFEu) | (bits[i] & 1u));
  }
}

}  // namespace dpvo
