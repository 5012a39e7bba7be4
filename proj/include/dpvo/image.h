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

// 8-bit grayscale rasters, binary PGM I/O, and the 1x3 block grid.
//
// The grid covers rows [0, height - reserved_rows) and columns
// [0, 3 * floor(width / 3)). The bottom `reserved_rows` rows hold auxiliary
// data in their LSBs; the width % 3 leftover columns are never touched.

#ifndef DPVO_IMAGE_H_
#define DPVO_IMAGE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "dpvo/bits.h"

namespace dpvo {

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;  // row-major, width * height

  GrayImage() = default;
  GrayImage(int w, int h, uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {}

  uint8_t& at(int row, int col) {
    return pixels[static_cast<size_t>(row) * width + col];
  }
  uint8_t at(int row, int col) const {
    return pixels[static_cast<size_t>(row) * width + col];
  }
  size_t size() const { return pixels.size(); }

  bool operator==(const GrayImage&) const = default;
};

GrayImage ReadPgm(std::span<const uint8_t> bytes);
std::vector<uint8_t> WritePgm(const GrayImage& img);

GrayImage ReadPgmFile(const std::filesystem::path& path);
void WritePgmFile(const GrayImage& img, const std::filesystem::path& path);

// Three horizontally adjacent pixels (row, col .. col + 2).
struct BlockRef {
  size_t index = 0;
  int row = 0;
  int col = 0;
  std::array<uint8_t, 3> values{};

  size_t pixel(int i, int width) const {
    return static_cast<size_t>(row) * width + col + i;
  }
};

// Blocks per grid row and total block count for the given geometry.
int BlocksPerRow(int width);
size_t BlockCount(int width, int height, int reserved_rows);

// Row-major enumeration of the block grid. Throws if reserved_rows is not in
// [0, height).
std::vector<BlockRef> PartitionBlocks(const GrayImage& img, int reserved_rows);

// Reads block k of the grid without materializing the whole partition.
BlockRef BlockAt(const GrayImage& img, size_t k);

// A block's values in ascending order. perm[i] is the in-block position of
// the i-th smallest value; equal values keep their original order.
struct SortedBlock {
  std::array<int, 3> values{};
  std::array<uint8_t, 3> perm{};
  BlockRef origin;
};

SortedBlock SortBlock(const BlockRef& b);

// Stores sb.values back to the positions they were sorted from.
void WriteBack(const SortedBlock& sb, GrayImage& img);

// LSBs of the reserved rows, bottom row first, each row left to right.
BitString ReadLsbRegion(const GrayImage& img, int reserved_rows);
void WriteLsbRegion(GrayImage& img, int reserved_rows,
                    std::span<const uint8_t> bits);

}  // namespace dpvo

#endif  // DPVO_IMAGE_H_
