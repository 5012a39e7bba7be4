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

#include "dpvo/li_baseline.h"

#include <algorithm>
#include <numeric>

#include "dpvo/error.h"

namespace dpvo {

LiBlock MakeLiBlock(std::span<const int> pixels) {
  LiBlock blk;
  blk.perm.resize(pixels.size());
  std::iota(blk.perm.begin(), blk.perm.end(), 0);
  std::stable_sort(blk.perm.begin(), blk.perm.end(),
                   [&](uint8_t i, uint8_t j) { return pixels[i] < pixels[j]; });
  for (uint8_t i : blk.perm) blk.values.push_back(pixels[i]);
  return blk;
}

std::vector<int> UnsortLiBlock(const LiBlock& blk) {
  std::vector<int> out(blk.values.size());
  for (size_t i = 0; i < blk.values.size(); ++i) out[blk.perm[i]] = blk.values[i];
  return out;
}

int LiEmbedBlock(LiBlock& blk, BitCursor& bits) {
  const size_t n = blk.values.size();
  const int e = blk.values[n - 1] - blk.values[n - 2];
  if (e == 1) {
    blk.values[n - 1] += bits.Next();
    return 1;
  }
  if (e > 1) blk.values[n - 1] += 1;
  return 0;
}

std::optional<uint8_t> LiExtractBlock(LiBlock& blk) {
  const size_t n = blk.values.size();
  const int e = blk.values[n - 1] - blk.values[n - 2];
  if (e == 1 || e == 2) {
    const int b = e - 1;
    blk.values[n - 1] -= b;
    return static_cast<uint8_t>(b);
  }
  if (e > 2) blk.values[n - 1] -= 1;
  return std::nullopt;
}

namespace {

size_t LiBlocks(const GrayImage& img, int block_size) {
  if (block_size < 2) throw Error(ErrorCode::kInvalidArgument, "block size < 2");
  return static_cast<size_t>(img.width / block_size) * img.height;
}

std::vector<int> ReadLi(const GrayImage& img, size_t k, int n) {
  const size_t per_row = img.width / n;
  const int row = static_cast<int>(k / per_row);
  const int col = static_cast<int>(k % per_row) * n;
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = img.at(row, col + i);
  return v;
}

void WriteLi(GrayImage& img, size_t k, int n, const std::vector<int>& v) {
  const size_t per_row = img.width / n;
  const int row = static_cast<int>(k / per_row);
  const int col = static_cast<int>(k % per_row) * n;
  for (int i = 0; i < n; ++i) img.at(row, col + i) = static_cast<uint8_t>(v[i]);
}

}  // namespace

LiEmbedding LiEmbedImage(const GrayImage& cover,
                         std::span<const uint8_t> payload, int block_size) {
  const size_t n_blocks = LiBlocks(cover, block_size);
  LiEmbedding out;
  out.stego = cover;
  const size_t grid_width = static_cast<size_t>(cover.width / block_size) * block_size;
  out.overflow.assign(grid_width * cover.height, 0);
  for (size_t i = 0; i < out.overflow.size(); ++i) {
    uint8_t& p = out.stego.pixels[(i / grid_width) * cover.width + i % grid_width];
    if (p == 255) {
      p = 254;
      out.overflow[i] = 1;
    }
  }
  std::vector<uint8_t> demand(n_blocks);
  for (size_t k = 0; k < n_blocks; ++k) {
    const LiBlock blk = MakeLiBlock(ReadLi(out.stego, k, block_size));
    demand[k] = blk.values[block_size - 1] - blk.values[block_size - 2] == 1;
  }
  size_t stop = 0;
  if (!payload.empty()) {
    size_t total = 0;
    for (size_t k = 0; k < n_blocks; ++k) {
      if (!demand[k]) continue;
      total += demand[k];
      stop = k + 1;
      if (total >= payload.size()) break;
    }
  }
  BitCursor cursor(payload);
  for (size_t k = 0; k < stop; ++k) {
    LiBlock blk = MakeLiBlock(ReadLi(out.stego, k, block_size));
    LiEmbedBlock(blk, cursor);
    WriteLi(out.stego, k, block_size, UnsortLiBlock(blk));
  }
  out.padding = cursor.padding();
  out.bits = cursor.position() + cursor.padding();
  return out;
}

GrayImage LiExtractImage(const GrayImage& stego, const BitString& overflow,
                         size_t bits, BitString* payload, int block_size) {
  const size_t n_blocks = LiBlocks(stego, block_size);
  GrayImage img = stego;
  BitString got;
  for (size_t k = 0; k < n_blocks && got.size() < bits; ++k) {
    LiBlock blk = MakeLiBlock(ReadLi(img, k, block_size));
    if (const auto b = LiExtractBlock(blk)) got.push_back(*b);
    WriteLi(img, k, block_size, UnsortLiBlock(blk));
  }
  if (got.size() != bits) {
    throw Error(ErrorCode::kContainerInvalid, "container inconsistent");
  }
  const size_t grid_width = static_cast<size_t>(stego.width / block_size) * block_size;
  if (overflow.size() != grid_width * stego.height) {
    throw Error(ErrorCode::kContainerInvalid, "corrupt overflow map");
  }
  for (size_t i = 0; i < overflow.size(); ++i) {
    if (!overflow[i]) continue;
    uint8_t& p = img.pixels[(i / grid_width) * stego.width + i % grid_width];
    if (p != 254) throw Error(ErrorCode::kContainerInvalid, "corrupt overflow map");
    p = 255;
  }
  if (payload) *payload = std::move(got);
  return img;
}

size_t LiCapacity(const GrayImage& cover, int block_size) {
  const size_t n_blocks = LiBlocks(cover, block_size);
  size_t cap = 0;
  for (size_t k = 0; k < n_blocks; ++k) {
    std::vector<int> v = ReadLi(cover, k, block_size);
    for (int& x : v) x = std::min(x, 254);
    const LiBlock blk = MakeLiBlock(v);
    cap += blk.values[block_size - 1] - blk.values[block_size - 2] == 1;
  }
  return cap;
}

}  // namespace dpvo
