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

#ifndef DPVO_TESTS_TEST_UTIL_H_
#define DPVO_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <random>
#include <string>

#include "dpvo/image.h"

namespace dpvo::testing {

inline std::filesystem::path CorpusDir() {
  const char* env = std::getenv("DPVO_CORPUS_DIR");
  return env && *env ? env : "/root/corpus";
}

inline std::optional<GrayImage> LoadCorpusImage(const std::string& name) {
  const auto path = CorpusDir() / name;
  if (!std::filesystem::exists(path)) return std::nullopt;
  return ReadPgmFile(path);
}

inline GrayImage RandomImage(int w, int h, std::mt19937_64& rng, int lo = 0,
                             int hi = 255) {
  GrayImage img(w, h);
  std::uniform_int_distribution<int> d(lo, hi);
  for (auto& p : img.pixels) p = static_cast<uint8_t>(d(rng));
  return img;
}

// Diagonal ramp with unit steps, wrapping at 256.
inline GrayImage GradientImage(int w, int h) {
  GrayImage img(w, h);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) img.at(r, c) = static_cast<uint8_t>((r + c) % 256);
  }
  return img;
}

// Smooth content: a random walk along each row with small steps.
inline GrayImage SmoothImage(int w, int h, std::mt19937_64& rng) {
  GrayImage img(w, h);
  std::uniform_int_distribution<int> step(-2, 2);
  std::uniform_int_distribution<int> start(40, 215);
  for (int r = 0; r < h; ++r) {
    int v = start(rng);
    for (int c = 0; c < w; ++c) {
      v = std::clamp(v + step(rng), 0, 255);
      img.at(r, c) = static_cast<uint8_t>(v);
    }
  }
  return img;
}

}  // namespace dpvo::testing

#endif  // DPVO_TESTS_TEST_UTIL_H_
