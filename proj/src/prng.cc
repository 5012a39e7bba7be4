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

#include "dpvo/prng.h"

namespace dpvo {

BitString PrngPayload(uint64_t seed, size_t n) {
  BitString bits(n);
  uint64_t s = seed;
  for (size_t i = 0; i < n; ++i) {
    s = 6364136223846793005ull * s + 1442695040888963407ull;
    bits[i] = static_cast<uint8_t>(s >> 63);
  }
  return bits;
}

}  // namespace dpvo
