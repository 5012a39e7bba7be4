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

#ifndef DPVO_PRNG_H_
#define DPVO_PRNG_H_

#include <cstddef>
#include <cstdint>

#include "dpvo/bits.h"

namespace dpvo {

// Deterministic pseudo-random payload: s_0 = seed,
// s_{j+1} = 6364136223846793005 * s_j + 1442695040888963407 (mod 2^64),
// and bit i is the most significant bit of s_{i+1}.
BitString PrngPayload(uint64_t seed, size_t n);

}  // namespace dpvo

#endif  // DPVO_PRNG_H_
