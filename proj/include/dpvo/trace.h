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

#ifndef DPVO_TRACE_H_
#define DPVO_TRACE_H_

#include <cstdint>
#include <vector>

namespace dpvo {

// What an embedding phase did to a single pixel.
enum class PixelOutcome : uint8_t {
  kUntouched = 0,
  kEmbedded0,  // carried a 0 bit, value kept
  kEmbedded1,  // carried a 1 bit, value moved by one
  kShifted,    // moved by one without carrying data
  kSkipped,    // backward phase only: excluded by the skip map
};

// One entry per image pixel (row-major), or empty when tracing is off.
using PixelTrace = std::vector<PixelOutcome>;

}  // namespace dpvo

#endif  // DPVO_TRACE_H_
