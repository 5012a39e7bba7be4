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

#ifndef DPVO_ERROR_H_
#define DPVO_ERROR_H_

#include <stdexcept>
#include <string>

namespace dpvo {

enum class ErrorCode {
  kFormat,             // malformed or unsupported image data
  kInvalidArgument,
  kCapacityExceeded,   // payload does not fit
  kAuxOverflow,        // side information does not fit the reserved region
  kContainerInvalid,   // not a container, or counts disagree with content
  kCodecDesync,        // arithmetic code inconsistent with its length
};

// Every failure in the library is reported through this exception type; the
// code lets front-ends map failures to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dpvo

#endif  // DPVO_ERROR_H_
