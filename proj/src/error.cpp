// Copyright 2026 The aoqmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aoqmap/error.hpp"

namespace aoqmap {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "invalid argument";
    case ErrorKind::kUnknownGate:
      return "unknown gate";
    case ErrorKind::kDimensionMismatch:
      return "dimension mismatch";
    case ErrorKind::kTemplateTooSmall:
      return "template too small";
    case ErrorKind::kNotEmbeddable:
      return "template not embeddable";
    case ErrorKind::kMissingCalibration:
      return "missing calibration";
    case ErrorKind::kTooLarge:
      return "problem too large";
    case ErrorKind::kParse:
      return "parse error";
    case ErrorKind::kInternal:
      return "internal error";
  }
  return "error";
}

}  // namespace aoqmap
