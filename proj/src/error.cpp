// Copyright 2026 The qgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgeom/error.hpp"

namespace qgeom {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotPsd: return "NotPsd";
    case ErrorCode::kTraceNotOne: return "TraceNotOne";
    case ErrorCode::kInvalidSpectrum: return "InvalidSpectrum";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kInvalidDimension: return "InvalidDimension";
    case ErrorCode::kInvalidExponent: return "InvalidExponent";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNotDiscriminable: return "NotDiscriminable";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kSetTooLarge: return "SetTooLarge";
    case ErrorCode::kUnsupportedMetric: return "UnsupportedMetric";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace qgeom
