// Copyright 2026 The tsimg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tsimg/error.hpp"

namespace tsimg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConstantSeries: return "ConstantSeries";
    case ErrorCode::InvalidSegments: return "InvalidSegments";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidBinCount: return "InvalidBinCount";
    case ErrorCode::InvalidTargetSize: return "InvalidTargetSize";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::RateOutOfRange: return "RateOutOfRange";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::DivergenceDetected: return "DivergenceDetected";
    case ErrorCode::EmptyMask: return "EmptyMask";
    case ErrorCode::SingleClass: return "SingleClass";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::EmptyTestSet: return "EmptyTestSet";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::BadMagic: return "BadMagic";
  }
  return "Unknown";
}

}  // namespace tsimg
