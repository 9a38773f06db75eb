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

#include "tsimg/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsimg/error.hpp"

namespace tsimg {

std::vector<double> diagonal(const FieldMatrix& field) {
  std::vector<double> out(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) out[i] = field(i, i);
  return out;
}

ScaledSeries inverse_gasf_diagonal(std::span<const double> diag) {
  ScaledSeries out;
  out.mode = RescaleMode::Unit;
  out.origin = {0.0, 1.0};
  out.values.reserve(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double g = diag[i];
    if (!(g >= -1.0 - kDiagonalClampTolerance && g <= 1.0 + kDiagonalClampTolerance)) {
      throw Error(ErrorCode::OutOfRange, "diagonal entry " + std::to_string(g) + " at index " +
                                             std::to_string(i) + " is outside [-1, 1]");
    }
    out.values.push_back(std::sqrt((std::clamp(g, -1.0, 1.0) + 1.0) / 2.0));
  }
  return out;
}

ScaledSeries reconstruct_series(const FieldMatrix& gasf_field) {
  if (gasf_field.kind() != FieldKind::Gasf) {
    throw Error(ErrorCode::InvalidArgument, "reconstruction needs a GASF field");
  }
  if (gasf_field.rescale_mode() != RescaleMode::Unit) {
    throw Error(ErrorCode::InvalidArgument,
                "only Unit-mode GASF is invertible; the [-1, 1] map loses the sign of x");
  }
  return inverse_gasf_diagonal(diagonal(gasf_field));
}

}  // namespace tsimg
