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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tsimg/core.hpp"
#include "tsimg/field.hpp"

namespace tsimg {

/// Angular/radial encoding of a rescaled series.
struct PolarSeries {
  std::vector<double> phi;  // arccos of each value, radians
  std::vector<double> r;    // (i + 1) / span_constant
  double span_constant = 1.0;
};

/// Values further than this outside [-1, 1] are rejected; closer ones are clamped.
inline constexpr double kGafClampTolerance = 1e-12;

/// span_constant <= 0 selects the series length.
PolarSeries to_polar(const ScaledSeries& scaled, double span_constant = 0.0);

/// cells(i, j) = x_i * x_j - sqrt(1 - x_i^2) * sqrt(1 - x_j^2) = cos(phi_i + phi_j)
FieldMatrix gasf(const ScaledSeries& scaled);

/// cells(i, j) = sqrt(1 - x_i^2) * x_j - x_i * sqrt(1 - x_j^2) = sin(phi_i - phi_j)
FieldMatrix gadf(const ScaledSeries& scaled);

/// rescale -> PAA to `paa.segments` (0 means no smoothing) -> GASF or GADF.
FieldMatrix encode_gaf(const TimeSeries& series, RescaleMode mode, PaaConfig paa_config,
                       FieldKind kind);

/// Encodes many series; `threads` > 1 splits the work, output order matches input.
std::vector<FieldMatrix> encode_gaf_batch(std::span<const TimeSeries> series, RescaleMode mode,
                                          PaaConfig paa_config, FieldKind kind,
                                          unsigned threads = 1);

/// Clamped copy of the values and their complements sqrt(1 - x^2).
struct CosineSine {
  std::vector<double> cosine;
  std::vector<double> sine;
};
CosineSine cosine_sine(std::span<const double> values);

}  // namespace tsimg
