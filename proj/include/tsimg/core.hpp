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
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace tsimg {

/// A univariate, regularly sampled series with an optional class label.
struct TimeSeries {
  std::vector<double> values;
  std::optional<int> label;

  std::size_t length() const noexcept { return values.size(); }

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;
};

enum class RescaleMode {
  Unit,       // [0, 1]
  Symmetric,  // [-1, 1]
};

std::string_view to_string(RescaleMode mode) noexcept;
RescaleMode parse_rescale_mode(std::string_view text);

/// Closed interval of a mode: Unit -> {0, 1}, Symmetric -> {-1, 1}.
std::pair<double, double> mode_bounds(RescaleMode mode) noexcept;

/// (min, max) of the series the scaled values came from.
struct Bounds {
  double min = 0.0;
  double max = 0.0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct ScaledSeries {
  std::vector<double> values;
  RescaleMode mode = RescaleMode::Unit;
  Bounds origin;

  std::size_t length() const noexcept { return values.size(); }

  /// Undo the rescaling using the recorded origin bounds.
  std::vector<double> to_raw() const;
};

struct PaaConfig {
  std::size_t segments = 0;
};

/// Finite minimum and maximum; throws InvalidArgument on an empty span or non-finite values.
Bounds bounds_of(std::span<const double> values);

/// Affine map onto the mode's interval. Throws ConstantSeries when max == min.
ScaledSeries rescale(const TimeSeries& series, RescaleMode mode);

/// Same map with caller-provided bounds; values outside the bounds land outside
/// the interval and are left for the caller to clamp.
ScaledSeries rescale_with_bounds(std::span<const double> values, Bounds bounds, RescaleMode mode);

/// Piecewise aggregate approximation. Segment b covers [floor(b*n/S), floor((b+1)*n/S)).
std::vector<double> paa(std::span<const double> values, PaaConfig config);

/// Segment boundaries used by paa(): S+1 offsets from 0 to n.
std::vector<std::size_t> paa_boundaries(std::size_t n, std::size_t segments);

/// Piecewise-constant expansion of a PAA output back to length n.
std::vector<double> paa_expand(std::span<const double> reduced, std::size_t n);

/// Rejects NaN/Inf and series shorter than two points.
void validate_series(std::span<const double> values);

}  // namespace tsimg
