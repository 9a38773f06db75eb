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

#include "tsimg/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsimg/error.hpp"

namespace tsimg {

std::string_view to_string(RescaleMode mode) noexcept {
  return mode == RescaleMode::Unit ? "unit" : "symmetric";
}

RescaleMode parse_rescale_mode(std::string_view text) {
  if (text == "unit") return RescaleMode::Unit;
  if (text == "symmetric") return RescaleMode::Symmetric;
  throw Error(ErrorCode::InvalidArgument, "unknown rescale mode '" + std::string(text) + "'");
}

std::pair<double, double> mode_bounds(RescaleMode mode) noexcept {
  return mode == RescaleMode::Unit ? std::pair{0.0, 1.0} : std::pair{-1.0, 1.0};
}

void validate_series(std::span<const double> values) {
  if (values.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "series length " + std::to_string(values.size()) + " is below the minimum of 2");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::InvalidArgument, "non-finite value at index " + std::to_string(i));
    }
  }
}

Bounds bounds_of(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "empty series");
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return {*lo, *hi};
}

ScaledSeries rescale_with_bounds(std::span<const double> values, Bounds bounds, RescaleMode mode) {
  if (!(bounds.max > bounds.min)) {
    throw Error(ErrorCode::ConstantSeries, "max == min, rescaling is undefined");
  }
  ScaledSeries out;
  out.mode = mode;
  out.origin = bounds;
  out.values.reserve(values.size());
  const double span = bounds.max - bounds.min;
  for (double x : values) {
    if (mode == RescaleMode::Unit) {
      out.values.push_back((x - bounds.min) / span);
    } else {
      out.values.push_back(((x - bounds.max) + (x - bounds.min)) / span);
    }
  }
  return out;
}

ScaledSeries rescale(const TimeSeries& series, RescaleMode mode) {
  validate_series(series.values);
  const Bounds bounds = bounds_of(series.values);
  if (bounds.max == bounds.min) {
    throw Error(ErrorCode::ConstantSeries, "max == min, rescaling is undefined");
  }
  ScaledSeries out = rescale_with_bounds(series.values, bounds, mode);
  // Pin the extremes exactly; the affine formula already gives 0/1 or -1/1
  // there, but this keeps the invariant independent of rounding.
  const auto [lo, hi] = mode_bounds(mode);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    if (series.values[i] == bounds.min) out.values[i] = lo;
    if (series.values[i] == bounds.max) out.values[i] = hi;
  }
  return out;
}

std::vector<double> ScaledSeries::to_raw() const {
  std::vector<double> raw;
  raw.reserve(values.size());
  const double span = origin.max - origin.min;
  for (double v : values) {
    const double unit = mode == RescaleMode::Unit ? v : (v + 1.0) / 2.0;
    raw.push_back(origin.min + unit * span);
  }
  return raw;
}

std::vector<std::size_t> paa_boundaries(std::size_t n, std::size_t segments) {
  if (segments < 1 || segments > n) {
    throw Error(ErrorCode::InvalidSegments, "PAA needs 1 <= S <= n, got S=" +
                                                std::to_string(segments) +
                                                " n=" + std::to_string(n));
  }
  std::vector<std::size_t> edges(segments + 1);
  for (std::size_t b = 0; b <= segments; ++b) edges[b] = b * n / segments;
  return edges;
}

std::vector<double> paa(std::span<const double> values, PaaConfig config) {
  const std::size_t n = values.size();
  const auto edges = paa_boundaries(n, config.segments);
  if (config.segments == n) return {values.begin(), values.end()};
  std::vector<double> out(config.segments);
  for (std::size_t b = 0; b < config.segments; ++b) {
    double sum = 0.0;
    for (std::size_t i = edges[b]; i < edges[b + 1]; ++i) sum += values[i];
    out[b] = sum / static_cast<double>(edges[b + 1] - edges[b]);
  }
  return out;
}

std::vector<double> paa_expand(std::span<const double> reduced, std::size_t n) {
  const auto edges = paa_boundaries(n, reduced.size());
  std::vector<double> out(n);
  for (std::size_t b = 0; b < reduced.size(); ++b) {
    std::fill(out.begin() + static_cast<std::ptrdiff_t>(edges[b]),
              out.begin() + static_cast<std::ptrdiff_t>(edges[b + 1]), reduced[b]);
  }
  return out;
}

}  // namespace tsimg
