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

#include "tsimg/gaf.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "tsimg/error.hpp"
#include "tsimg/kernels/kernels.hpp"

namespace tsimg {

namespace {

double clamp_unit_interval(double v, std::size_t index) {
  if (!(v >= -1.0 - kGafClampTolerance && v <= 1.0 + kGafClampTolerance)) {
    throw Error(ErrorCode::OutOfRange,
                "value " + std::to_string(v) + " at index " + std::to_string(index) +
                    " is outside [-1, 1]");
  }
  return std::clamp(v, -1.0, 1.0);
}

void require_encodable(const ScaledSeries& scaled) {
  if (scaled.length() < 2) {
    throw Error(ErrorCode::InvalidArgument, "GAF encoding needs at least 2 points");
  }
}

}  // namespace

CosineSine cosine_sine(std::span<const double> values) {
  CosineSine out;
  out.cosine.resize(values.size());
  out.sine.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = clamp_unit_interval(values[i], i);
    out.cosine[i] = x;
    out.sine[i] = std::sqrt(1.0 - x * x);
  }
  return out;
}

PolarSeries to_polar(const ScaledSeries& scaled, double span_constant) {
  PolarSeries polar;
  const std::size_t n = scaled.length();
  polar.span_constant = span_constant > 0.0 ? span_constant : static_cast<double>(n);
  polar.phi.resize(n);
  polar.r.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    polar.phi[i] = std::acos(clamp_unit_interval(scaled.values[i], i));
    polar.r[i] = static_cast<double>(i + 1) / polar.span_constant;
  }
  return polar;
}

FieldMatrix gasf(const ScaledSeries& scaled) {
  require_encodable(scaled);
  const auto cs = cosine_sine(scaled.values);
  const std::size_t n = scaled.length();
  FieldMatrix out(FieldKind::Gasf, n, scaled.mode);
  const auto& table = kernels::active();
  for (std::size_t i = 0; i < n; ++i) {
    table.diff_of_products(cs.cosine[i], cs.cosine.data(), cs.sine[i], cs.sine.data(),
                           out.row(i).data(), n);
  }
  return out;
}

FieldMatrix gadf(const ScaledSeries& scaled) {
  require_encodable(scaled);
  const auto cs = cosine_sine(scaled.values);
  const std::size_t n = scaled.length();
  FieldMatrix out(FieldKind::Gadf, n, scaled.mode);
  const auto& table = kernels::active();
  for (std::size_t i = 0; i < n; ++i) {
    table.diff_of_products(cs.sine[i], cs.cosine.data(), cs.cosine[i], cs.sine.data(),
                           out.row(i).data(), n);
  }
  return out;
}

FieldMatrix encode_gaf(const TimeSeries& series, RescaleMode mode, PaaConfig paa_config,
                       FieldKind kind) {
  if (kind == FieldKind::Mtf) {
    throw Error(ErrorCode::InvalidArgument, "encode_gaf builds GASF or GADF only");
  }
  ScaledSeries scaled = rescale(series, mode);
  if (paa_config.segments != 0 && paa_config.segments != scaled.length()) {
    scaled.values = paa(scaled.values, paa_config);
  }
  return kind == FieldKind::Gasf ? gasf(scaled) : gadf(scaled);
}

std::vector<FieldMatrix> encode_gaf_batch(std::span<const TimeSeries> series, RescaleMode mode,
                                          PaaConfig paa_config, FieldKind kind,
                                          unsigned threads) {
  std::vector<FieldMatrix> out(series.size());
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, series.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < series.size(); ++i) {
      out[i] = encode_gaf(series[i], mode, paa_config, kind);
    }
    return out;
  }
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < series.size(); i += workers) {
            out[i] = encode_gaf(series[i], mode, paa_config, kind);
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return out;
}

}  // namespace tsimg
