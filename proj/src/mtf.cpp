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

#include "tsimg/mtf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tsimg/error.hpp"

namespace tsimg {

QuantileBinning quantile_bins(std::span<const double> values, std::size_t num_bins) {
  const std::size_t n = values.size();
  if (num_bins < 2 || num_bins > n) {
    throw Error(ErrorCode::InvalidBinCount, "need 2 <= Q <= n, got Q=" + std::to_string(num_bins) +
                                                " n=" + std::to_string(n));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  QuantileBinning out;
  out.num_bins = num_bins;
  out.assignment.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    out.assignment[order[p]] = std::min(num_bins - 1, p * num_bins / n);
  }
  return out;
}

MarkovMatrix markov_matrix(const QuantileBinning& binning) {
  if (binning.assignment.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "Markov counting needs at least 2 time steps");
  }
  const std::size_t q = binning.num_bins;
  MarkovMatrix w{q, std::vector<double>(q * q, 0.0)};
  for (std::size_t t = 0; t + 1 < binning.assignment.size(); ++t) {
    const std::size_t from = binning.assignment[t];
    const std::size_t to = binning.assignment[t + 1];
    if (from >= q || to >= q) {
      throw Error(ErrorCode::InvalidArgument, "bin index out of range at step " + std::to_string(t));
    }
    w.cells[from * q + to] += 1.0;
  }
  for (std::size_t a = 0; a < q; ++a) {
    double total = 0.0;
    for (std::size_t b = 0; b < q; ++b) total += w.cells[a * q + b];
    if (total > 0.0) {
      for (std::size_t b = 0; b < q; ++b) w.cells[a * q + b] /= total;
    }
  }
  return w;
}

FieldMatrix mtf(const QuantileBinning& binning, const MarkovMatrix& transitions) {
  if (transitions.size != binning.num_bins) {
    throw Error(ErrorCode::DimMismatch, "Markov matrix size does not match the binning");
  }
  const auto& bins = binning.assignment;
  const std::size_t n = bins.size();
  FieldMatrix out(FieldKind::Mtf, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = out.row(i);
    const double* source = transitions.cells.data() + bins[i] * transitions.size;
    for (std::size_t j = 0; j < n; ++j) row[j] = source[bins[j]];
  }
  return out;
}

std::size_t blur_step(std::size_t n, std::size_t target_size) {
  if (target_size < 1 || target_size > n) {
    throw Error(ErrorCode::InvalidTargetSize, "need 1 <= S <= n, got S=" +
                                                  std::to_string(target_size) +
                                                  " n=" + std::to_string(n));
  }
  return (n + target_size - 1) / target_size;
}

FieldMatrix aggregate(const FieldMatrix& field, std::size_t target_size) {
  const std::size_t n = field.size();
  const std::size_t m = blur_step(n, target_size);
  if (m == 1) return field;
  const std::size_t out_n = (n + m - 1) / m;
  FieldMatrix out(field.kind(), out_n, field.rescale_mode());
  for (std::size_t a = 0; a < out_n; ++a) {
    const std::size_t r0 = a * m;
    const std::size_t r1 = std::min(r0 + m, n);
    for (std::size_t b = 0; b < out_n; ++b) {
      const std::size_t c0 = b * m;
      const std::size_t c1 = std::min(c0 + m, n);
      double sum = 0.0;
      for (std::size_t i = r0; i < r1; ++i) {
        for (std::size_t j = c0; j < c1; ++j) sum += field(i, j);
      }
      out(a, b) = sum / static_cast<double>((r1 - r0) * (c1 - c0));
    }
  }
  return out;
}

FieldMatrix encode_mtf(const TimeSeries& series, std::size_t num_bins, std::size_t target_size) {
  validate_series(series.values);
  const QuantileBinning binning = quantile_bins(series.values, num_bins);
  const FieldMatrix full = mtf(binning, markov_matrix(binning));
  if (target_size == 0 || target_size == full.size()) return full;
  return aggregate(full, target_size);
}

}  // namespace tsimg
