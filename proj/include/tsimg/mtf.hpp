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

struct QuantileBinning {
  std::size_t num_bins = 0;
  std::vector<std::size_t> assignment;  // bin index per time step
};

/// Row-stochastic Q x Q matrix: at(a, b) = P(next in bin b | current in bin a).
/// Rows of bins with no outgoing transition are all zero.
struct MarkovMatrix {
  std::size_t size = 0;
  std::vector<double> cells;

  double at(std::size_t from, std::size_t to) const noexcept { return cells[from * size + to]; }
};

/// Rank-based quantile assignment: stable-sort by value, sorted position p goes
/// to bin min(Q-1, floor(p*Q/n)). Ties are split in original order.
QuantileBinning quantile_bins(std::span<const double> values, std::size_t num_bins);

MarkovMatrix markov_matrix(const QuantileBinning& binning);

/// n x n field with cells(i, j) = W[bin_i][bin_j].
FieldMatrix mtf(const QuantileBinning& binning, const MarkovMatrix& transitions);

/// Blurring step m = ceil(n / target_size).
std::size_t blur_step(std::size_t n, std::size_t target_size);

/// Averages non-overlapping m x m patches; the ragged last patch is averaged
/// over the cells it actually covers. Output size is ceil(n / m).
FieldMatrix aggregate(const FieldMatrix& field, std::size_t target_size);

/// quantile_bins -> markov_matrix -> mtf -> aggregate to `target_size`
/// (0 means no aggregation).
FieldMatrix encode_mtf(const TimeSeries& series, std::size_t num_bins, std::size_t target_size);

}  // namespace tsimg
