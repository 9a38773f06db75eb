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
#include <cstdint>
#include <span>
#include <vector>

#include "tsimg/autoencoder.hpp"
#include "tsimg/core.hpp"
#include "tsimg/field.hpp"
#include "tsimg/ingest.hpp"

namespace tsimg {

/// Three aligned S x S channels in the fixed order GASF, GADF, MTF.
struct CompoundImage {
  std::size_t size = 0;
  FieldMatrix gasf;
  FieldMatrix gadf;
  FieldMatrix mtf;
  /// Size of the blurred MTF before edge replication up to `size`.
  std::size_t mtf_native_size = 0;

  /// Row-major, channel by channel: 3 * size * size values.
  std::vector<double> flatten() const;
};

/// GASF and GADF are PAA-smoothed to S; the MTF is blurred with m = ceil(n/S)
/// and, when that yields fewer than S cells per side, padded by replicating
/// its last row and column.
CompoundImage compound_image(const TimeSeries& series, std::size_t size, std::size_t num_bins,
                             RescaleMode mode);

struct SelectionGrid {
  std::vector<std::size_t> sizes{16, 24, 32, 40, 48};
  std::vector<std::size_t> quantiles{8, 16, 32, 64};
  std::vector<double> penalties{1e-4, 1e-3, 1e-2, 1e-1, 1e0, 1e1, 1e2, 1e3, 1e4};
};

/// One-vs-rest linear classifier. Row k of `weights` scores classes[k]; the
/// last entry of each row multiplies a constant bias feature of 1.
struct LinearModel {
  std::vector<int> classes;  // ascending
  std::size_t feature_dim = 0;
  std::vector<double> weights;  // classes.size() x (feature_dim + 1)
  double penalty = 1.0;

  /// Highest-scoring class; ties go to the lowest class id.
  int predict(std::span<const double> features) const;
};

struct FitOptions {
  std::size_t epochs = 40;
};

/// L2-regularised hinge loss per class, minimised by Pegasos-style stochastic
/// subgradient descent with lambda = 1 / (C * N). Samples are visited in one
/// fixed seeded permutation every epoch, so the result is deterministic.
LinearModel fit_linear(const Vectors& features, std::span<const int> labels, double penalty,
                       std::uint64_t seed, const FitOptions& options = {});

/// Misclassified fraction.
double error_rate(const LinearModel& model, const Vectors& features, std::span<const int> labels);

/// Fold index per sample: each class is shuffled with `seed` and dealt
/// round-robin, so every fold gets floor or ceil of its share.
std::vector<std::size_t> stratified_folds(std::span<const int> labels, std::size_t folds,
                                          std::uint64_t seed);

struct CvResult {
  double penalty = 0.0;
  std::size_t errors = 0;  // misclassified held-out samples summed over folds
  double cv_error = 0.0;   // errors / N
};

/// k-fold cross-validation over `penalties`. Lowest error wins; ties go to the
/// larger penalty.
CvResult cv_select_c(const Vectors& features, std::span<const int> labels, std::size_t folds,
                     std::span<const double> penalties, std::uint64_t seed,
                     const FitOptions& options = {});

struct GridResult {
  std::size_t size = 0;
  std::size_t quantiles = 0;
  CvResult cv;
};

/// Lowest CV error; ties prefer larger S, then larger Q, then larger C.
const GridResult& select_best(std::span<const GridResult> results);

struct Selection {
  std::size_t size = 0;
  std::size_t quantiles = 0;
  double penalty = 0.0;
  double cv_error = 0.0;
  RescaleMode mode = RescaleMode::Symmetric;
  LinearModel model;
  std::vector<GridResult> evaluated;
};

/// Compound features for every series.
Vectors compound_features(std::span<const TimeSeries> series, std::size_t size,
                          std::size_t num_bins, RescaleMode mode);

/// Evaluates every feasible (S, Q) with cv_select_c on the training pool,
/// picks the best by select_best and refits on the whole pool. Grid points with
/// S or Q larger than the series length are skipped.
Selection model_select(std::span<const TimeSeries> train, const SelectionGrid& grid,
                       std::uint64_t seed, RescaleMode mode = RescaleMode::Symmetric,
                       std::size_t folds = 5, const FitOptions& options = {});

/// Test error of a selected model on labeled series.
double evaluate(const LinearModel& model, std::span<const TimeSeries> test, std::size_t size,
                std::size_t num_bins, RescaleMode mode);

/// 1-nearest-neighbour under Euclidean distance on raw values; distance ties go
/// to the earliest training series. Returns the test error rate.
double baseline_1nn(std::span<const TimeSeries> train, std::span<const TimeSeries> test);

/// Predicted labels of baseline_1nn.
std::vector<int> predict_1nn(std::span<const TimeSeries> train, std::span<const TimeSeries> test);

std::vector<int> labels_of(std::span<const TimeSeries> series);

}  // namespace tsimg
