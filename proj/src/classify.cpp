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

#include "tsimg/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "tsimg/error.hpp"
#include "tsimg/gaf.hpp"
#include "tsimg/kernels/kernels.hpp"
#include "tsimg/mtf.hpp"
#include "tsimg/random.hpp"

namespace tsimg {

namespace {

FieldMatrix pad_to(const FieldMatrix& m, std::size_t size) {
  if (m.size() == size) return m;
  FieldMatrix out(m.kind(), size, m.rescale_mode());
  const std::size_t last = m.size() - 1;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) out(i, j) = m(std::min(i, last), std::min(j, last));
  }
  return out;
}

void check_features(const Vectors& features, std::span<const int> labels) {
  if (features.empty() || features.size() != labels.size()) {
    throw Error(ErrorCode::DimMismatch, "features and labels must be nonempty and aligned");
  }
  const std::size_t dim = features.front().size();
  for (const auto& f : features) {
    if (f.size() != dim) throw Error(ErrorCode::DimMismatch, "feature vectors differ in size");
  }
}

}  // namespace

std::vector<double> CompoundImage::flatten() const {
  std::vector<double> out;
  out.reserve(3 * size * size);
  for (const FieldMatrix* channel : {&gasf, &gadf, &mtf}) {
    out.insert(out.end(), channel->cells().begin(), channel->cells().end());
  }
  return out;
}

CompoundImage compound_image(const TimeSeries& series, std::size_t size, std::size_t num_bins,
                             RescaleMode mode) {
  const std::size_t n = series.length();
  if (size < 1 || size > n) {
    throw Error(ErrorCode::InvalidSegments, "image size " + std::to_string(size) +
                                                " must lie in [1, " + std::to_string(n) + "]");
  }
  CompoundImage image;
  image.size = size;
  image.gasf = encode_gaf(series, mode, PaaConfig{size}, FieldKind::Gasf);
  image.gadf = encode_gaf(series, mode, PaaConfig{size}, FieldKind::Gadf);
  const FieldMatrix blurred = encode_mtf(series, num_bins, size);
  image.mtf_native_size = blurred.size();
  image.mtf = pad_to(blurred, size);
  if (image.gasf.size() != size || image.gadf.size() != size || image.mtf.size() != size) {
    throw Error(ErrorCode::SizeMismatch, "compound channels disagree in size");
  }
  return image;
}

int LinearModel::predict(std::span<const double> features) const {
  const std::size_t stride = feature_dim + 1;
  int best_class = classes.front();
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const double* w = weights.data() + k * stride;
    const double s = kernels::active().dot(w, features.data(), feature_dim) + w[feature_dim];
    if (s > best_score) {
      best_score = s;
      best_class = classes[k];
    }
  }
  return best_class;
}

LinearModel fit_linear(const Vectors& features, std::span<const int> labels, double penalty,
                       std::uint64_t seed, const FitOptions& options) {
  check_features(features, labels);
  if (!(penalty > 0.0)) throw Error(ErrorCode::InvalidArgument, "penalty C must be positive");
  const std::set<int> distinct(labels.begin(), labels.end());
  if (distinct.size() < 2) throw Error(ErrorCode::SingleClass, "need at least two classes");

  const std::size_t n = features.size();
  const std::size_t dim = features.front().size();
  const std::size_t stride = dim + 1;
  LinearModel model;
  model.classes.assign(distinct.begin(), distinct.end());
  model.feature_dim = dim;
  model.penalty = penalty;
  model.weights.assign(model.classes.size() * stride, 0.0);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_index(rng, i)]);

  // Features with the constant bias coordinate appended.
  std::vector<double> augmented(n * stride);
  std::vector<double> norms(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(features[i].begin(), features[i].end(), augmented.begin() + i * stride);
    augmented[i * stride + dim] = 1.0;
    const double* x = augmented.data() + i * stride;
    norms[i] = kernels::active().dot(x, x, stride);
  }

  const double lambda = 1.0 / (penalty * static_cast<double>(n));
  const double radius_sq = 1.0 / lambda;
  const auto& k = kernels::active();
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    // w = scale * v keeps the per-step shrink O(1).
    std::vector<double> v(stride, 0.0);
    double scale = 1.0;
    double v_norm_sq = 0.0;
    std::size_t t = 0;
    for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
      for (std::size_t idx : order) {
        ++t;
        const double* x = augmented.data() + idx * stride;
        const double y = labels[idx] == model.classes[c] ? 1.0 : -1.0;
        const double eta = 1.0 / (lambda * static_cast<double>(t));
        const double vx = k.dot(v.data(), x, stride);
        const double margin = y * scale * vx;
        const double shrink = 1.0 - 1.0 / static_cast<double>(t);
        if (shrink <= 0.0) {
          std::fill(v.begin(), v.end(), 0.0);
          scale = 1.0;
          v_norm_sq = 0.0;
        } else {
          scale *= shrink;
        }
        if (margin < 1.0) {
          const double step = eta * y / scale;
          const double vx_now = shrink <= 0.0 ? 0.0 : vx;
          k.axpy(step, x, v.data(), stride);
          v_norm_sq += 2.0 * step * vx_now + step * step * norms[idx];
        }
        const double w_norm_sq = scale * scale * v_norm_sq;
        if (w_norm_sq > radius_sq) scale *= std::sqrt(radius_sq / w_norm_sq);
        if (scale < 1e-9) {
          k.scale(scale, v.data(), stride);
          v_norm_sq = k.dot(v.data(), v.data(), stride);
          scale = 1.0;
        }
      }
    }
    double* w = model.weights.data() + c * stride;
    for (std::size_t j = 0; j < stride; ++j) w[j] = scale * v[j];
    if (!std::all_of(w, w + stride, [](double x) { return std::isfinite(x); })) {
      throw Error(ErrorCode::DivergenceDetected, "linear model weights are not finite");
    }
  }
  return model;
}

double error_rate(const LinearModel& model, const Vectors& features, std::span<const int> labels) {
  if (features.empty()) throw Error(ErrorCode::EmptyTestSet, "no samples to evaluate");
  check_features(features, labels);
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (model.predict(features[i]) != labels[i]) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(features.size());
}

std::vector<std::size_t> stratified_folds(std::span<const int> labels, std::size_t folds,
                                          std::uint64_t seed) {
  if (folds < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 folds");
  if (labels.size() < folds) {
    throw Error(ErrorCode::TooFewSamples, std::to_string(labels.size()) + " samples for " +
                                              std::to_string(folds) + " folds");
  }
  const std::set<int> classes(labels.begin(), labels.end());
  Rng rng(seed);
  std::vector<std::size_t> assignment(labels.size());
  std::size_t dealt = 0;
  for (int c : classes) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == c) members.push_back(i);
    }
    for (std::size_t i = members.size(); i > 1; --i) {
      std::swap(members[i - 1], members[uniform_index(rng, i)]);
    }
    for (std::size_t idx : members) assignment[idx] = dealt++ % folds;
  }
  return assignment;
}

CvResult cv_select_c(const Vectors& features, std::span<const int> labels, std::size_t folds,
                     std::span<const double> penalties, std::uint64_t seed,
                     const FitOptions& options) {
  if (penalties.empty()) throw Error(ErrorCode::EmptyGrid, "no penalties to search");
  check_features(features, labels);
  const auto fold_of = stratified_folds(labels, folds, seed);

  std::vector<std::size_t> errors(penalties.size(), 0);
  for (std::size_t f = 0; f < folds; ++f) {
    Vectors train_x;
    std::vector<int> train_y;
    std::vector<std::size_t> held_out;
    for (std::size_t i = 0; i < features.size(); ++i) {
      if (fold_of[i] == f) {
        held_out.push_back(i);
      } else {
        train_x.push_back(features[i]);
        train_y.push_back(labels[i]);
      }
    }
    const std::set<int> present(train_y.begin(), train_y.end());
    for (std::size_t p = 0; p < penalties.size(); ++p) {
      if (present.size() < 2) {
        // Degenerate split: the only sensible prediction is the lone class.
        for (std::size_t i : held_out) errors[p] += labels[i] != *present.begin();
        continue;
      }
      const LinearModel model =
          fit_linear(train_x, train_y, penalties[p], derive_seed(seed, f), options);
      for (std::size_t i : held_out) errors[p] += model.predict(features[i]) != labels[i];
    }
  }

  std::size_t best = 0;
  for (std::size_t p = 1; p < penalties.size(); ++p) {
    if (errors[p] < errors[best] ||
        (errors[p] == errors[best] && penalties[p] > penalties[best])) {
      best = p;
    }
  }
  return {penalties[best], errors[best],
          static_cast<double>(errors[best]) / static_cast<double>(features.size())};
}

const GridResult& select_best(std::span<const GridResult> results) {
  if (results.empty()) throw Error(ErrorCode::EmptyGrid, "no grid point was evaluated");
  const GridResult* best = &results.front();
  for (const GridResult& r : results.subspan(1)) {
    const auto key = [](const GridResult& g) {
      // Smaller is better: errors ascending, then S, Q, C descending.
      return std::tuple{g.cv.errors, -static_cast<double>(g.size),
                        -static_cast<double>(g.quantiles), -g.cv.penalty};
    };
    if (key(r) < key(*best)) best = &r;
  }
  return *best;
}

Vectors compound_features(std::span<const TimeSeries> series, std::size_t size,
                          std::size_t num_bins, RescaleMode mode) {
  Vectors out;
  out.reserve(series.size());
  for (const auto& s : series) out.push_back(compound_image(s, size, num_bins, mode).flatten());
  return out;
}

std::vector<int> labels_of(std::span<const TimeSeries> series) {
  std::vector<int> out;
  out.reserve(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!series[i].label) {
      throw Error(ErrorCode::InvalidArgument, "series " + std::to_string(i) + " has no label");
    }
    out.push_back(*series[i].label);
  }
  return out;
}

Selection model_select(std::span<const TimeSeries> train, const SelectionGrid& grid,
                       std::uint64_t seed, RescaleMode mode, std::size_t folds,
                       const FitOptions& options) {
  if (train.empty()) throw Error(ErrorCode::InvalidArgument, "empty training set");
  validate_uniform(train);
  const std::size_t n = train.front().length();
  const auto labels = labels_of(train);

  Selection selection;
  selection.mode = mode;
  for (std::size_t size : grid.sizes) {
    if (size < 1 || size > n) continue;
    for (std::size_t q : grid.quantiles) {
      if (q < 2 || q > n) continue;
      const Vectors features = compound_features(train, size, q, mode);
      const CvResult cv = cv_select_c(features, labels, folds, grid.penalties, seed, options);
      selection.evaluated.push_back({size, q, cv});
    }
  }
  const GridResult best = select_best(selection.evaluated);
  selection.size = best.size;
  selection.quantiles = best.quantiles;
  selection.penalty = best.cv.penalty;
  selection.cv_error = best.cv.cv_error;
  const Vectors features = compound_features(train, best.size, best.quantiles, mode);
  selection.model = fit_linear(features, labels, best.cv.penalty, seed, options);
  return selection;
}

double evaluate(const LinearModel& model, std::span<const TimeSeries> test, std::size_t size,
                std::size_t num_bins, RescaleMode mode) {
  if (test.empty()) throw Error(ErrorCode::EmptyTestSet, "no test series");
  const Vectors features = compound_features(test, size, num_bins, mode);
  if (features.front().size() != model.feature_dim) {
    throw Error(ErrorCode::DimMismatch, "test features do not match the model");
  }
  return error_rate(model, features, labels_of(test));
}

std::vector<int> predict_1nn(std::span<const TimeSeries> train, std::span<const TimeSeries> test) {
  if (train.empty()) throw Error(ErrorCode::InvalidArgument, "empty training set");
  if (test.empty()) throw Error(ErrorCode::EmptyTestSet, "no test series");
  const std::size_t n = train.front().length();
  for (const auto* pool : {&train, &test}) {
    for (const auto& s : *pool) {
      if (s.length() != n) {
        throw Error(ErrorCode::LengthMismatch, "1NN needs equal-length series");
      }
    }
  }
  const auto train_labels = labels_of(train);
  const auto& k = kernels::active();
  std::vector<int> out;
  out.reserve(test.size());
  for (const auto& query : test) {
    std::size_t best = 0;
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < train.size(); ++i) {
      const double dist = k.squared_distance(query.values.data(), train[i].values.data(), n);
      if (dist < best_distance) {
        best_distance = dist;
        best = i;
      }
    }
    out.push_back(train_labels[best]);
  }
  return out;
}

double baseline_1nn(std::span<const TimeSeries> train, std::span<const TimeSeries> test) {
  const auto predicted = predict_1nn(train, test);
  const auto truth = labels_of(test);
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) wrong += predicted[i] != truth[i];
  return static_cast<double>(wrong) / static_cast<double>(truth.size());
}

}  // namespace tsimg
