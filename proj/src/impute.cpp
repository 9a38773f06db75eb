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

#include "tsimg/impute.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsimg/error.hpp"
#include "tsimg/gaf.hpp"
#include "tsimg/random.hpp"
#include "tsimg/reconstruct.hpp"

namespace tsimg {

namespace {

// Training corruption and test corruption draw from disjoint seed streams.
constexpr std::uint64_t kTrainStream = 1;
constexpr std::uint64_t kTestStream = 2;
constexpr std::uint64_t kInitStream = 3;

std::vector<double> flatten_gasf(std::vector<double> unit_values) {
  ScaledSeries s;
  s.values = std::move(unit_values);
  s.mode = RescaleMode::Unit;
  const FieldMatrix g = gasf(s);
  return {g.cells().begin(), g.cells().end()};
}

std::vector<double> maybe_paa(std::vector<double> values, std::optional<std::size_t> segments) {
  if (!segments || *segments == values.size()) return values;
  return paa(values, PaaConfig{*segments});
}

}  // namespace

std::size_t corruption_count(std::size_t n, double rate) {
  return static_cast<std::size_t>(std::llround(rate * static_cast<double>(n)));
}

Corrupted corrupt(std::span<const double> values, const CorruptionSpec& spec) {
  if (!(spec.rate > 0.0 && spec.rate < 1.0)) {
    throw Error(ErrorCode::RateOutOfRange,
                "corruption rate must lie in (0, 1), got " + std::to_string(spec.rate));
  }
  const std::size_t k = corruption_count(values.size(), spec.rate);
  if (k < 1) {
    throw Error(ErrorCode::RateOutOfRange, "rate " + std::to_string(spec.rate) +
                                               " corrupts no point of a length-" +
                                               std::to_string(values.size()) + " series");
  }
  Rng rng(spec.seed);
  Corrupted out{{values.begin(), values.end()}, sample_without_replacement(rng, values.size(), k)};
  for (std::size_t i : out.mask) out.values[i] = 0.0;
  return out;
}

std::string_view to_string(Pipeline pipeline) noexcept {
  return pipeline == Pipeline::Gasf ? "gasf" : "raw";
}

Pipeline parse_pipeline(std::string_view text) {
  if (text == "gasf") return Pipeline::Gasf;
  if (text == "raw") return Pipeline::Raw;
  throw Error(ErrorCode::InvalidArgument, "unknown pipeline '" + std::string(text) + "'");
}

double default_tolerance(Pipeline pipeline) noexcept {
  return pipeline == Pipeline::Gasf ? 1e-3 : 1e-5;
}

ScaledSeries rescale_corrupted(std::span<const double> corrupted, Bounds clean_bounds) {
  ScaledSeries s = rescale_with_bounds(corrupted, clean_bounds, RescaleMode::Unit);
  for (double& v : s.values) v = std::clamp(v, 0.0, 1.0);
  return s;
}

TrainingPairs build_training_pairs_gasf(std::span<const TimeSeries> series,
                                        const CorruptionSpec& spec,
                                        std::optional<std::size_t> paa_segments) {
  TrainingPairs pairs;
  const std::size_t n = series.empty() ? 0 : series.front().length();
  for (std::size_t k = 0; k < series.size(); ++k) {
    const TimeSeries& x = series[k];
    if (x.length() != n) {
      throw Error(ErrorCode::LengthMismatch, "series " + std::to_string(k) + " has length " +
                                                 std::to_string(x.length()));
    }
    const ScaledSeries clean = rescale(x, RescaleMode::Unit);
    const Corrupted broken = corrupt(x.values, {spec.rate, derive_seed(spec.seed, k)});
    const ScaledSeries broken_scaled = rescale_corrupted(broken.values, clean.origin);
    pairs.targets.push_back(flatten_gasf(maybe_paa(clean.values, paa_segments)));
    pairs.inputs.push_back(flatten_gasf(maybe_paa(broken_scaled.values, paa_segments)));
    pairs.masks.push_back(broken.mask);
  }
  return pairs;
}

TrainingPairs build_training_pairs_raw(std::span<const TimeSeries> series,
                                       const CorruptionSpec& spec) {
  TrainingPairs pairs;
  const std::size_t n = series.empty() ? 0 : series.front().length();
  for (std::size_t k = 0; k < series.size(); ++k) {
    const TimeSeries& x = series[k];
    if (x.length() != n) {
      throw Error(ErrorCode::LengthMismatch, "series " + std::to_string(k) + " has length " +
                                                 std::to_string(x.length()));
    }
    const ScaledSeries clean = rescale(x, RescaleMode::Unit);
    const Corrupted broken = corrupt(x.values, {spec.rate, derive_seed(spec.seed, k)});
    pairs.targets.push_back(clean.values);
    pairs.inputs.push_back(rescale_corrupted(broken.values, clean.origin).values);
    pairs.masks.push_back(broken.mask);
  }
  return pairs;
}

ScaledSeries impute_via_gasf(const DaModel& model, std::span<const double> corrupted,
                             Bounds clean_bounds, std::optional<std::size_t> paa_segments) {
  const std::size_t n = corrupted.size();
  const std::size_t side = paa_segments ? *paa_segments : n;
  if (model.input_dim != side * side) {
    throw Error(ErrorCode::DimMismatch, "model input dimension " +
                                            std::to_string(model.input_dim) + " is not " +
                                            std::to_string(side) + "^2");
  }
  const ScaledSeries scaled = rescale_corrupted(corrupted, clean_bounds);
  const auto input = flatten_gasf(maybe_paa(scaled.values, paa_segments));
  std::vector<double> recovered = da_forward(model, input);
  for (double& v : recovered) v = std::clamp(v, -1.0, 1.0);
  FieldMatrix field(FieldKind::Gasf, side, RescaleMode::Unit);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      field(i, j) = 0.5 * (recovered[i * side + j] + recovered[j * side + i]);
    }
  }
  ScaledSeries out = reconstruct_series(field);
  if (side != n) out.values = paa_expand(out.values, n);
  out.origin = clean_bounds;
  return out;
}

ScaledSeries impute_via_raw(const DaModel& model, const ScaledSeries& corrupted) {
  ScaledSeries out;
  out.mode = RescaleMode::Unit;
  out.origin = corrupted.origin;
  out.values = da_forward(model, corrupted.values);
  for (double& v : out.values) v = std::clamp(v, 0.0, 1.0);
  return out;
}

ScoreEntry score(std::span<const double> predicted, std::span<const double> truth,
                 std::span<const std::size_t> mask) {
  if (predicted.size() != truth.size() || truth.empty()) {
    throw Error(ErrorCode::LengthMismatch, "prediction and truth lengths differ");
  }
  if (mask.empty()) throw Error(ErrorCode::EmptyMask, "imputation MSE needs corrupted points");
  double full = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double e = predicted[i] - truth[i];
    full += e * e;
  }
  double masked = 0.0;
  for (std::size_t i : mask) {
    if (i >= truth.size()) throw Error(ErrorCode::InvalidArgument, "mask index out of range");
    const double e = predicted[i] - truth[i];
    masked += e * e;
  }
  return {full / static_cast<double>(truth.size()), masked / static_cast<double>(mask.size())};
}

ImputationReport summarize(std::vector<ScoreEntry> per_run) {
  ImputationReport report;
  report.runs = per_run.size();
  for (const auto& e : per_run) {
    report.full_mse += e.full_mse;
    report.imputation_mse += e.imputation_mse;
  }
  if (report.runs > 0) {
    report.full_mse /= static_cast<double>(report.runs);
    report.imputation_mse /= static_cast<double>(report.runs);
  }
  report.per_run = std::move(per_run);
  return report;
}

ScoreEntry evaluate_imputation(const DaModel& model, Pipeline pipeline,
                               std::span<const TimeSeries> test, double rate, std::uint64_t seed,
                               std::optional<std::size_t> paa_segments) {
  if (test.empty()) throw Error(ErrorCode::EmptyTestSet, "no test series");
  std::vector<ScoreEntry> entries;
  for (std::size_t k = 0; k < test.size(); ++k) {
    const ScaledSeries clean = rescale(test[k], RescaleMode::Unit);
    const Corrupted broken = corrupt(test[k].values, {rate, derive_seed(seed, k)});
    const ScaledSeries predicted =
        pipeline == Pipeline::Gasf
            ? impute_via_gasf(model, broken.values, clean.origin, paa_segments)
            : impute_via_raw(model, rescale_corrupted(broken.values, clean.origin));
    entries.push_back(score(predicted.values, clean.values, broken.mask));
  }
  const ImputationReport report = summarize(std::move(entries));
  return {report.full_mse, report.imputation_mse};
}

TrainResult train_imputer(std::span<const TimeSeries> train, Pipeline pipeline, double rate,
                          std::size_t hidden, const TrainConfig& cfg, std::uint64_t seed,
                          std::optional<std::size_t> paa_segments) {
  if (train.empty()) throw Error(ErrorCode::InvalidArgument, "no training series");
  const CorruptionSpec spec{rate, derive_seed(seed, kTrainStream)};
  const TrainingPairs pairs = pipeline == Pipeline::Gasf
                                  ? build_training_pairs_gasf(train, spec, paa_segments)
                                  : build_training_pairs_raw(train, spec);
  const std::size_t d = pairs.inputs.front().size();
  DaModel model = da_init(d, hidden, derive_seed(seed, kInitStream));
  TrainConfig run_cfg = cfg;
  run_cfg.seed = seed;
  return da_train(std::move(model), pairs.inputs, pairs.targets, run_cfg);
}

ImputationReport run_imputation_experiment(std::span<const TimeSeries> train,
                                           std::span<const TimeSeries> test,
                                           const ExperimentConfig& cfg) {
  std::vector<ScoreEntry> per_run;
  for (std::size_t run = 0; run < cfg.runs; ++run) {
    const std::uint64_t run_seed = cfg.seed + run;
    const TrainResult trained = train_imputer(train, cfg.pipeline, cfg.rate, cfg.hidden, cfg.train,
                                              run_seed, cfg.paa_segments);
    per_run.push_back(evaluate_imputation(trained.model, cfg.pipeline, test, cfg.rate,
                                          derive_seed(run_seed, kTestStream), cfg.paa_segments));
  }
  return summarize(std::move(per_run));
}

}  // namespace tsimg
