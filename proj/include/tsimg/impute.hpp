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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tsimg/autoencoder.hpp"
#include "tsimg/core.hpp"

namespace tsimg {

struct CorruptionSpec {
  double rate = 0.2;
  std::uint64_t seed = 0;
};

struct Corrupted {
  std::vector<double> values;
  std::vector<std::size_t> mask;  // sorted corrupted indices
};

/// Number of corrupted points: round(rate * n), half away from zero.
std::size_t corruption_count(std::size_t n, double rate);

/// Salt-and-pepper corruption: exactly round(rate*n) distinct indices, drawn
/// uniformly without replacement, are set to 0.
Corrupted corrupt(std::span<const double> values, const CorruptionSpec& spec);

enum class Pipeline { Gasf, Raw };

std::string_view to_string(Pipeline pipeline) noexcept;
Pipeline parse_pipeline(std::string_view text);

/// Tolerance used when none is given: 1e-3 for GASF targets, 1e-5 for raw.
double default_tolerance(Pipeline pipeline) noexcept;

struct TrainingPairs {
  Vectors inputs;
  Vectors targets;
  std::vector<std::vector<std::size_t>> masks;
};

/// Corrupted series rescaled with the clean series' bounds, clamped to [0, 1].
/// Only masked points differ from the clean rescaled series.
ScaledSeries rescale_corrupted(std::span<const double> corrupted, Bounds clean_bounds);

/// For every series: target = flatten(GASF(unit(X))), input =
/// flatten(GASF(unit_with_clean_bounds(corrupt(X)))). Corruption happens in raw
/// space. Series k uses corruption seed derive_seed(spec.seed, k). With
/// `paa_segments` set, both series are PAA-smoothed before encoding.
TrainingPairs build_training_pairs_gasf(std::span<const TimeSeries> series,
                                        const CorruptionSpec& spec,
                                        std::optional<std::size_t> paa_segments = std::nullopt);

/// Raw-pipeline analogue: input = corrupted unit-rescaled series, target = clean.
TrainingPairs build_training_pairs_raw(std::span<const TimeSeries> series,
                                       const CorruptionSpec& spec);

/// Forward the broken GASF, clamp to [-1, 1], symmetrize, invert the diagonal.
/// When the model was trained on PAA-smoothed images the recovered series is
/// expanded back to the original length piecewise-constantly.
ScaledSeries impute_via_gasf(const DaModel& model, std::span<const double> corrupted,
                             Bounds clean_bounds,
                             std::optional<std::size_t> paa_segments = std::nullopt);

/// Forward the corrupted rescaled series and clamp to [0, 1].
ScaledSeries impute_via_raw(const DaModel& model, const ScaledSeries& corrupted);

struct ScoreEntry {
  double full_mse = 0.0;
  double imputation_mse = 0.0;
};

/// full_mse over every point, imputation_mse over the masked points only.
ScoreEntry score(std::span<const double> predicted, std::span<const double> truth,
                 std::span<const std::size_t> mask);

struct ImputationReport {
  double full_mse = 0.0;
  double imputation_mse = 0.0;
  std::size_t runs = 0;
  std::vector<ScoreEntry> per_run;
};

/// Averages the entries of `per_run`.
ImputationReport summarize(std::vector<ScoreEntry> per_run);

/// Corrupts every test series with seed `seed`, imputes with `model` and
/// averages the per-series scores.
ScoreEntry evaluate_imputation(const DaModel& model, Pipeline pipeline,
                               std::span<const TimeSeries> test, double rate, std::uint64_t seed,
                               std::optional<std::size_t> paa_segments = std::nullopt);

struct ExperimentConfig {
  Pipeline pipeline = Pipeline::Gasf;
  double rate = 0.2;
  std::size_t hidden = 500;
  TrainConfig train;  // train.seed is ignored; each run derives its own
  std::size_t runs = 10;
  std::uint64_t seed = 0;
  std::optional<std::size_t> paa_segments;
};

/// Full protocol: run k uses seed + k for the model initialisation, the
/// training corruption and the test corruption, trains a fresh model and scores
/// it on the test pool.
ImputationReport run_imputation_experiment(std::span<const TimeSeries> train,
                                           std::span<const TimeSeries> test,
                                           const ExperimentConfig& cfg);

/// Model trained by the given pipeline on `train`.
TrainResult train_imputer(std::span<const TimeSeries> train, Pipeline pipeline, double rate,
                          std::size_t hidden, const TrainConfig& cfg, std::uint64_t seed,
                          std::optional<std::size_t> paa_segments = std::nullopt);

}  // namespace tsimg
