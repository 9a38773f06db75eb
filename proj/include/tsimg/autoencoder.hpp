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
#include <functional>
#include <span>
#include <vector>

namespace tsimg {

/// Single-hidden-layer autoencoder: sigmoid hidden layer, linear output layer,
/// untied encoder/decoder weights. Matrices are row-major.
struct DaModel {
  std::size_t input_dim = 0;
  std::size_t hidden_dim = 0;
  std::vector<double> encoder_weights;  // hidden_dim x input_dim
  std::vector<double> encoder_bias;     // hidden_dim
  std::vector<double> decoder_weights;  // input_dim x hidden_dim
  std::vector<double> decoder_bias;     // input_dim

  friend bool operator==(const DaModel&, const DaModel&) = default;
};

struct TrainConfig {
  std::size_t batch_size = 20;
  double tolerance = 1e-3;
  double learning_rate = 0.1;
  std::size_t max_epochs = 5000;
  std::uint64_t seed = 0;
  /// Called after every epoch with (epoch, mean training MSE). Optional.
  std::function<void(std::size_t, double)> on_epoch;
};

struct TrainResult {
  DaModel model;
  std::vector<double> loss_history;  // per-epoch mean MSE over the batches
  double initial_mse = 0.0;          // full training set, before the first update
  double final_mse = 0.0;            // full training set, after the last update
  bool converged = false;            // stopped by the tolerance rule
};

/// Gradients of the MSE loss, laid out like DaModel.
struct DaGradients {
  double loss = 0.0;
  std::vector<double> encoder_weights;
  std::vector<double> encoder_bias;
  std::vector<double> decoder_weights;
  std::vector<double> decoder_bias;
};

using Vectors = std::vector<std::vector<double>>;

/// Weights uniform in +-4*sqrt(6/(d+h)), biases zero. Deterministic per seed.
DaModel da_init(std::size_t input_dim, std::size_t hidden_dim, std::uint64_t seed);

/// decoder * sigmoid(encoder * v + encoder_bias) + decoder_bias
std::vector<double> da_forward(const DaModel& model, std::span<const double> input);

/// Mean squared error over every output coordinate of every pair.
double da_loss(const DaModel& model, const Vectors& inputs, const Vectors& targets);

/// Analytic gradients of da_loss with respect to every parameter block.
DaGradients da_gradients(const DaModel& model, const Vectors& inputs, const Vectors& targets);

/// Plain mini-batch gradient descent in fixed dataset order. Stops once the
/// epoch MSE changes by less than cfg.tolerance or after cfg.max_epochs.
/// Throws DivergenceDetected on a non-finite loss or when the final training
/// MSE exceeds the initial one.
TrainResult da_train(DaModel model, const Vectors& inputs, const Vectors& targets,
                     const TrainConfig& cfg);

/// One gradient-descent step on a single batch, exposed for testing the fused
/// update against da_gradients. Returns the batch loss before the update.
double da_step(DaModel& model, const Vectors& inputs, const Vectors& targets,
               std::size_t first, std::size_t count, double learning_rate);

}  // namespace tsimg
