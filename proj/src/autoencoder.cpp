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

#include "tsimg/autoencoder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsimg/error.hpp"
#include "tsimg/kernels/kernels.hpp"
#include "tsimg/random.hpp"

namespace tsimg {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

void check_model(const DaModel& m) {
  const std::size_t d = m.input_dim;
  const std::size_t h = m.hidden_dim;
  if (d == 0 || h == 0 || m.encoder_weights.size() != h * d || m.encoder_bias.size() != h ||
      m.decoder_weights.size() != d * h || m.decoder_bias.size() != d) {
    throw Error(ErrorCode::DimMismatch, "inconsistent autoencoder dimensions");
  }
}

void check_pairs(const DaModel& m, const Vectors& inputs, const Vectors& targets) {
  if (inputs.empty() || inputs.size() != targets.size()) {
    throw Error(ErrorCode::DimMismatch, "need the same nonzero number of inputs and targets");
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].size() != m.input_dim || targets[i].size() != m.input_dim) {
      throw Error(ErrorCode::DimMismatch, "pair " + std::to_string(i) + " does not have dimension " +
                                              std::to_string(m.input_dim));
    }
  }
}

// Activations for a contiguous batch, stored sample-major.
struct BatchState {
  std::size_t count = 0;
  std::vector<double> hidden;  // count x h
  std::vector<double> output;  // count x d, later overwritten by the output delta
};

// Forward pass. Loops over weight rows on the outside so each row is read once
// per batch. Returns the batch sum of squared errors.
double forward_batch(const DaModel& m, const Vectors& inputs, const Vectors& targets,
                     std::size_t first, std::size_t count, BatchState& state) {
  const std::size_t d = m.input_dim;
  const std::size_t h = m.hidden_dim;
  const auto& k = kernels::active();
  state.count = count;
  state.hidden.assign(count * h, 0.0);
  state.output.assign(count * d, 0.0);
  for (std::size_t j = 0; j < h; ++j) {
    const double* row = m.encoder_weights.data() + j * d;
    for (std::size_t b = 0; b < count; ++b) {
      const double z = k.dot(row, inputs[first + b].data(), d) + m.encoder_bias[j];
      state.hidden[b * h + j] = sigmoid(z);
    }
  }
  double sse = 0.0;
  for (std::size_t r = 0; r < d; ++r) {
    const double* row = m.decoder_weights.data() + r * h;
    for (std::size_t b = 0; b < count; ++b) {
      const double y = k.dot(row, state.hidden.data() + b * h, h) + m.decoder_bias[r];
      const double err = y - targets[first + b][r];
      state.output[b * d + r] = err;
      sse += err * err;
    }
  }
  return sse;
}

}  // namespace

DaModel da_init(std::size_t input_dim, std::size_t hidden_dim, std::uint64_t seed) {
  if (input_dim < 1 || hidden_dim < 1) {
    throw Error(ErrorCode::InvalidArgument, "autoencoder dimensions must be positive");
  }
  DaModel m;
  m.input_dim = input_dim;
  m.hidden_dim = hidden_dim;
  const double bound =
      4.0 * std::sqrt(6.0 / static_cast<double>(input_dim + hidden_dim));
  Rng rng(seed);
  m.encoder_weights.resize(hidden_dim * input_dim);
  for (double& w : m.encoder_weights) w = uniform(rng, -bound, bound);
  m.decoder_weights.resize(input_dim * hidden_dim);
  for (double& w : m.decoder_weights) w = uniform(rng, -bound, bound);
  m.encoder_bias.assign(hidden_dim, 0.0);
  m.decoder_bias.assign(input_dim, 0.0);
  return m;
}

std::vector<double> da_forward(const DaModel& model, std::span<const double> input) {
  check_model(model);
  if (input.size() != model.input_dim) {
    throw Error(ErrorCode::DimMismatch, "input has dimension " + std::to_string(input.size()) +
                                            ", model expects " + std::to_string(model.input_dim));
  }
  const std::size_t d = model.input_dim;
  const std::size_t h = model.hidden_dim;
  const auto& k = kernels::active();
  std::vector<double> hidden(h);
  for (std::size_t j = 0; j < h; ++j) {
    hidden[j] = sigmoid(k.dot(model.encoder_weights.data() + j * d, input.data(), d) +
                        model.encoder_bias[j]);
  }
  std::vector<double> out(d);
  for (std::size_t r = 0; r < d; ++r) {
    out[r] = k.dot(model.decoder_weights.data() + r * h, hidden.data(), h) + model.decoder_bias[r];
  }
  return out;
}

double da_loss(const DaModel& model, const Vectors& inputs, const Vectors& targets) {
  check_model(model);
  check_pairs(model, inputs, targets);
  BatchState state;
  const double sse = forward_batch(model, inputs, targets, 0, inputs.size(), state);
  return sse / static_cast<double>(inputs.size() * model.input_dim);
}

DaGradients da_gradients(const DaModel& model, const Vectors& inputs, const Vectors& targets) {
  check_model(model);
  check_pairs(model, inputs, targets);
  const std::size_t d = model.input_dim;
  const std::size_t h = model.hidden_dim;
  const std::size_t count = inputs.size();
  BatchState state;
  const double sse = forward_batch(model, inputs, targets, 0, count, state);
  const double norm = 2.0 / static_cast<double>(count * d);

  DaGradients g;
  g.loss = sse / static_cast<double>(count * d);
  g.encoder_weights.assign(h * d, 0.0);
  g.encoder_bias.assign(h, 0.0);
  g.decoder_weights.assign(d * h, 0.0);
  g.decoder_bias.assign(d, 0.0);

  std::vector<double> hidden_delta(count * h, 0.0);
  for (std::size_t b = 0; b < count; ++b) {
    const double* hid = state.hidden.data() + b * h;
    for (std::size_t r = 0; r < d; ++r) {
      const double delta = norm * state.output[b * d + r];
      g.decoder_bias[r] += delta;
      for (std::size_t j = 0; j < h; ++j) {
        g.decoder_weights[r * h + j] += delta * hid[j];
        hidden_delta[b * h + j] += delta * model.decoder_weights[r * h + j];
      }
    }
    for (std::size_t j = 0; j < h; ++j) {
      const double delta = hidden_delta[b * h + j] * hid[j] * (1.0 - hid[j]);
      g.encoder_bias[j] += delta;
      for (std::size_t i = 0; i < d; ++i) {
        g.encoder_weights[j * d + i] += delta * inputs[b][i];
      }
    }
  }
  return g;
}

double da_step(DaModel& model, const Vectors& inputs, const Vectors& targets, std::size_t first,
               std::size_t count, double learning_rate) {
  const std::size_t d = model.input_dim;
  const std::size_t h = model.hidden_dim;
  const auto& k = kernels::active();
  BatchState state;
  const double sse = forward_batch(model, inputs, targets, first, count, state);
  const double norm = 2.0 / static_cast<double>(count * d);
  for (double& e : state.output) e *= norm;

  // Decoder: back-propagate through each row before it is updated.
  std::vector<double> hidden_delta(count * h, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    double* row = model.decoder_weights.data() + r * h;
    double bias_grad = 0.0;
    for (std::size_t b = 0; b < count; ++b) {
      const double delta = state.output[b * d + r];
      k.axpy(delta, row, hidden_delta.data() + b * h, h);
      bias_grad += delta;
    }
    for (std::size_t b = 0; b < count; ++b) {
      k.axpy(-learning_rate * state.output[b * d + r], state.hidden.data() + b * h, row, h);
    }
    model.decoder_bias[r] -= learning_rate * bias_grad;
  }

  for (std::size_t b = 0; b < count; ++b) {
    for (std::size_t j = 0; j < h; ++j) {
      const double a = state.hidden[b * h + j];
      hidden_delta[b * h + j] *= a * (1.0 - a);
    }
  }
  for (std::size_t j = 0; j < h; ++j) {
    double* row = model.encoder_weights.data() + j * d;
    double bias_grad = 0.0;
    for (std::size_t b = 0; b < count; ++b) {
      const double delta = hidden_delta[b * h + j];
      k.axpy(-learning_rate * delta, inputs[first + b].data(), row, d);
      bias_grad += delta;
    }
    model.encoder_bias[j] -= learning_rate * bias_grad;
  }
  return sse / static_cast<double>(count * d);
}

TrainResult da_train(DaModel model, const Vectors& inputs, const Vectors& targets,
                     const TrainConfig& cfg) {
  check_model(model);
  check_pairs(model, inputs, targets);
  if (cfg.batch_size < 1) throw Error(ErrorCode::InvalidArgument, "batch_size must be >= 1");
  if (!(cfg.tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be > 0");
  if (cfg.max_epochs < 1) throw Error(ErrorCode::InvalidArgument, "max_epochs must be >= 1");

  TrainResult result;
  result.initial_mse = da_loss(model, inputs, targets);
  const std::size_t n = inputs.size();
  const std::size_t d = model.input_dim;
  for (std::size_t epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    double sse = 0.0;
    for (std::size_t first = 0; first < n; first += cfg.batch_size) {
      const std::size_t count = std::min(cfg.batch_size, n - first);
      const double batch_mse = da_step(model, inputs, targets, first, count, cfg.learning_rate);
      sse += batch_mse * static_cast<double>(count * d);
    }
    const double mse = sse / static_cast<double>(n * d);
    if (!std::isfinite(mse)) {
      throw Error(ErrorCode::DivergenceDetected,
                  "training loss became non-finite at epoch " + std::to_string(epoch));
    }
    result.loss_history.push_back(mse);
    if (cfg.on_epoch) cfg.on_epoch(epoch, mse);
    if (epoch >= 2 && std::abs(mse - result.loss_history[epoch - 2]) < cfg.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.final_mse = da_loss(model, inputs, targets);
  if (!std::isfinite(result.final_mse) || result.final_mse > result.initial_mse) {
    throw Error(ErrorCode::DivergenceDetected,
                "final training MSE " + std::to_string(result.final_mse) +
                    " exceeds the initial " + std::to_string(result.initial_mse));
  }
  result.model = std::move(model);
  return result;
}

}  // namespace tsimg
