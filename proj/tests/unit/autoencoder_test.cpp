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

#include <cmath>

#include "helpers.hpp"
#include "tsimg/autoencoder.hpp"
#include "tsimg/kernels/kernels.hpp"

using namespace tsimg;

namespace {

struct Problem {
  DaModel model;
  Vectors inputs;
  Vectors targets;
};

Problem random_problem(Rng& rng, std::size_t d, std::size_t h, std::size_t count) {
  Problem p{da_init(d, h, rng()), {}, {}};
  for (auto& b : p.model.encoder_bias) b = uniform(rng, -0.5, 0.5);
  for (auto& b : p.model.decoder_bias) b = uniform(rng, -0.5, 0.5);
  for (std::size_t i = 0; i < count; ++i) {
    p.inputs.push_back(testutil::random_values(rng, d, -1, 1));
    p.targets.push_back(testutil::random_values(rng, d, -1, 1));
  }
  return p;
}

// Pointer to parameter block `block` of a model, in DaGradients order.
std::vector<double>& block_of(DaModel& m, int block) {
  switch (block) {
    case 0: return m.encoder_weights;
    case 1: return m.encoder_bias;
    case 2: return m.decoder_weights;
    default: return m.decoder_bias;
  }
}

const std::vector<double>& block_of(const DaGradients& g, int block) {
  switch (block) {
    case 0: return g.encoder_weights;
    case 1: return g.encoder_bias;
    case 2: return g.decoder_weights;
    default: return g.decoder_bias;
  }
}

}  // namespace

TEST_CASE("init is seeded, bounded and has zero biases") {
  const auto a = da_init(16, 4, 1);
  CHECK(a == da_init(16, 4, 1));
  CHECK(a != da_init(16, 4, 2));
  const double bound = 4.0 * std::sqrt(6.0 / 20.0);
  for (double w : a.encoder_weights) CHECK(std::abs(w) <= bound);
  for (double w : a.decoder_weights) CHECK(std::abs(w) <= bound);
  for (double b : a.encoder_bias) CHECK(b == 0.0);
  for (double b : a.decoder_bias) CHECK(b == 0.0);
}

TEST_CASE("forward pass degenerate models") {
  DaModel zero{3, 2, std::vector<double>(6, 0.0), {0, 0}, std::vector<double>(6, 0.0), {0, 0, 0}};
  CHECK(da_forward(zero, std::vector<double>{1, 2, 3}) == std::vector<double>{0, 0, 0});

  // Decoder rows sum to c = 3, hidden activations are sigmoid(0) = 0.5.
  DaModel half = zero;
  half.decoder_weights = {1, 2, 0.5, 2.5, 3, 0};
  CHECK(da_forward(half, std::vector<double>{5, -1, 2}) == std::vector<double>{1.5, 1.5, 1.5});

  CHECK_ERROR(da_forward(zero, std::vector<double>{1, 2}), ErrorCode::DimMismatch);
  zero.encoder_bias.pop_back();
  CHECK_ERROR(da_forward(zero, std::vector<double>{1, 2, 3}), ErrorCode::DimMismatch);
}

TEST_CASE("analytic gradients match central differences") {
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 1 + uniform_index(rng, 10);
    const std::size_t h = 1 + uniform_index(rng, 5);
    auto p = random_problem(rng, d, h, 1 + uniform_index(rng, 4));
    const auto g = da_gradients(p.model, p.inputs, p.targets);
    CHECK(g.loss == doctest::Approx(da_loss(p.model, p.inputs, p.targets)));
    const double step = 1e-5;
    for (int block = 0; block < 4; ++block) {
      auto& params = block_of(p.model, block);
      const auto& analytic = block_of(g, block);
      for (std::size_t i = 0; i < params.size(); ++i) {
        const double saved = params[i];
        params[i] = saved + step;
        const double up = da_loss(p.model, p.inputs, p.targets);
        params[i] = saved - step;
        const double down = da_loss(p.model, p.inputs, p.targets);
        params[i] = saved;
        const double numeric = (up - down) / (2 * step);
        const double rel = std::abs(numeric - analytic[i]) /
                           std::max(1e-8, std::abs(numeric) + std::abs(analytic[i]));
        CHECK_MESSAGE(rel < 1e-4, "block " << block << " index " << i << " analytic "
                                           << analytic[i] << " numeric " << numeric);
      }
    }
  }
}

TEST_CASE("fused step equals a gradient descent step") {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = random_problem(rng, 3 + uniform_index(rng, 20), 1 + uniform_index(rng, 8), 6);
    const double lr = 0.05;
    DaModel fused = p.model;
    const double loss = da_step(fused, p.inputs, p.targets, 0, p.inputs.size(), lr);
    const auto g = da_gradients(p.model, p.inputs, p.targets);
    CHECK(loss == doctest::Approx(g.loss).epsilon(1e-12));
    for (int block = 0; block < 4; ++block) {
      const auto& before = block_of(p.model, block);
      const auto& after = block_of(fused, block);
      const auto& grad = block_of(g, block);
      for (std::size_t i = 0; i < before.size(); ++i) {
        CHECK(std::abs(after[i] - (before[i] - lr * grad[i])) < 1e-12);
      }
    }
  }
}

TEST_CASE("training overfits a single pair") {
  Rng rng(5);
  auto p = random_problem(rng, 8, 4, 1);
  p.model = da_init(8, 4, 3);
  TrainConfig cfg;
  cfg.batch_size = 1;
  cfg.learning_rate = 0.05;
  cfg.tolerance = 1e-300;
  cfg.max_epochs = 1000;
  const auto r = da_train(p.model, p.inputs, p.targets, cfg);
  CHECK(r.loss_history.size() == 1000);
  CHECK(r.final_mse < 0.1 * r.initial_mse);
  CHECK_FALSE(r.converged);
}

TEST_CASE("huge tolerance stops after the second epoch") {
  Rng rng(6);
  auto p = random_problem(rng, 5, 3, 4);
  TrainConfig cfg;
  cfg.tolerance = 1e9;
  cfg.learning_rate = 0.01;
  std::size_t calls = 0;
  cfg.on_epoch = [&](std::size_t, double) { ++calls; };
  const auto r = da_train(p.model, p.inputs, p.targets, cfg);
  CHECK(r.loss_history.size() == 2);
  CHECK(calls == 2);
  CHECK(r.converged);
}

TEST_CASE("exploding learning rate is detected") {
  Rng rng(7);
  auto p = random_problem(rng, 6, 3, 5);
  TrainConfig cfg;
  cfg.learning_rate = 1e6;
  cfg.max_epochs = 50;
  CHECK_ERROR(da_train(p.model, p.inputs, p.targets, cfg), ErrorCode::DivergenceDetected);
}

TEST_CASE("training is deterministic and ISA results agree closely") {
  Rng rng(8);
  auto p = random_problem(rng, 12, 5, 10);
  TrainConfig cfg;
  cfg.batch_size = 3;
  cfg.max_epochs = 30;
  cfg.tolerance = 1e-12;
  cfg.learning_rate = 0.05;
  const auto a = da_train(p.model, p.inputs, p.targets, cfg);
  const auto b = da_train(p.model, p.inputs, p.targets, cfg);
  CHECK(a.model == b.model);
  CHECK(a.loss_history == b.loss_history);

  const auto original = kernels::active_isa();
  kernels::select(kernels::Isa::Scalar);
  const auto s = da_train(p.model, p.inputs, p.targets, cfg);
  kernels::select(original);
  CHECK(s.final_mse == doctest::Approx(a.final_mse).epsilon(1e-9));
}

TEST_CASE("training validates its inputs") {
  Rng rng(9);
  auto p = random_problem(rng, 4, 2, 3);
  p.targets[1].pop_back();
  CHECK_ERROR(da_train(p.model, p.inputs, p.targets, {}), ErrorCode::DimMismatch);
  CHECK_ERROR(da_loss(p.model, {}, {}), ErrorCode::DimMismatch);
}
