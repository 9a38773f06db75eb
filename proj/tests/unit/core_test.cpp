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

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "tsimg/core.hpp"

using namespace tsimg;

TEST_CASE("rescale maps onto the mode interval") {
  const auto sym = rescale({{-1.0, 0.0, 1.0}, {}}, RescaleMode::Symmetric);
  CHECK(sym.values == std::vector<double>{-1.0, 0.0, 1.0});
  CHECK(sym.origin == Bounds{-1.0, 1.0});

  const auto unit = rescale({{0.0, 4.0}, {}}, RescaleMode::Unit);
  CHECK(unit.values == std::vector<double>{0.0, 1.0});
}

TEST_CASE("rescale rejects constant and invalid series") {
  CHECK_ERROR(rescale({{5.0, 5.0, 5.0}, {}}, RescaleMode::Unit), ErrorCode::ConstantSeries);
  CHECK_ERROR(rescale({{5.0, 5.0, 5.0}, {}}, RescaleMode::Symmetric), ErrorCode::ConstantSeries);
  CHECK_ERROR(rescale({{1.0}, {}}, RescaleMode::Unit), ErrorCode::InvalidArgument);
  CHECK_ERROR(rescale({{1.0, std::nan("")}, {}}, RescaleMode::Unit), ErrorCode::InvalidArgument);
}

TEST_CASE("rescale properties over random series") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = testutil::random_series(rng, 2 + uniform_index(rng, 60));
    const auto u = rescale(s, RescaleMode::Unit);
    const auto y = rescale(s, RescaleMode::Symmetric);
    const auto argmin = std::min_element(s.values.begin(), s.values.end()) - s.values.begin();
    const auto argmax = std::max_element(s.values.begin(), s.values.end()) - s.values.begin();
    CHECK(u.values[argmin] == 0.0);
    CHECK(u.values[argmax] == 1.0);
    CHECK(y.values[argmin] == -1.0);
    CHECK(y.values[argmax] == 1.0);
    for (std::size_t i = 0; i < s.length(); ++i) {
      CHECK(u.values[i] >= 0.0);
      CHECK(u.values[i] <= 1.0);
      CHECK(std::abs(y.values[i] - (2.0 * u.values[i] - 1.0)) < 1e-12);
    }
    const auto back = u.to_raw();
    for (std::size_t i = 0; i < s.length(); ++i) CHECK(back[i] == doctest::Approx(s.values[i]));
  }
}

TEST_CASE("rescale_with_bounds leaves out-of-range values unclamped") {
  const auto s = rescale_with_bounds(std::vector<double>{-1.0, 0.0, 2.0}, {0.0, 1.0},
                                     RescaleMode::Unit);
  CHECK(s.values == std::vector<double>{-1.0, 0.0, 2.0});
}

TEST_CASE("paa examples") {
  CHECK(paa(std::vector<double>{1, 2, 3, 4, 5, 6}, {3}) == std::vector<double>{1.5, 3.5, 5.5});
  CHECK(paa(std::vector<double>{1, 2, 3, 4, 5}, {2}) == std::vector<double>{1.5, 4.0});
  CHECK(paa(std::vector<double>{7, 9}, {2}) == std::vector<double>{7, 9});
  CHECK_ERROR(paa(std::vector<double>{1, 2, 3}, {0}), ErrorCode::InvalidSegments);
  CHECK_ERROR(paa(std::vector<double>{1, 2, 3}, {4}), ErrorCode::InvalidSegments);
}

TEST_CASE("paa segments partition the index range") {
  for (std::size_t n = 1; n <= 40; ++n) {
    for (std::size_t s = 1; s <= n; ++s) {
      const auto b = paa_boundaries(n, s);
      REQUIRE(b.size() == s + 1);
      CHECK(b.front() == 0);
      CHECK(b.back() == n);
      for (std::size_t k = 0; k < s; ++k) CHECK(b[k] < b[k + 1]);
    }
  }
}

TEST_CASE("paa with equal segments preserves the mean") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t s = 1 + uniform_index(rng, 8);
    const std::size_t n = s * (1 + uniform_index(rng, 8));
    const auto v = testutil::random_values(rng, n);
    const auto r = paa(v, {s});
    const double mean_v = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);
    const double mean_r = std::accumulate(r.begin(), r.end(), 0.0) / static_cast<double>(s);
    CHECK(std::abs(mean_v - mean_r) < 1e-12);
  }
}

TEST_CASE("paa_expand is piecewise constant over the same segments") {
  const std::vector<double> reduced{1.5, 4.0};
  CHECK(paa_expand(reduced, 5) == std::vector<double>{1.5, 1.5, 4.0, 4.0, 4.0});
}

TEST_CASE("rescale mode names round-trip") {
  CHECK(parse_rescale_mode(to_string(RescaleMode::Unit)) == RescaleMode::Unit);
  CHECK(parse_rescale_mode(to_string(RescaleMode::Symmetric)) == RescaleMode::Symmetric);
  CHECK_ERROR(parse_rescale_mode("zscore"), ErrorCode::InvalidArgument);
}
