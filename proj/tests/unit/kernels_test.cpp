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
#include "tsimg/kernels/kernels.hpp"

using namespace tsimg;
namespace k = tsimg::kernels;

namespace {

std::vector<k::Isa> available() {
  std::vector<k::Isa> out;
  for (auto isa : {k::Isa::Scalar, k::Isa::Avx2, k::Isa::Neon}) {
    if (k::supported(isa)) out.push_back(isa);
  }
  return out;
}

// Sizes that exercise the vector body, the remainder loop and the empty case.
const std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 100, 1023};

}  // namespace

TEST_CASE("scalar kernels are always available") {
  CHECK(k::supported(k::Isa::Scalar));
  CHECK(k::supported(k::detect()));
  MESSAGE("detected ISA: " << k::to_string(k::detect()));
}

TEST_CASE("elementwise kernels are bitwise identical across ISAs") {
  Rng rng(17);
  const auto& ref = k::table(k::Isa::Scalar);
  for (auto isa : available()) {
    const auto& t = k::table(isa);
    for (std::size_t n : kSizes) {
      const auto u = testutil::random_values(rng, n);
      const auto v = testutil::random_values(rng, n);
      const double a = uniform(rng, -2, 2);
      const double b = uniform(rng, -2, 2);

      std::vector<double> r1(n), r2(n);
      ref.diff_of_products(a, u.data(), b, v.data(), r1.data(), n);
      t.diff_of_products(a, u.data(), b, v.data(), r2.data(), n);
      CHECK(r1 == r2);

      auto y1 = v;
      auto y2 = v;
      ref.axpy(a, u.data(), y1.data(), n);
      t.axpy(a, u.data(), y2.data(), n);
      CHECK(y1 == y2);

      auto s1 = u;
      auto s2 = u;
      ref.scale(b, s1.data(), n);
      t.scale(b, s2.data(), n);
      CHECK(s1 == s2);
    }
  }
}

TEST_CASE("reduction kernels agree with the scalar reference") {
  Rng rng(23);
  const auto& ref = k::table(k::Isa::Scalar);
  for (auto isa : available()) {
    const auto& t = k::table(isa);
    for (std::size_t n : kSizes) {
      const auto a = testutil::random_values(rng, n);
      const auto b = testutil::random_values(rng, n);
      double magnitude = 0.0;
      for (std::size_t i = 0; i < n; ++i) magnitude += std::abs(a[i] * b[i]) + (a[i] - b[i]) * (a[i] - b[i]);
      const double tol = 1e-14 * (1.0 + magnitude);
      CHECK(std::abs(ref.dot(a.data(), b.data(), n) - t.dot(a.data(), b.data(), n)) <= tol);
      CHECK(std::abs(ref.squared_distance(a.data(), b.data(), n) -
                     t.squared_distance(a.data(), b.data(), n)) <= tol);
    }
  }
}

TEST_CASE("scalar reductions match a naive loop exactly") {
  const std::vector<double> a{1, 2, 3, 4, 5};
  const std::vector<double> b{5, 4, 3, 2, 1};
  CHECK(k::table(k::Isa::Scalar).dot(a.data(), b.data(), 5) == 35.0);
  CHECK(k::table(k::Isa::Scalar).squared_distance(a.data(), b.data(), 5) == 40.0);
}

TEST_CASE("select switches the active table") {
  const auto original = k::active_isa();
  k::select(k::Isa::Scalar);
  CHECK(k::active_isa() == k::Isa::Scalar);
  CHECK(&k::active() == &k::table(k::Isa::Scalar));
  k::select(original);
  CHECK(k::active_isa() == original);
}

TEST_CASE("unavailable ISAs are rejected") {
  for (auto isa : {k::Isa::Avx2, k::Isa::Neon}) {
    if (!k::supported(isa)) CHECK_ERROR(k::table(isa), ErrorCode::InvalidArgument);
  }
  CHECK(k::parse_isa("scalar") == k::Isa::Scalar);
  CHECK_ERROR(k::parse_isa("sse9"), ErrorCode::InvalidArgument);
}
