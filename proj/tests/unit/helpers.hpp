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

#include <doctest.h>

#include <cstdint>
#include <vector>

#include "tsimg/core.hpp"
#include "tsimg/error.hpp"
#include "tsimg/random.hpp"

// Checks that `expr` throws tsimg::Error with the given code.
#define CHECK_ERROR(expr, expected_code)                               \
  do {                                                                 \
    bool thrown_ = false;                                              \
    try {                                                              \
      (void)(expr);                                                    \
    } catch (const ::tsimg::Error& e_) {                               \
      thrown_ = true;                                                  \
      CHECK_MESSAGE(e_.code() == (expected_code), e_.what());          \
    }                                                                  \
    CHECK_MESSAGE(thrown_, "expected tsimg::Error from " #expr);       \
  } while (false)

namespace testutil {

inline std::vector<double> random_values(tsimg::Rng& rng, std::size_t n, double lo = -3.0,
                                         double hi = 3.0) {
  std::vector<double> v(n);
  for (auto& x : v) x = tsimg::uniform(rng, lo, hi);
  return v;
}

inline tsimg::TimeSeries random_series(tsimg::Rng& rng, std::size_t n) {
  return {random_values(rng, n), std::nullopt};
}

}  // namespace testutil
