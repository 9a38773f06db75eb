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

// Data-parallel inner loops shared by the encoders, the autoencoder and the
// classifiers. Each kernel has a scalar reference implementation plus SIMD
// variants (AVX2 on x86-64, NEON on AArch64) chosen once at runtime.
//
// Elementwise kernels use separate multiply and add/subtract instructions in
// every variant, so their results are bitwise identical across ISAs. Reductions
// (dot, squared_distance) change the summation order and agree with the scalar
// reference only up to rounding.

#include <cstddef>
#include <span>
#include <string_view>

namespace tsimg::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;
Isa parse_isa(std::string_view text);

struct KernelTable {
  // out[i] = a * u[i] - b * v[i]
  void (*diff_of_products)(double a, const double* u, double b, const double* v, double* out,
                           std::size_t n);
  // sum a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // x[i] *= alpha
  void (*scale)(double alpha, double* x, std::size_t n);
  // sum (a[i] - b[i])^2
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
};

bool supported(Isa isa) noexcept;

/// Best ISA supported by the running CPU and compiled into this build.
Isa detect() noexcept;

/// Kernels for a specific ISA; throws InvalidArgument if it is unavailable.
const KernelTable& table(Isa isa);

/// Currently selected table. Defaults to detect() on first use.
const KernelTable& active() noexcept;
Isa active_isa() noexcept;

/// Overrides the runtime selection (e.g. force Scalar for cross-machine
/// bitwise reproducibility). Not thread-safe against concurrent kernel calls.
void select(Isa isa);

// Span wrappers over the active table. Sizes must match; checked in debug builds.
void diff_of_products(double a, std::span<const double> u, double b, std::span<const double> v,
                      std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scale(double alpha, std::span<double> x);
double squared_distance(std::span<const double> a, std::span<const double> b);

namespace detail {
extern const KernelTable scalar_table;
#if defined(TSIMG_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(TSIMG_HAVE_NEON)
extern const KernelTable neon_table;
#endif
}  // namespace detail

}  // namespace tsimg::kernels
