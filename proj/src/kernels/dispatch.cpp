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

#include <atomic>
#include <cassert>
#include <string>

#include "tsimg/error.hpp"
#include "tsimg/kernels/kernels.hpp"

namespace tsimg::kernels {

namespace {

std::atomic<const KernelTable*> g_active{nullptr};
std::atomic<Isa> g_active_isa{Isa::Scalar};

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

Isa parse_isa(std::string_view text) {
  if (text == "scalar") return Isa::Scalar;
  if (text == "avx2") return Isa::Avx2;
  if (text == "neon") return Isa::Neon;
  throw Error(ErrorCode::InvalidArgument, "unknown kernel ISA '" + std::string(text) + "'");
}

bool supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(TSIMG_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(TSIMG_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect() noexcept {
  if (supported(Isa::Avx2)) return Isa::Avx2;
  if (supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

const KernelTable& table(Isa isa) {
  if (!supported(isa)) {
    throw Error(ErrorCode::InvalidArgument,
                "kernel ISA '" + std::string(to_string(isa)) + "' is not available on this machine");
  }
  switch (isa) {
#if defined(TSIMG_HAVE_AVX2)
    case Isa::Avx2:
      return detail::avx2_table;
#endif
#if defined(TSIMG_HAVE_NEON)
    case Isa::Neon:
      return detail::neon_table;
#endif
    default:
      return detail::scalar_table;
  }
}

const KernelTable& active() noexcept {
  const KernelTable* current = g_active.load(std::memory_order_acquire);
  if (current == nullptr) {
    const Isa isa = detect();
    current = &table(isa);
    g_active_isa.store(isa, std::memory_order_relaxed);
    g_active.store(current, std::memory_order_release);
  }
  return *current;
}

Isa active_isa() noexcept {
  active();
  return g_active_isa.load(std::memory_order_relaxed);
}

void select(Isa isa) {
  const KernelTable& chosen = table(isa);
  g_active_isa.store(isa, std::memory_order_relaxed);
  g_active.store(&chosen, std::memory_order_release);
}

void diff_of_products(double a, std::span<const double> u, double b, std::span<const double> v,
                      std::span<double> out) {
  assert(u.size() == out.size() && v.size() == out.size());
  active().diff_of_products(a, u.data(), b, v.data(), out.data(), out.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active().dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  active().axpy(alpha, x.data(), y.data(), y.size());
}

void scale(double alpha, std::span<double> x) { active().scale(alpha, x.data(), x.size()); }

double squared_distance(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active().squared_distance(a.data(), b.data(), a.size());
}

}  // namespace tsimg::kernels
