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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tsimg/core.hpp"

namespace tsimg {

enum class FieldKind { Gasf, Gadf, Mtf };

std::string_view to_string(FieldKind kind) noexcept;
FieldKind parse_field_kind(std::string_view text);

/// Value interval of a kind: GAF kinds [-1, 1], MTF [0, 1].
std::pair<double, double> kind_range(FieldKind kind) noexcept;

/// Square image in row-major order. Row i / column j correspond to time steps
/// (or PAA segments) i and j, so time runs from top-left to bottom-right.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(FieldKind kind, std::size_t size, std::optional<RescaleMode> mode = std::nullopt)
      : kind_(kind), size_(size), mode_(mode), cells_(size * size, 0.0) {}
  FieldMatrix(FieldKind kind, std::size_t size, std::vector<double> cells,
              std::optional<RescaleMode> mode = std::nullopt);

  FieldKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return size_; }
  std::optional<RescaleMode> rescale_mode() const noexcept { return mode_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * size_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * size_ + j]; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {cells_.data() + i * size_, size_};
  }
  std::span<double> row(std::size_t i) noexcept { return {cells_.data() + i * size_, size_}; }

  std::span<const double> cells() const noexcept { return cells_; }
  std::span<double> cells() noexcept { return cells_; }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  FieldKind kind_ = FieldKind::Gasf;
  std::size_t size_ = 0;
  std::optional<RescaleMode> mode_;
  std::vector<double> cells_;
};

/// Checks the per-kind invariants (GASF symmetric, GADF antisymmetric with zero
/// diagonal, value ranges) within `tolerance`. Returns a description of the first
/// violation, or nullopt when the matrix is valid.
std::optional<std::string> check_invariants(const FieldMatrix& m, double tolerance = 1e-12);

}  // namespace tsimg
