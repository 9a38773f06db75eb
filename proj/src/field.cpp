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

#include "tsimg/field.hpp"

#include <cmath>
#include <string>

#include "tsimg/error.hpp"

namespace tsimg {

std::string_view to_string(FieldKind kind) noexcept {
  switch (kind) {
    case FieldKind::Gasf: return "GASF";
    case FieldKind::Gadf: return "GADF";
    case FieldKind::Mtf: return "MTF";
  }
  return "?";
}

FieldKind parse_field_kind(std::string_view text) {
  if (text == "GASF" || text == "gasf") return FieldKind::Gasf;
  if (text == "GADF" || text == "gadf") return FieldKind::Gadf;
  if (text == "MTF" || text == "mtf") return FieldKind::Mtf;
  throw Error(ErrorCode::InvalidArgument, "unknown field kind '" + std::string(text) + "'");
}

std::pair<double, double> kind_range(FieldKind kind) noexcept {
  return kind == FieldKind::Mtf ? std::pair{0.0, 1.0} : std::pair{-1.0, 1.0};
}

FieldMatrix::FieldMatrix(FieldKind kind, std::size_t size, std::vector<double> cells,
                         std::optional<RescaleMode> mode)
    : kind_(kind), size_(size), mode_(mode), cells_(std::move(cells)) {
  if (cells_.size() != size_ * size_) {
    throw Error(ErrorCode::DimMismatch, "expected " + std::to_string(size_ * size_) +
                                           " cells, got " + std::to_string(cells_.size()));
  }
}

std::optional<std::string> check_invariants(const FieldMatrix& m, double tolerance) {
  const auto [lo, hi] = kind_range(m.kind());
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = m(i, j);
      const auto where = " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (!std::isfinite(v)) return "non-finite cell" + where;
      if (v < lo - tolerance || v > hi + tolerance) return "cell out of range" + where;
      if (m.kind() == FieldKind::Gasf && std::abs(v - m(j, i)) > tolerance) {
        return "GASF not symmetric" + where;
      }
      if (m.kind() == FieldKind::Gadf && std::abs(v + m(j, i)) > tolerance) {
        return "GADF not antisymmetric" + where;
      }
    }
  }
  return std::nullopt;
}

}  // namespace tsimg
