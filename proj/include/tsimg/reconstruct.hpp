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

#include <span>
#include <vector>

#include "tsimg/core.hpp"
#include "tsimg/field.hpp"

namespace tsimg {

/// Diagonal entries further than this outside [-1, 1] are rejected.
inline constexpr double kDiagonalClampTolerance = 1e-9;

std::vector<double> diagonal(const FieldMatrix& field);

/// x_i = sqrt((G_ii + 1) / 2). Exact inverse of the Unit-mode GASF diagonal.
ScaledSeries inverse_gasf_diagonal(std::span<const double> diag);

/// Recovers the Unit-rescaled series from a GASF built without PAA. Symmetric
/// mode GASFs are rejected: their diagonal does not determine the sign of x.
ScaledSeries reconstruct_series(const FieldMatrix& gasf_field);

}  // namespace tsimg
