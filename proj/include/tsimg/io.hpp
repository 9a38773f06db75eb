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

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tsimg/autoencoder.hpp"
#include "tsimg/classify.hpp"
#include "tsimg/core.hpp"
#include "tsimg/field.hpp"

namespace tsimg {

/// Shortest decimal form that parses back to the same double ("%.17g").
std::string format_double(double v);

// Matrix CSV: a header line "# kind=GASF size=32 rescale=unit" (rescale=none
// for MTF), then one comma-separated row per line with 17 significant digits.
void write_matrix_csv(const FieldMatrix& m, const std::filesystem::path& path);
std::string matrix_csv_text(const FieldMatrix& m);

/// Parses and validates: row/column counts must match the header and the cells
/// must satisfy the kind's invariants, otherwise HeaderMismatch.
FieldMatrix read_matrix_csv(const std::filesystem::path& path);
FieldMatrix parse_matrix_csv(const std::string& text);

/// Label-first rows, comma separated, 17 significant digits.
void write_ucr(std::span<const TimeSeries> series, const std::filesystem::path& path);
std::string ucr_text(std::span<const TimeSeries> series);

/// Affine map of [lo, hi] onto 0..255 with half-up rounding; values outside
/// the interval saturate.
std::uint8_t to_pixel(double value, double lo, double hi);

/// 8-bit grayscale PNG, one pixel per cell, row i of the matrix on image row i.
void render_png(const FieldMatrix& m, const std::filesystem::path& path);

/// 8-bit RGB PNG with R = GASF, G = GADF, B = MTF.
void render_png(const CompoundImage& image, const std::filesystem::path& path);

struct DecodedPng {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t channels = 0;
  std::vector<std::uint8_t> pixels;  // row-major, interleaved channels
};

DecodedPng read_png(const std::filesystem::path& path);

// Model file: "TSIMG-DA 1", "d h", h encoder rows of d values, the encoder bias
// line, d decoder rows of h values, the decoder bias line.
void save_model(const DaModel& model, const std::filesystem::path& path);
DaModel load_model(const std::filesystem::path& path);
std::string model_text(const DaModel& model);
DaModel parse_model(const std::string& text);

/// Writes `content` to `path`, creating parent directories. IoFailure on error.
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace tsimg
