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

#include "tsimg/io.hpp"

#include <png.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "tsimg/error.hpp"

namespace tsimg {

namespace fs = std::filesystem;

std::string format_double(double v) {
  char buffer[32];
  const int written = std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return std::string(buffer, static_cast<std::size_t>(written));
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
  out << content;
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write failed for " + path.string());
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

bool parse_number(std::string_view text, double& out) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) return false;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), out);
  return result.ec == std::errc{} && result.ptr == text.data() + text.size();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

std::string matrix_csv_text(const FieldMatrix& m) {
  std::string out = "# kind=" + std::string(to_string(m.kind())) +
                    " size=" + std::to_string(m.size()) + " rescale=" +
                    (m.rescale_mode() ? std::string(to_string(*m.rescale_mode())) : "none") + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

void write_matrix_csv(const FieldMatrix& m, const fs::path& path) {
  write_text_file(path, matrix_csv_text(m));
}

FieldMatrix parse_matrix_csv(const std::string& text) {
  const auto lines = lines_of(text);
  if (lines.empty() || !lines.front().starts_with("# ")) {
    throw Error(ErrorCode::HeaderMismatch, "missing '# kind=... size=... rescale=...' header");
  }
  std::string kind_text;
  std::string rescale_text;
  std::size_t size = 0;
  bool have_size = false;
  for (auto token : split(lines.front().substr(2), ' ')) {
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) continue;
    const auto key = token.substr(0, eq);
    const auto value = token.substr(eq + 1);
    if (key == "kind") kind_text = value;
    if (key == "rescale") rescale_text = value;
    if (key == "size") {
      const auto r = std::from_chars(value.data(), value.data() + value.size(), size);
      have_size = r.ec == std::errc{} && r.ptr == value.data() + value.size();
    }
  }
  if (kind_text.empty() || !have_size || rescale_text.empty()) {
    throw Error(ErrorCode::HeaderMismatch, "incomplete header");
  }
  FieldKind kind;
  std::optional<RescaleMode> mode;
  try {
    kind = parse_field_kind(kind_text);
    if (rescale_text != "none") mode = parse_rescale_mode(rescale_text);
  } catch (const Error& e) {
    throw Error(ErrorCode::HeaderMismatch, e.what());
  }
  if (lines.size() - 1 != size) {
    throw Error(ErrorCode::HeaderMismatch, "header says " + std::to_string(size) + " rows, found " +
                                               std::to_string(lines.size() - 1));
  }
  std::vector<double> cells;
  cells.reserve(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto fields = split(lines[i + 1], ',');
    if (fields.size() != size) {
      throw Error(ErrorCode::HeaderMismatch, "row " + std::to_string(i) + " has " +
                                                 std::to_string(fields.size()) + " columns");
    }
    for (auto f : fields) {
      double v = 0.0;
      if (!parse_number(f, v)) {
        throw Error(ErrorCode::HeaderMismatch, "unparseable cell '" + std::string(f) + "'");
      }
      cells.push_back(v);
    }
  }
  FieldMatrix m(kind, size, std::move(cells), mode);
  if (const auto problem = check_invariants(m)) {
    throw Error(ErrorCode::HeaderMismatch, "cells contradict header kind: " + *problem);
  }
  return m;
}

FieldMatrix read_matrix_csv(const fs::path& path) { return parse_matrix_csv(read_text_file(path)); }

std::string ucr_text(std::span<const TimeSeries> series) {
  std::string out;
  for (const auto& s : series) {
    out += std::to_string(s.label.value_or(0));
    for (double v : s.values) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

void write_ucr(std::span<const TimeSeries> series, const fs::path& path) {
  write_text_file(path, ucr_text(series));
}

std::uint8_t to_pixel(double value, double lo, double hi) {
  const double t = std::clamp((value - lo) / (hi - lo), 0.0, 1.0);
  return static_cast<std::uint8_t>(std::floor(t * 255.0 + 0.5));
}

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const noexcept {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void write_png(const fs::path& path, std::size_t width, std::size_t height, int color_type,
               std::size_t channels, const std::vector<std::uint8_t>& pixels) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorCode::IoFailure, "libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorCode::IoFailure, "PNG encoding failed for " + path.string());
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
               color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::size_t row = 0; row < height; ++row) {
    png_write_row(png, pixels.data() + row * width * channels);
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace

void render_png(const FieldMatrix& m, const fs::path& path) {
  const auto [lo, hi] = kind_range(m.kind());
  std::vector<std::uint8_t> pixels(m.cells().size());
  for (std::size_t i = 0; i < pixels.size(); ++i) pixels[i] = to_pixel(m.cells()[i], lo, hi);
  write_png(path, m.size(), m.size(), PNG_COLOR_TYPE_GRAY, 1, pixels);
}

void render_png(const CompoundImage& image, const fs::path& path) {
  const std::size_t n = image.size;
  std::vector<std::uint8_t> pixels(n * n * 3);
  const FieldMatrix* channels[3] = {&image.gasf, &image.gadf, &image.mtf};
  for (std::size_t c = 0; c < 3; ++c) {
    const auto [lo, hi] = kind_range(channels[c]->kind());
    for (std::size_t i = 0; i < n * n; ++i) {
      pixels[i * 3 + c] = to_pixel(channels[c]->cells()[i], lo, hi);
    }
  }
  write_png(path, n, n, PNG_COLOR_TYPE_RGB, 3, pixels);
}

DecodedPng read_png(const fs::path& path) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str())) {
    throw Error(ErrorCode::IoFailure, "cannot read PNG " + path.string() + ": " + image.message);
  }
  DecodedPng out;
  out.width = image.width;
  out.height = image.height;
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  out.channels = color ? 3 : 1;
  out.pixels.resize(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, out.pixels.data(), 0, nullptr)) {
    png_image_free(&image);
    throw Error(ErrorCode::IoFailure, "PNG decode failed for " + path.string());
  }
  return out;
}

std::string model_text(const DaModel& model) {
  const std::size_t d = model.input_dim;
  const std::size_t h = model.hidden_dim;
  std::string out = "TSIMG-DA 1\n" + std::to_string(d) + " " + std::to_string(h) + "\n";
  auto emit_row = [&out](const double* values, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (i) out += ' ';
      out += format_double(values[i]);
    }
    out += '\n';
  };
  for (std::size_t j = 0; j < h; ++j) emit_row(model.encoder_weights.data() + j * d, d);
  emit_row(model.encoder_bias.data(), h);
  for (std::size_t r = 0; r < d; ++r) emit_row(model.decoder_weights.data() + r * h, h);
  emit_row(model.decoder_bias.data(), d);
  return out;
}

DaModel parse_model(const std::string& text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines.front() != "TSIMG-DA 1") {
    throw Error(ErrorCode::BadMagic, "expected 'TSIMG-DA 1' on the first line");
  }
  DaModel m;
  {
    const auto dims = split(lines.size() > 1 ? lines[1] : std::string_view{}, ' ');
    double d = 0.0;
    double h = 0.0;
    if (dims.size() != 2 || !parse_number(dims[0], d) || !parse_number(dims[1], h) || d < 1 ||
        h < 1) {
      throw Error(ErrorCode::DimMismatch, "second line must be 'd h'");
    }
    m.input_dim = static_cast<std::size_t>(d);
    m.hidden_dim = static_cast<std::size_t>(h);
  }
  const std::size_t d = m.input_dim;
  const std::size_t h = m.hidden_dim;
  if (lines.size() != 2 + h + 1 + d + 1) {
    throw Error(ErrorCode::DimMismatch, "expected " + std::to_string(2 + h + 1 + d + 1) +
                                            " lines for d=" + std::to_string(d) +
                                            " h=" + std::to_string(h) + ", found " +
                                            std::to_string(lines.size()));
  }
  std::size_t line = 2;
  auto read_row = [&](std::vector<double>& dest, std::size_t count) {
    const auto fields = split(lines[line], ' ');
    if (fields.size() != count) {
      throw Error(ErrorCode::DimMismatch, "line " + std::to_string(line + 1) + " has " +
                                              std::to_string(fields.size()) + " values, expected " +
                                              std::to_string(count));
    }
    for (auto f : fields) {
      double v = 0.0;
      if (!parse_number(f, v) || !std::isfinite(v)) {
        throw Error(ErrorCode::DimMismatch, "bad value on line " + std::to_string(line + 1));
      }
      dest.push_back(v);
    }
    ++line;
  };
  m.encoder_weights.reserve(h * d);
  for (std::size_t j = 0; j < h; ++j) read_row(m.encoder_weights, d);
  read_row(m.encoder_bias, h);
  m.decoder_weights.reserve(d * h);
  for (std::size_t r = 0; r < d; ++r) read_row(m.decoder_weights, h);
  read_row(m.decoder_bias, d);
  return m;
}

void save_model(const DaModel& model, const fs::path& path) {
  write_text_file(path, model_text(model));
}

DaModel load_model(const fs::path& path) { return parse_model(read_text_file(path)); }

}  // namespace tsimg
