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
#include <cstring>
#include <filesystem>
#include <limits>

#include "helpers.hpp"
#include "tsimg/gaf.hpp"
#include "tsimg/io.hpp"
#include "tsimg/mtf.hpp"

using namespace tsimg;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "tsimg_io_test";
  fs::create_directories(dir);
  return dir / name;
}

bool bitwise_equal(std::span<const double> a, std::span<const double> b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("matrix CSV round-trips bit-exactly") {
  Rng rng(1);
  const auto g = encode_gaf(testutil::random_series(rng, 32), RescaleMode::Unit, {}, FieldKind::Gasf);
  const auto path = scratch("gasf.csv");
  write_matrix_csv(g, path);
  const auto back = read_matrix_csv(path);
  CHECK(back.kind() == FieldKind::Gasf);
  CHECK(back.rescale_mode() == RescaleMode::Unit);
  CHECK(bitwise_equal(back.cells(), g.cells()));

  const auto m = encode_mtf(testutil::random_series(rng, 20), 4, 0);
  const auto mback = parse_matrix_csv(matrix_csv_text(m));
  CHECK(mback == m);
  CHECK_FALSE(mback.rescale_mode());
}

TEST_CASE("format_double round-trips awkward values") {
  Rng rng(2);
  for (int i = 0; i < 10000; ++i) {
    const double v = uniform(rng, -1, 1) * std::pow(10.0, uniform(rng, -300, 300));
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
  CHECK(std::strtod(format_double(std::numeric_limits<double>::denorm_min()).c_str(), nullptr) ==
        std::numeric_limits<double>::denorm_min());
}

TEST_CASE("matrix CSV validation") {
  CHECK_ERROR(parse_matrix_csv("# kind=GASF size=2 rescale=unit\n1,0.5\n0.4,1\n"),
              ErrorCode::HeaderMismatch);
  CHECK_ERROR(parse_matrix_csv("# kind=GASF size=3 rescale=unit\n1,0.5\n0.5,1\n"),
              ErrorCode::HeaderMismatch);
  CHECK_ERROR(parse_matrix_csv("# kind=GASF size=2 rescale=unit\n1,0.5,0\n0.5,1\n"),
              ErrorCode::HeaderMismatch);
  CHECK_ERROR(parse_matrix_csv("1,0.5\n0.5,1\n"), ErrorCode::HeaderMismatch);
  CHECK_ERROR(parse_matrix_csv("# kind=RP size=2 rescale=unit\n1,0.5\n0.5,1\n"),
              ErrorCode::HeaderMismatch);
  CHECK_ERROR(parse_matrix_csv("# kind=MTF size=2 rescale=none\n1,x\n0.5,1\n"),
              ErrorCode::HeaderMismatch);
  CHECK(parse_matrix_csv("# kind=MTF size=2 rescale=none\r\n1,0\r\n0.5,1\r\n").size() == 2);
  CHECK_ERROR(read_matrix_csv("/nonexistent/m.csv"), ErrorCode::IoFailure);
}

TEST_CASE("pixel mapping") {
  CHECK(to_pixel(-1.0, -1, 1) == 0);
  CHECK(to_pixel(1.0, -1, 1) == 255);
  CHECK(to_pixel(0.0, -1, 1) == 128);
  CHECK(to_pixel(0.5, 0, 1) == 128);
  CHECK(to_pixel(0.0, 0, 1) == 0);
  CHECK(to_pixel(1.0, 0, 1) == 255);
  int previous = 0;
  for (int k = -1000; k <= 1000; ++k) {
    const int p = to_pixel(k / 1000.0, -1, 1);
    CHECK(p >= previous);
    previous = p;
  }
}

TEST_CASE("grayscale PNG golden pixels") {
  const FieldMatrix m(FieldKind::Gadf, 2, {0, 1, -1, 0}, RescaleMode::Unit);
  const auto path = scratch("gadf.png");
  render_png(m, path);
  const auto png = read_png(path);
  CHECK(png.width == 2);
  CHECK(png.height == 2);
  CHECK(png.channels == 1);
  CHECK(png.pixels == std::vector<std::uint8_t>{128, 255, 0, 128});

  const FieldMatrix mtf(FieldKind::Mtf, 2, {0, 0.5, 1, 0.25});
  render_png(mtf, path);
  CHECK(read_png(path).pixels == std::vector<std::uint8_t>{0, 128, 255, 64});
  // A regular file in place of the parent directory makes the path unwritable.
  write_text_file(scratch("not_a_dir"), "x");
  CHECK_ERROR(render_png(m, scratch("not_a_dir") / "x.png"), ErrorCode::IoFailure);
}

TEST_CASE("compound PNG decomposes into its channels") {
  Rng rng(3);
  const auto img = compound_image(testutil::random_series(rng, 40), 20, 8, RescaleMode::Symmetric);
  const auto path = scratch("compound.png");
  render_png(img, path);
  const auto png = read_png(path);
  REQUIRE(png.channels == 3);
  REQUIRE(png.width == 20);
  const FieldMatrix* channels[3] = {&img.gasf, &img.gadf, &img.mtf};
  for (std::size_t c = 0; c < 3; ++c) {
    const auto [lo, hi] = kind_range(channels[c]->kind());
    for (std::size_t i = 0; i < 400; ++i) {
      const double recovered = lo + (hi - lo) * png.pixels[i * 3 + c] / 255.0;
      CHECK(std::abs(recovered - channels[c]->cells()[i]) <= (hi - lo) / 510.0 + 1e-15);
    }
  }
}

TEST_CASE("model files round-trip bit-exactly") {
  auto m = da_init(16, 4, 1);
  Rng rng(4);
  for (auto& b : m.encoder_bias) b = standard_normal(rng);
  for (auto& b : m.decoder_bias) b = standard_normal(rng) * 1e-200;
  const auto path = scratch("model.txt");
  save_model(m, path);
  const auto back = load_model(path);
  CHECK(back == m);
  CHECK(bitwise_equal(back.decoder_bias, m.decoder_bias));
}

TEST_CASE("model file errors") {
  const auto text = model_text(da_init(3, 2, 1));
  CHECK_ERROR(parse_model("TSIMG-DA 2\n" + text.substr(text.find('\n') + 1)), ErrorCode::BadMagic);
  CHECK_ERROR(parse_model(""), ErrorCode::BadMagic);
  CHECK_ERROR(parse_model(text.substr(0, text.size() / 2)), ErrorCode::DimMismatch);
  auto missing_value = text;
  missing_value.erase(missing_value.rfind(' '));
  missing_value += "\n";
  CHECK_ERROR(parse_model(missing_value), ErrorCode::DimMismatch);
  CHECK_ERROR(load_model("/nonexistent/model.txt"), ErrorCode::IoFailure);
}
