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

#include <filesystem>

#include "helpers.hpp"
#include "tsimg/ingest.hpp"
#include "tsimg/io.hpp"

using namespace tsimg;

TEST_CASE("ucr rows, comma and whitespace") {
  const auto a = parse_ucr_text("2,0.1,0.2,0.3\n");
  REQUIRE(a.size() == 1);
  CHECK(a[0].label == 2);
  CHECK(a[0].values == std::vector<double>{0.1, 0.2, 0.3});

  const auto b = parse_ucr_text("1 0.5 0.5\n\n  -1.0\t2e-1   3\r\n");
  REQUIRE(b.size() == 2);
  CHECK(b[0].label == 1);
  CHECK(b[0].values == std::vector<double>{0.5, 0.5});
  CHECK(b[1].label == -1);
  CHECK(b[1].values == std::vector<double>{0.2, 3});
}

TEST_CASE("ucr malformed input reports the line") {
  try {
    parse_ucr_text("1,1,2,3\n2,1,2,3,4\n");
    FAIL("expected MalformedLine");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedLine);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_ERROR(parse_ucr_text("1,1,x\n"), ErrorCode::MalformedLine);
  CHECK_ERROR(parse_ucr_text("1,1,nan\n"), ErrorCode::MalformedLine);
  CHECK_ERROR(parse_ucr_text("1\n"), ErrorCode::MalformedLine);
  CHECK_ERROR(parse_ucr_text("\n \n"), ErrorCode::EmptyFile);
  CHECK_ERROR(parse_ucr("/nonexistent/file.tsv"), ErrorCode::IoFailure);
}

TEST_CASE("ucr writer round-trips") {
  Rng rng(2);
  std::vector<TimeSeries> series;
  for (int i = 0; i < 12; ++i) {
    auto s = testutil::random_series(rng, 17);
    s.label = i % 3 - 1;
    series.push_back(std::move(s));
  }
  CHECK(parse_ucr_text(ucr_text(series)) == series);
  const auto path = std::filesystem::temp_directory_path() / "tsimg_ingest_test.csv";
  write_ucr(series, path);
  CHECK(parse_ucr(path) == series);
  std::filesystem::remove(path);
}

TEST_CASE("synthetic generators are deterministic and balanced") {
  const SyntheticSpec sin{SyntheticFamily::Sinusoid, 0.1, 3};
  const auto a = gen_synthetic(sin, 4, 64, 7);
  const auto b = gen_synthetic(sin, 4, 64, 7);
  CHECK(a == b);
  CHECK(a.train.size() == 4);
  CHECK(a.test.size() == 3);
  CHECK(a.series_length() == 64);
  CHECK(gen_synthetic(sin, 4, 64, 8) != a);

  const auto c = gen_synthetic({SyntheticFamily::Cbf}, 30, 128, 1);
  int counts[3] = {0, 0, 0};
  for (const auto& s : c.train) {
    REQUIRE(s.label);
    REQUIRE(*s.label >= 0);
    REQUIRE(*s.label <= 2);
    ++counts[*s.label];
  }
  CHECK(counts[0] == 10);
  CHECK(counts[1] == 10);
  CHECK(counts[2] == 10);

  CHECK_ERROR(gen_synthetic(sin, 4, 4, 1), ErrorCode::InvalidArgument);
  CHECK_ERROR(parse_synthetic_family("gunpoint"), ErrorCode::UnknownGenerator);
  CHECK(parse_synthetic_family("sin2") == SyntheticFamily::Sinusoid);
}

TEST_CASE("merge concatenates and keeps classes apart") {
  const auto a = gen_synthetic({SyntheticFamily::Sinusoid}, 10, 64, 1);
  const auto b = gen_synthetic({SyntheticFamily::Cbf}, 20, 64, 2);
  const Dataset parts[] = {a, b};
  const auto m = merge_datasets(parts);
  CHECK(m.train.size() == 30);
  CHECK(m.name == "sin2+cbf");
  for (std::size_t i = 0; i < 10; ++i) CHECK(m.train[i].label == a.train[i].label);
  for (std::size_t i = 0; i < 20; ++i) CHECK(*m.train[10 + i].label == *b.train[i].label + 2);

  const Dataset single[] = {a};
  CHECK(merge_datasets(single) == a);

  const auto c = gen_synthetic({SyntheticFamily::Sinusoid}, 10, 128, 1);
  const Dataset mismatched[] = {a, c};
  CHECK_ERROR(merge_datasets(mismatched), ErrorCode::LengthMismatch);
}

TEST_CASE("uniformity and resampling") {
  const std::vector<TimeSeries> bad{{{1, 2, 3}, 0}, {{1, 2}, 1}};
  CHECK_ERROR(validate_uniform(bad), ErrorCode::LengthMismatch);
  const auto d = gen_synthetic({SyntheticFamily::Sinusoid, 0.1, 2}, 4, 64, 3);
  const auto r = resample_dataset(d, 16);
  CHECK(r.series_length() == 16);
  CHECK(r.test.size() == 2);
  CHECK(r.train[1].label == d.train[1].label);
}
