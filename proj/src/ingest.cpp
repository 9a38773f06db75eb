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

#include "tsimg/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "tsimg/error.hpp"
#include "tsimg/random.hpp"

namespace tsimg {

namespace {

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

std::vector<std::string> split_fields(const std::string& line, bool comma) {
  std::vector<std::string> fields;
  if (comma) {
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
  } else {
    std::istringstream in(line);
    std::string field;
    while (in >> field) fields.push_back(field);
  }
  return fields;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  if (*begin == '+') ++begin;
  const auto result = std::from_chars(begin, end, out);
  return result.ec == std::errc{} && result.ptr == end && std::isfinite(out);
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

std::size_t Dataset::series_length() const noexcept {
  if (!train.empty()) return train.front().length();
  if (!test.empty()) return test.front().length();
  return 0;
}

std::vector<TimeSeries> parse_ucr_text(const std::string& text) {
  std::vector<TimeSeries> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::size_t expected_fields = 0;
  bool comma = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    if (expected_fields == 0) comma = line.find(',') != std::string::npos;
    const auto fields = split_fields(line, comma);
    if (expected_fields == 0) {
      if (fields.size() < 2) malformed(line_no, "need a label and at least one value");
      expected_fields = fields.size();
    } else if (fields.size() != expected_fields) {
      malformed(line_no, "expected " + std::to_string(expected_fields) + " fields, found " +
                             std::to_string(fields.size()));
    }
    double label = 0.0;
    if (!parse_double(fields[0], label)) malformed(line_no, "unparseable label '" + fields[0] + "'");
    TimeSeries series;
    series.label = static_cast<int>(std::trunc(label));
    series.values.resize(fields.size() - 1);
    for (std::size_t k = 1; k < fields.size(); ++k) {
      if (!parse_double(fields[k], series.values[k - 1])) {
        malformed(line_no, "unparseable number '" + trim(fields[k]) + "'");
      }
    }
    out.push_back(std::move(series));
  }
  if (out.empty()) throw Error(ErrorCode::EmptyFile, "no data rows");
  return out;
}

std::vector<TimeSeries> parse_ucr(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_ucr_text(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void validate_uniform(std::span<const TimeSeries> series) {
  if (series.empty()) return;
  const std::size_t n = series.front().length();
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i].length() != n) {
      throw Error(ErrorCode::LengthMismatch, "series " + std::to_string(i) + " has length " +
                                                 std::to_string(series[i].length()) +
                                                 ", expected " + std::to_string(n));
    }
    if (!series[i].label) {
      throw Error(ErrorCode::InvalidArgument, "series " + std::to_string(i) + " has no label");
    }
  }
}

SyntheticFamily parse_synthetic_family(const std::string& id) {
  if (id == "sin2" || id == "sinusoid") return SyntheticFamily::Sinusoid;
  if (id == "cbf") return SyntheticFamily::Cbf;
  throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + id + "'");
}

namespace {

// Class 0 completes 2 cycles over the series, class 1 completes 5.
TimeSeries sinusoid(Rng& rng, int label, std::size_t length, double noise) {
  const double cycles = label == 0 ? 2.0 : 5.0;
  const double phase = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  TimeSeries s;
  s.label = label;
  s.values.resize(length);
  for (std::size_t t = 0; t < length; ++t) {
    const double angle = 2.0 * std::numbers::pi * cycles * static_cast<double>(t) /
                         static_cast<double>(length);
    s.values[t] = std::sin(angle + phase) + noise * standard_normal(rng);
  }
  return s;
}

// Saito's cylinder-bell-funnel with onset/duration scaled from the classic
// 128-point layout: a in [L/8, L/4], b - a in [L/4, 3L/4].
TimeSeries cbf(Rng& rng, int label, std::size_t length) {
  const double len = static_cast<double>(length);
  const double a = std::floor(uniform(rng, len / 8.0, len / 4.0));
  const double b = std::min(len - 1.0, a + std::floor(uniform(rng, len / 4.0, 3.0 * len / 4.0)));
  const double amplitude = 6.0 + standard_normal(rng);
  TimeSeries s;
  s.label = label;
  s.values.resize(length);
  for (std::size_t i = 0; i < length; ++i) {
    const double t = static_cast<double>(i);
    const bool inside = t >= a && t <= b;
    double shape = 0.0;
    if (inside) {
      switch (label) {
        case 0: shape = 1.0; break;
        case 1: shape = (t - a) / (b - a); break;
        default: shape = (b - t) / (b - a); break;
      }
    }
    s.values[i] = amplitude * shape + standard_normal(rng);
  }
  return s;
}

}  // namespace

Dataset gen_synthetic(const SyntheticSpec& spec, std::size_t count, std::size_t length,
                      std::uint64_t seed) {
  if (count < 2) throw Error(ErrorCode::InvalidArgument, "synthetic count must be >= 2");
  if (length < 8) throw Error(ErrorCode::InvalidArgument, "synthetic length must be >= 8");
  const int classes = spec.family == SyntheticFamily::Sinusoid ? 2 : 3;
  Rng rng(seed);
  auto draw = [&](std::size_t index) {
    const int label = static_cast<int>(index % static_cast<std::size_t>(classes));
    return spec.family == SyntheticFamily::Sinusoid ? sinusoid(rng, label, length, spec.noise)
                                                    : cbf(rng, label, length);
  };
  Dataset out;
  out.name = spec.family == SyntheticFamily::Sinusoid ? "sin2" : "cbf";
  out.train.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.train.push_back(draw(i));
  out.test.reserve(spec.test_count);
  for (std::size_t i = 0; i < spec.test_count; ++i) out.test.push_back(draw(i));
  return out;
}

Dataset merge_datasets(std::span<const Dataset> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "nothing to merge");
  const std::size_t n = parts.front().series_length();
  Dataset out;
  int next_label = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Dataset& part = parts[k];
    if (part.series_length() != n) {
      throw Error(ErrorCode::LengthMismatch, "dataset '" + part.name + "' has length " +
                                                 std::to_string(part.series_length()) +
                                                 ", expected " + std::to_string(n));
    }
    validate_uniform(part.train);
    validate_uniform(part.test);
    std::set<int> labels;
    for (const auto& s : part.train) labels.insert(*s.label);
    for (const auto& s : part.test) labels.insert(*s.label);
    std::map<int, int> remap;
    for (int label : labels) remap[label] = next_label++;
    for (const auto& s : part.train) out.train.push_back({s.values, remap.at(*s.label)});
    for (const auto& s : part.test) out.test.push_back({s.values, remap.at(*s.label)});
    out.name += (k == 0 ? "" : "+") + part.name;
  }
  return out;
}

Dataset resample_dataset(const Dataset& dataset, std::size_t length) {
  Dataset out{dataset.name, {}, {}};
  auto convert = [&](const TimeSeries& s) {
    return TimeSeries{paa(s.values, PaaConfig{length}), s.label};
  };
  for (const auto& s : dataset.train) out.train.push_back(convert(s));
  for (const auto& s : dataset.test) out.test.push_back(convert(s));
  return out;
}

}  // namespace tsimg
