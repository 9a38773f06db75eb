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
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tsimg/core.hpp"

namespace tsimg {

struct Dataset {
  std::string name;
  std::vector<TimeSeries> train;
  std::vector<TimeSeries> test;

  /// Common length of every series; 0 for an empty dataset.
  std::size_t series_length() const noexcept;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Reads label-first rows. The delimiter (comma or whitespace) is sniffed from
/// the first nonempty line and must stay consistent. Labels such as "1.0" are
/// truncated to integers.
std::vector<TimeSeries> parse_ucr(const std::filesystem::path& path);
std::vector<TimeSeries> parse_ucr_text(const std::string& text);

/// Throws LengthMismatch unless every series has the same length and a label.
void validate_uniform(std::span<const TimeSeries> series);

enum class SyntheticFamily {
  Sinusoid,  // two classes, different frequencies, random phase, Gaussian noise
  Cbf,       // cylinder / bell / funnel, three classes
};

SyntheticFamily parse_synthetic_family(const std::string& id);

struct SyntheticSpec {
  SyntheticFamily family = SyntheticFamily::Sinusoid;
  double noise = 0.1;            // sinusoid noise standard deviation
  std::size_t test_count = 0;    // extra series drawn after the training pool
};

/// Deterministic for a fixed seed. Labels cycle 0, 1, (2), ... so classes are
/// balanced; the training pool is drawn first, then the test pool.
Dataset gen_synthetic(const SyntheticSpec& spec, std::size_t count, std::size_t length,
                      std::uint64_t seed);

/// Concatenates the pools. Labels are re-numbered densely per source dataset
/// (sorted distinct labels of part k follow those of part k-1) so classes from
/// different sources never collide.
Dataset merge_datasets(std::span<const Dataset> parts);

/// PAA of every series to `length` (no-op when lengths already match).
Dataset resample_dataset(const Dataset& dataset, std::size_t length);

}  // namespace tsimg
