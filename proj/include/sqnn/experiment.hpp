// Copyright 2026 The SQNN Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file experiment.hpp
 * Glue between a config file and the data the model trains on.
 */
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "sqnn/config.hpp"
#include "sqnn/dataset.hpp"
#include "sqnn/training.hpp"

namespace sqnn {

enum class Split { Train, Test };

/// Train split: MNIST training files, subset to data.train_limit.
/// Test split: MNIST t10k files, subset to data.val_limit; used for validation.
[[nodiscard]] std::string_view to_string(Split split);
[[nodiscard]] Split parse_split(std::string_view text);

/**
 * @brief First non-empty of `override_dir`, `config.data.dir` and the
 * SQNN_DATA_DIR environment variable. Throws DataError if none is set.
 */
[[nodiscard]] std::filesystem::path resolve_data_dir(const ExperimentConfig &config,
                                                     const std::string &override_dir = {});

/**
 * @brief Load, filter, subset and downscale one split for `config`.
 *
 * The subset is drawn before downscaling from a generator seeded with the
 * training seed, so models with different geometry see the same samples.
 * `limit` replaces the configured subset size when given (0 = whole split).
 */
[[nodiscard]] ImageSet load_split(const ExperimentConfig &config,
                                  const std::filesystem::path &dir, Split split,
                                  std::optional<std::size_t> limit = std::nullopt);

inline constexpr std::string_view kMetricsSchema = "# schema: sqnn-metrics v1";

/// Schema line plus column header, newline terminated.
[[nodiscard]] std::string metrics_csv_header();
[[nodiscard]] std::string metrics_csv_row(const EpochMetrics &m);
[[nodiscard]] std::string timing_csv_header();
[[nodiscard]] std::string timing_csv_row(const EpochMetrics &m);

} // namespace sqnn
