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
 * @file config.hpp
 * Experiment configuration: model geometry, training hyperparameters and
 * data selection, read from and written to JSON.
 */
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sqnn/dataset.hpp"
#include "sqnn/model.hpp"
#include "sqnn/training.hpp"

namespace sqnn {

struct DataConfig {
    /// Directory with the four MNIST IDX files; empty means SQNN_DATA_DIR.
    std::string dir;
    /// Random subset sizes; 0 keeps the whole split.
    std::size_t train_limit = 0;
    std::size_t val_limit = 0;
    DigitPair digits;

    friend bool operator==(const DataConfig &, const DataConfig &) = default;
};

struct ExperimentConfig {
    std::string name;
    ModelGeometry model;
    TrainConfig training;
    DataConfig data;

    friend bool operator==(const ExperimentConfig &, const ExperimentConfig &) = default;
};

/// Strict parse: unknown keys, wrong types and out-of-range values raise
/// ConfigError with the dotted path of the field, e.g. "model.extractors[2].capacity".
[[nodiscard]] ExperimentConfig config_from_json(const nlohmann::json &j);
[[nodiscard]] nlohmann::json to_json(const ExperimentConfig &config);

[[nodiscard]] ExperimentConfig parse_config(std::string_view text);
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path &path);

/// Built-in experiments: 4qb_3blk, 9qb_3blk, 16qb_3blk, the *_6blk variants,
/// 16qb_sqnn, 36qb_sqnn, 64qb_sqnn and 16qb_uneven_sqnn.
[[nodiscard]] std::vector<std::string> preset_names();
[[nodiscard]] ExperimentConfig preset(std::string_view name);

} // namespace sqnn
