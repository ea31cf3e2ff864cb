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
 * @file checkpoint.hpp
 * Self-describing JSON snapshots of a model and its training progress.
 *
 * The file carries a SHA-256 digest of its own payload; any edit to the
 * payload is detected on load.
 */
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sqnn/config.hpp"
#include "sqnn/model.hpp"
#include "sqnn/training.hpp"

namespace sqnn {

inline constexpr int kCheckpointFormatVersion = 1;

struct Checkpoint {
    ExperimentConfig config;
    /// Parameters this checkpoint evaluates with.
    SqnnModel model;
    /// Best model so far, kept in "last" checkpoints so a resumed run can
    /// still report it.
    std::optional<SqnnModel> best_model;
    int epochs_done = 0;
    double best_accuracy = -1.0;
    int best_epoch = 0;
    std::string rng_state;
    /// Wall-clock seconds are not stored.
    std::vector<EpochMetrics> history;
};

[[nodiscard]] nlohmann::json model_to_json(const SqnnModel &model);
/// Throws CheckpointError if the description is malformed or inconsistent.
[[nodiscard]] SqnnModel model_from_json(const nlohmann::json &j);

/// Lowercase hex SHA-256 of `bytes`.
[[nodiscard]] std::string sha256_hex(const std::string &bytes);

[[nodiscard]] std::string serialize_checkpoint(const Checkpoint &checkpoint);
/// Throws CheckpointError on malformed JSON, unknown format version, hash
/// mismatch or an inconsistent model.
[[nodiscard]] Checkpoint deserialize_checkpoint(const std::string &text);

void save_checkpoint(const Checkpoint &checkpoint, const std::filesystem::path &path);
[[nodiscard]] Checkpoint load_checkpoint(const std::filesystem::path &path);

/// Snapshot of a training run: `best` selects the best model rather than
/// the current one as the checkpoint's model.
[[nodiscard]] Checkpoint make_checkpoint(const ExperimentConfig &config,
                                         const TrainingState &state, bool best);
[[nodiscard]] TrainingState resume_state(const Checkpoint &checkpoint);

} // namespace sqnn
