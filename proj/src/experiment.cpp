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
#include "sqnn/experiment.hpp"

#include <cstdio>
#include <cstdlib>

#include "sqnn/error.hpp"
#include "sqnn/rng.hpp"

namespace sqnn {

namespace {

constexpr std::uint64_t kTrainSubsetStream = 2;
constexpr std::uint64_t kTestSubsetStream = 3;

std::string format(const char *fmt, auto... args) {
    char buf[128];
    const int n = std::snprintf(buf, sizeof buf, fmt, args...);
    return std::string(buf, static_cast<std::size_t>(n));
}

} // namespace

std::string_view to_string(Split split) { return split == Split::Train ? "train" : "test"; }

Split parse_split(std::string_view text) {
    if (text == "train") {
        return Split::Train;
    }
    if (text == "test" || text == "val") {
        return Split::Test;
    }
    throw ConfigError("split", "unknown split '" + std::string(text) + "', expected train or test");
}

std::filesystem::path resolve_data_dir(const ExperimentConfig &config,
                                       const std::string &override_dir) {
    if (!override_dir.empty()) {
        return override_dir;
    }
    if (!config.data.dir.empty()) {
        return config.data.dir;
    }
    if (const char *env = std::getenv("SQNN_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    throw DataError("no data directory: set data.dir, pass --data-dir or export SQNN_DATA_DIR");
}

ImageSet load_split(const ExperimentConfig &config, const std::filesystem::path &dir,
                    Split split, std::optional<std::size_t> limit) {
    const bool train = split == Split::Train;
    const auto prefix = train ? "train" : "t10k";
    const auto raw = load_idx(dir / (std::string(prefix) + "-images-idx3-ubyte"),
                              dir / (std::string(prefix) + "-labels-idx1-ubyte"));
    const auto filtered = filter_and_relabel(raw, config.data.digits);
    Rng rng(config.training.seed, train ? kTrainSubsetStream : kTestSubsetStream);
    const auto n = limit.value_or(train ? config.data.train_limit : config.data.val_limit);
    const auto subset = random_subset(filtered, n, rng);
    return downscale(subset, config.model.image);
}

std::string metrics_csv_header() {
    return std::string(kMetricsSchema) + "\nepoch,mean_train_loss,val_accuracy\n";
}

std::string metrics_csv_row(const EpochMetrics &m) {
    return format("%d,%.17g,%.17g\n", m.epoch, m.mean_train_loss, m.val_accuracy);
}

std::string timing_csv_header() { return "epoch,seconds\n"; }

std::string timing_csv_row(const EpochMetrics &m) {
    return format("%d,%.3f\n", m.epoch, m.seconds);
}

} // namespace sqnn
