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
 * @file training.hpp
 * Losses, SGD and the mini-batch loop for end-to-end training of an SqnnModel.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqnn/dataset.hpp"
#include "sqnn/gradients.hpp"
#include "sqnn/model.hpp"

namespace sqnn {

class Rng;

enum class LossKind { MSE, Hinge };

[[nodiscard]] std::string_view to_string(LossKind kind);
/// Accepts "mse" and "hinge"; anything else is a ConfigError.
[[nodiscard]] LossKind parse_loss(std::string_view text);

struct LossValue {
    double value = 0.0;
    double gradient = 0.0;
};

/// Label must be -1 or +1 (ValidationError otherwise).
[[nodiscard]] LossValue loss(LossKind kind, double prediction, int label);

/// theta - r * g elementwise; ShapeError on length mismatch.
[[nodiscard]] ParamVector sgd_step(const ParamVector &params, const GradientVector &grads,
                                   double learning_rate);

struct TrainConfig {
    double learning_rate = 0.02;
    int batch_size = 32;
    int epochs = 10;
    LossKind loss = LossKind::MSE;
    std::uint64_t seed = 0;
    /// Worker threads for per-sample work; results do not depend on it.
    int threads = 1;

    /// Throws ConfigError naming the offending field.
    void validate() const;
    friend bool operator==(const TrainConfig &, const TrainConfig &) = default;
};

/// Independent uniform [-pi, pi] draws: extractors in order, then predictor.
void initialize_parameters(SqnnModel &model, Rng &rng);

struct Sample {
    std::span<const double> image;
    int label = 1;
};

/// Gradients for every parameter group, in model order.
struct ModelGradient {
    std::vector<GradientVector> extractors;
    GradientVector predictor;
};

/// Loss and full gradient for one sample.
[[nodiscard]] std::pair<LossValue, ModelGradient>
sample_gradient(const SqnnModel &model, const Sample &sample, LossKind kind);

/**
 * @brief One SGD update from the mean gradient over `batch`.
 *
 * Per-sample work may run on `config.threads` workers; the average is
 * accumulated in batch order so the result does not depend on the thread
 * count. Returns the mean pre-update loss.
 */
double train_batch(SqnnModel &model, std::span<const Sample> batch,
                   const TrainConfig &config);

/// Fraction of samples whose sign(output) equals the label, sign(0) = +1.
[[nodiscard]] double evaluate_accuracy(const SqnnModel &model, const ImageSet &set,
                                       int threads = 1);

struct EpochMetrics {
    int epoch = 0;
    double mean_train_loss = 0.0;
    double val_accuracy = 0.0;
    double seconds = 0.0;
};

/// Everything needed to continue a run exactly where it stopped.
struct TrainingState {
    SqnnModel model;
    SqnnModel best_model;
    std::string rng_state;
    int epochs_done = 0;
    double best_accuracy = -1.0;
    int best_epoch = 0;
    std::vector<EpochMetrics> history;
};

struct TrainObserver {
    /// Called after each epoch with the state as of the end of that epoch.
    std::function<void(const EpochMetrics &, const TrainingState &)> on_epoch;
    /// Called when validation accuracy improves on the best so far.
    std::function<void(const TrainingState &)> on_best;
};

/// Fresh state: parameters drawn from the seeded generator.
[[nodiscard]] TrainingState start_training(const SqnnModel &model, const TrainConfig &config);

/**
 * @brief Run epochs `state.epochs_done + 1 .. config.epochs`.
 *
 * Each epoch draws one permutation of the training set, walks it in batches
 * of `batch_size` (the last may be short), then scores the validation set.
 */
TrainingState train(TrainingState state, const ImageSet &train_set, const ImageSet &val_set,
                    const TrainConfig &config, const TrainObserver &observer = {});

} // namespace sqnn
