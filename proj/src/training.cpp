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
#include "sqnn/training.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>

#include "sqnn/error.hpp"
#include "sqnn/parallel.hpp"
#include "sqnn/rng.hpp"

namespace sqnn {

namespace {

// Stream ids keep parameter draws and epoch shuffles independent.
constexpr std::uint64_t kInitStream = 0;
constexpr std::uint64_t kShuffleStream = 1;

void accumulate(GradientVector &sum, const GradientVector &g) {
    for (std::size_t k = 0; k < g.size(); ++k) {
        sum[k] += g[k];
    }
}

void scale(GradientVector &g, double factor) {
    for (auto &v : g.values) {
        v *= factor;
    }
}

ModelGradient zero_gradient(const SqnnModel &model) {
    ModelGradient g;
    for (const auto &e : model.extractors) {
        g.extractors.push_back({std::vector<double>(e.params.values.size(), 0.0)});
    }
    if (model.predictor) {
        g.predictor.values.assign(model.predictor->params.values.size(), 0.0);
    }
    return g;
}

} // namespace

std::string_view to_string(LossKind kind) {
    return kind == LossKind::MSE ? "mse" : "hinge";
}

LossKind parse_loss(std::string_view text) {
    if (text == "mse") {
        return LossKind::MSE;
    }
    if (text == "hinge") {
        return LossKind::Hinge;
    }
    throw ConfigError("loss", "unknown loss '" + std::string(text) + "', expected mse or hinge");
}

LossValue loss(LossKind kind, double prediction, int label) {
    if (label != 1 && label != -1) {
        throw ValidationError("label must be -1 or +1, got " + std::to_string(label));
    }
    const double y = label;
    switch (kind) {
    case LossKind::MSE: {
        const double d = prediction - y;
        return {d * d, 2.0 * d};
    }
    case LossKind::Hinge: {
        const double margin = y * prediction;
        if (margin < 1.0) {
            return {1.0 - margin, -y};
        }
        return {0.0, 0.0};
    }
    }
    throw ConfigError("loss", "unknown loss kind");
}

ParamVector sgd_step(const ParamVector &params, const GradientVector &grads,
                     double learning_rate) {
    if (params.values.size() != grads.size()) {
        throw ShapeError("sgd_step: " + std::to_string(params.values.size()) +
                         " parameters but " + std::to_string(grads.size()) + " gradients");
    }
    ParamVector out = params;
    for (std::size_t k = 0; k < grads.size(); ++k) {
        out.values[k] -= learning_rate * grads[k];
    }
    return out;
}

void TrainConfig::validate() const {
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw ConfigError("training.learning_rate", "must be a positive number");
    }
    if (batch_size < 1) {
        throw ConfigError("training.batch_size", "must be at least 1");
    }
    if (epochs < 1) {
        throw ConfigError("training.epochs", "must be at least 1");
    }
    if (threads < 1) {
        throw ConfigError("training.threads", "must be at least 1");
    }
}

void initialize_parameters(SqnnModel &model, Rng &rng) {
    constexpr double pi = std::numbers::pi;
    for (auto &e : model.extractors) {
        for (auto &v : e.params.values) {
            v = rng.uniform(-pi, pi);
        }
    }
    if (model.predictor) {
        for (auto &v : model.predictor->params.values) {
            v = rng.uniform(-pi, pi);
        }
    }
}

std::pair<LossValue, ModelGradient> sample_gradient(const SqnnModel &model,
                                                    const Sample &sample, LossKind kind) {
    const auto fwd = forward(model, sample.image);
    const auto l = loss(kind, fwd.output, sample.label);
    auto back = backward(model, sample.image, fwd, l.gradient);
    ModelGradient g;
    g.extractors = std::move(back.extractors);
    g.predictor = std::move(back.predictor);
    return {l, std::move(g)};
}

double train_batch(SqnnModel &model, std::span<const Sample> batch,
                   const TrainConfig &config) {
    if (batch.empty()) {
        throw ValidationError("train_batch needs a nonempty batch");
    }
    std::vector<std::pair<LossValue, ModelGradient>> slots(batch.size());
    parallel_for(batch.size(), config.threads, [&](std::size_t i) {
        slots[i] = sample_gradient(model, batch[i], config.loss);
    });
    auto sum = zero_gradient(model);
    double loss_sum = 0.0;
    for (const auto &[l, g] : slots) {
        loss_sum += l.value;
        for (std::size_t e = 0; e < g.extractors.size(); ++e) {
            accumulate(sum.extractors[e], g.extractors[e]);
        }
        if (model.predictor) {
            accumulate(sum.predictor, g.predictor);
        }
    }
    const double inv = 1.0 / static_cast<double>(batch.size());
    for (std::size_t e = 0; e < model.extractors.size(); ++e) {
        scale(sum.extractors[e], inv);
        model.extractors[e].params =
            sgd_step(model.extractors[e].params, sum.extractors[e], config.learning_rate);
    }
    if (model.predictor) {
        scale(sum.predictor, inv);
        model.predictor->params =
            sgd_step(model.predictor->params, sum.predictor, config.learning_rate);
    }
    return loss_sum * inv;
}

double evaluate_accuracy(const SqnnModel &model, const ImageSet &set, int threads) {
    if (set.size() == 0) {
        throw ValidationError("cannot evaluate accuracy on an empty set");
    }
    std::vector<char> correct(set.size(), 0);
    parallel_for(set.size(), threads, [&](std::size_t i) {
        const double y = forward(model, set.image(i)).output;
        const int predicted = y < 0.0 ? -1 : 1;
        correct[i] = predicted == set.labels[i] ? 1 : 0;
    });
    const auto hits = std::accumulate(correct.begin(), correct.end(), std::size_t{0});
    return static_cast<double>(hits) / static_cast<double>(set.size());
}

TrainingState start_training(const SqnnModel &model, const TrainConfig &config) {
    config.validate();
    model.validate();
    TrainingState state;
    state.model = model;
    Rng init(config.seed, kInitStream);
    initialize_parameters(state.model, init);
    state.best_model = state.model;
    state.rng_state = Rng(config.seed, kShuffleStream).state();
    return state;
}

TrainingState train(TrainingState state, const ImageSet &train_set, const ImageSet &val_set,
                    const TrainConfig &config, const TrainObserver &observer) {
    config.validate();
    train_set.validate();
    val_set.validate();
    if (train_set.size() == 0) {
        throw ValidationError("training set is empty");
    }
    Rng rng(config.seed, kShuffleStream);
    rng.set_state(state.rng_state);

    std::vector<std::size_t> order(train_set.size());
    std::vector<Sample> batch;
    for (int epoch = state.epochs_done + 1; epoch <= config.epochs; ++epoch) {
        const auto start = std::chrono::steady_clock::now();
        std::iota(order.begin(), order.end(), std::size_t{0});
        rng.shuffle(std::span<std::size_t>(order));

        double loss_sum = 0.0;
        const auto batch_size = static_cast<std::size_t>(config.batch_size);
        for (std::size_t begin = 0; begin < order.size(); begin += batch_size) {
            const std::size_t end = std::min(order.size(), begin + batch_size);
            batch.clear();
            for (std::size_t i = begin; i < end; ++i) {
                batch.push_back({train_set.image(order[i]), train_set.labels[order[i]]});
            }
            loss_sum += train_batch(state.model, batch, config) *
                        static_cast<double>(end - begin);
        }

        EpochMetrics m;
        m.epoch = epoch;
        m.mean_train_loss = loss_sum / static_cast<double>(order.size());
        m.val_accuracy = evaluate_accuracy(state.model, val_set, config.threads);
        m.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        state.epochs_done = epoch;
        state.rng_state = rng.state();
        state.history.push_back(m);
        const bool improved = m.val_accuracy > state.best_accuracy;
        if (improved) {
            state.best_accuracy = m.val_accuracy;
            state.best_epoch = epoch;
            state.best_model = state.model;
        }
        if (observer.on_epoch) {
            observer.on_epoch(m, state);
        }
        if (improved && observer.on_best) {
            observer.on_best(state);
        }
    }
    return state;
}

} // namespace sqnn
