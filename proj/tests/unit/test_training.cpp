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
#include <catch2/catch_amalgamated.hpp>

#include <cstring>
#include <numbers>

#include "oracle.hpp"
#include "sqnn/error.hpp"
#include "sqnn/rng.hpp"
#include "sqnn/training.hpp"

using namespace sqnn;
using Catch::Matchers::WithinAbs;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

ModelGeometry toy_geometry() {
    ModelGeometry g;
    g.image = {1, 2};
    g.extractors = {{"e0", 1, DeviceRole::Extractor}, {"e1", 1, DeviceRole::Extractor}};
    g.predictor = DeviceSpec{"p", 2, DeviceRole::Predictor};
    g.extractor_axes = {Axis::X, Axis::Y};
    g.predictor_axes = {Axis::Y};
    return g;
}

// Label +1 when the left pixel is brighter than the right one.
ImageSet toy_set(Rng &rng, std::size_t n) {
    ImageSet s;
    s.shape = {1, 2};
    for (std::size_t i = 0; i < n; ++i) {
        const int label = i % 2 == 0 ? 1 : -1;
        const double hi = rng.uniform(0.7, 1.0);
        const double lo = rng.uniform(0.0, 0.3);
        s.pixels.push_back(label > 0 ? hi : lo);
        s.pixels.push_back(label > 0 ? lo : hi);
        s.labels.push_back(label);
        s.source_index.push_back(i);
    }
    return s;
}

std::vector<Sample> samples_of(const ImageSet &s) {
    std::vector<Sample> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out.push_back({s.image(i), s.labels[i]});
    }
    return out;
}

void require_same_params(const SqnnModel &a, const SqnnModel &b) {
    for (std::size_t e = 0; e < a.extractors.size(); ++e) {
        for (std::size_t k = 0; k < a.extractors[e].params.size(); ++k) {
            REQUIRE(same_bits(a.extractors[e].params[k], b.extractors[e].params[k]));
        }
    }
    for (std::size_t k = 0; k < a.predictor->params.size(); ++k) {
        REQUIRE(same_bits(a.predictor->params[k], b.predictor->params[k]));
    }
}

} // namespace

TEST_CASE("loss examples", "[training]") {
    auto l = loss(LossKind::MSE, 1.0, 1);
    CHECK(l.value == 0.0);
    CHECK(l.gradient == 0.0);
    l = loss(LossKind::MSE, 0.0, 1);
    CHECK(l.value == 1.0);
    CHECK(l.gradient == -2.0);
    l = loss(LossKind::Hinge, 0.5, 1);
    CHECK(l.value == 0.5);
    CHECK(l.gradient == -1.0);
    l = loss(LossKind::Hinge, -0.5, -1);
    CHECK(l.value == 0.5);
    CHECK(l.gradient == 1.0);
    CHECK_THROWS_AS(loss(LossKind::MSE, 0.0, 0), ValidationError);
    CHECK_THROWS_AS(loss(LossKind::MSE, 0.0, 2), ValidationError);
    CHECK(parse_loss("hinge") == LossKind::Hinge);
    CHECK_THROWS_AS(parse_loss("cross-entropy"), ConfigError);
}

TEST_CASE("loss gradients match finite differences away from the kink", "[training][property]") {
    Rng rng(1);
    for (int t = 0; t < 200; ++t) {
        const double y = rng.uniform(-1.0, 1.0);
        const int label = rng.below(2) == 0 ? -1 : 1;
        for (auto kind : {LossKind::MSE, LossKind::Hinge}) {
            if (kind == LossKind::Hinge && std::abs(label * y - 1.0) < 1e-4) {
                continue;
            }
            const ScalarFunction f = [&](std::span<const double> v) {
                return loss(kind, v[0], label).value;
            };
            const std::vector<double> point{y};
            CHECK_THAT(loss(kind, y, label).gradient,
                       WithinAbs(finite_diff_grad(f, point, 0, 1e-5), 1e-8));
        }
    }
}

TEST_CASE("sgd_step", "[training]") {
    CHECK(sgd_step(ParamVector{{1.0}}, GradientVector{{0.5}}, 0.1)[0] == 0.95);
    const ParamVector p{{0.3, -0.2}};
    CHECK(sgd_step(p, GradientVector{{0.0, 0.0}}, 0.5) == p);
    CHECK_THROWS_AS(sgd_step(p, GradientVector{{1.0}}, 0.1), ShapeError);
    const GradientVector g{{0.25, -0.5}};
    const auto twice = sgd_step(sgd_step(p, g, 0.1), g, 0.1);
    const auto once = sgd_step(p, GradientVector{{0.5, -1.0}}, 0.1);
    CHECK_THAT(twice[0], WithinAbs(once[0], 1e-15));
    CHECK_THAT(twice[1], WithinAbs(once[1], 1e-15));
}

TEST_CASE("TrainConfig validation", "[training]") {
    TrainConfig c;
    CHECK_NOTHROW(c.validate());
    c.epochs = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.learning_rate = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.batch_size = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.threads = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("initialize_parameters draws from [-pi, pi] deterministically", "[training]") {
    auto a = make_model(toy_geometry());
    auto b = make_model(toy_geometry());
    Rng r1(5);
    Rng r2(5);
    initialize_parameters(a, r1);
    initialize_parameters(b, r2);
    require_same_params(a, b);
    for (const auto &e : a.extractors) {
        for (double v : e.params.values) {
            CHECK(std::abs(v) <= std::numbers::pi);
        }
    }
}

TEST_CASE("train_batch semantics", "[training]") {
    Rng rng(2);
    const auto data = toy_set(rng, 8);
    const auto samples = samples_of(data);
    auto base = make_model(toy_geometry());
    initialize_parameters(base, rng);
    TrainConfig cfg;
    cfg.learning_rate = 0.1;

    SECTION("batch of one equals a single-sample update") {
        auto m = base;
        train_batch(m, std::span(samples).first(1), cfg);
        auto expected = base;
        const auto [l, g] = sample_gradient(base, samples[0], cfg.loss);
        for (std::size_t e = 0; e < expected.extractors.size(); ++e) {
            expected.extractors[e].params =
                sgd_step(expected.extractors[e].params, g.extractors[e], cfg.learning_rate);
        }
        expected.predictor->params =
            sgd_step(expected.predictor->params, g.predictor, cfg.learning_rate);
        require_same_params(m, expected);
    }
    SECTION("a duplicated sample equals the single-sample update") {
        auto single = base;
        auto doubled = base;
        const std::vector<Sample> two{samples[3], samples[3]};
        train_batch(single, std::span(samples).subspan(3, 1), cfg);
        train_batch(doubled, two, cfg);
        for (std::size_t k = 0; k < single.predictor->params.size(); ++k) {
            CHECK_THAT(doubled.predictor->params[k],
                       WithinAbs(single.predictor->params[k], 1e-15));
        }
    }
    SECTION("batch gradient is the mean of per-sample gradients") {
        auto m = base;
        const double mean_loss = train_batch(m, samples, cfg);
        double loss_sum = 0.0;
        std::vector<double> mean(base.predictor->params.size(), 0.0);
        for (const auto &s : samples) {
            const auto [l, g] = sample_gradient(base, s, cfg.loss);
            loss_sum += l.value;
            for (std::size_t k = 0; k < mean.size(); ++k) {
                mean[k] += g.predictor[k] / static_cast<double>(samples.size());
            }
        }
        CHECK_THAT(mean_loss, WithinAbs(loss_sum / 8.0, 1e-12));
        for (std::size_t k = 0; k < mean.size(); ++k) {
            const double step = (base.predictor->params[k] - m.predictor->params[k]) / 0.1;
            CHECK_THAT(step, WithinAbs(mean[k], 1e-12));
        }
    }
    SECTION("result does not depend on the thread count") {
        auto a = base;
        auto b = base;
        cfg.threads = 1;
        const double la = train_batch(a, samples, cfg);
        cfg.threads = 3;
        const double lb = train_batch(b, samples, cfg);
        CHECK(same_bits(la, lb));
        require_same_params(a, b);
    }
    SECTION("empty batch") {
        auto m = base;
        CHECK_THROWS_AS(train_batch(m, std::span<const Sample>{}, cfg), ValidationError);
    }
}

TEST_CASE("loss falls over 50 steps on a separable 2-pixel toy set", "[training]") {
    Rng rng(3);
    const auto data = toy_set(rng, 16);
    const auto samples = samples_of(data);
    auto m = make_model(toy_geometry());
    initialize_parameters(m, rng);
    TrainConfig cfg;
    cfg.learning_rate = 0.5;
    const double first = train_batch(m, samples, cfg);
    double last = first;
    for (int step = 1; step < 50; ++step) {
        last = train_batch(m, samples, cfg);
    }
    INFO("initial loss " << first << ", final loss " << last);
    CHECK(last < first);
}

TEST_CASE("evaluate_accuracy", "[training]") {
    ModelGeometry g;
    g.image = {1, 1};
    g.extractors = {{"d", 1, DeviceRole::Extractor}};
    g.readout_prep = ReadoutPrep::ZeroState;
    const auto always_plus = make_model(g); // zero params: output +1
    ImageSet all_plus{{1, 1}, {0.1, 0.5, 0.9}, {1, 1, 1}, {0, 1, 2}};
    CHECK(evaluate_accuracy(always_plus, all_plus) == 1.0);
    ImageSet balanced{{1, 1}, {0.1, 0.5, 0.9, 0.2}, {1, -1, 1, -1}, {0, 1, 2, 3}};
    CHECK(evaluate_accuracy(always_plus, balanced) == 0.5);
    // PlusState with zero parameters gives exactly 0, which counts as +1.
    g.readout_prep = ReadoutPrep::PlusState;
    CHECK(evaluate_accuracy(make_model(g), all_plus) == 1.0);
    ImageSet empty{{1, 1}, {}, {}, {}};
    CHECK_THROWS_AS(evaluate_accuracy(always_plus, empty), ValidationError);
}

TEST_CASE("train is deterministic and tracks the best epoch", "[training]") {
    Rng rng(4);
    const auto train_set = toy_set(rng, 40);
    const auto val_set = toy_set(rng, 20);
    TrainConfig cfg;
    cfg.learning_rate = 0.5;
    cfg.batch_size = 8;
    cfg.epochs = 4;
    cfg.seed = 99;
    const auto model = make_model(toy_geometry());

    int best_calls = 0;
    TrainObserver obs;
    obs.on_best = [&](const TrainingState &) { ++best_calls; };
    const auto a = train(start_training(model, cfg), train_set, val_set, cfg, obs);
    cfg.threads = 4;
    const auto b = train(start_training(model, cfg), train_set, val_set, cfg);

    REQUIRE(a.history.size() == 4);
    for (std::size_t e = 0; e < 4; ++e) {
        CHECK(a.history[e].epoch == static_cast<int>(e + 1));
        CHECK(same_bits(a.history[e].mean_train_loss, b.history[e].mean_train_loss));
        CHECK(same_bits(a.history[e].val_accuracy, b.history[e].val_accuracy));
        CHECK(a.best_accuracy >= a.history[e].val_accuracy);
        CHECK(a.history[e].val_accuracy >= 0.0);
        CHECK(a.history[e].val_accuracy <= 1.0);
    }
    require_same_params(a.model, b.model);
    CHECK(best_calls >= 1);
    CHECK(a.history[static_cast<std::size_t>(a.best_epoch - 1)].val_accuracy == a.best_accuracy);
    CHECK(evaluate_accuracy(a.best_model, val_set) == a.best_accuracy);

    SECTION("stopping and continuing gives the same run") {
        cfg.epochs = 2;
        auto half = train(start_training(model, cfg), train_set, val_set, cfg);
        cfg.epochs = 4;
        const auto rest = train(std::move(half), train_set, val_set, cfg);
        require_same_params(rest.model, a.model);
        for (std::size_t e = 0; e < 4; ++e) {
            CHECK(same_bits(rest.history[e].mean_train_loss, a.history[e].mean_train_loss));
        }
    }
    SECTION("a different seed gives a different run") {
        cfg.seed = 100;
        const auto c = train(start_training(model, cfg), train_set, val_set, cfg);
        CHECK_FALSE(same_bits(c.history[0].mean_train_loss, a.history[0].mean_train_loss));
    }
}
