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
#include "sqnn/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sqnn/checkpoint.hpp"
#include "sqnn/config.hpp"
#include "sqnn/error.hpp"
#include "sqnn/experiment.hpp"
#include "sqnn/rng.hpp"

namespace sqnn::cli {

namespace {

struct ModelSource {
    std::string config_path;
    std::string preset_name;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;

    void add_to(CLI::App &app) {
        app.add_option("--config", config_path, "Experiment config (JSON)");
        app.add_option("--preset", preset_name, "Built-in experiment name");
        app.add_option("--seed", seed, "Override training.seed");
        app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    }

    ExperimentConfig resolve() const {
        if (config_path.empty() == preset_name.empty()) {
            throw ConfigError("--config/--preset", "give exactly one of --config or --preset");
        }
        auto c = config_path.empty() ? preset(preset_name) : load_config(config_path);
        if (seed) {
            c.training.seed = *seed;
        }
        if (threads) {
            c.training.threads = *threads;
        }
        return c;
    }
};

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
        throw Error("cannot write " + path.string());
    }
}

void append_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    out << text;
    if (!out) {
        throw Error("cannot write " + path.string());
    }
}

std::string fixed(double v, int digits) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

// ---- train -----------------------------------------------------------------

struct TrainOptions {
    ModelSource source;
    std::string out_dir;
    std::string data_dir;
    std::string resume;
    std::optional<int> epochs;
    std::optional<std::size_t> train_limit;
    std::optional<std::size_t> val_limit;
};

int cmd_train(const TrainOptions &o, std::ostream &out) {
    ExperimentConfig config;
    std::optional<Checkpoint> resumed;
    if (!o.resume.empty()) {
        resumed = load_checkpoint(o.resume);
        config = resumed->config;
        if (o.source.threads) {
            config.training.threads = *o.source.threads;
        }
    } else {
        config = o.source.resolve();
    }
    if (o.epochs) {
        config.training.epochs = *o.epochs;
    }
    if (o.train_limit) {
        config.data.train_limit = *o.train_limit;
    }
    if (o.val_limit) {
        config.data.val_limit = *o.val_limit;
    }
    config.training.validate();
    const auto model = make_model(config.model);

    const auto dir = resolve_data_dir(config, o.data_dir);
    const auto train_set = load_split(config, dir, Split::Train);
    const auto val_set = load_split(config, dir, Split::Test);

    const std::filesystem::path out_dir =
        o.out_dir.empty() ? std::filesystem::path("runs") / config.name : std::filesystem::path(o.out_dir);
    std::filesystem::create_directories(out_dir);
    write_text(out_dir / "config.json", to_json(config).dump(2) + "\n");

    TrainingState state = resumed ? resume_state(*resumed) : start_training(model, config.training);
    // Rewrite the CSVs from the recorded history so a resumed run produces
    // the same metrics file as an uninterrupted one.
    std::string metrics = metrics_csv_header();
    for (const auto &m : state.history) {
        metrics += metrics_csv_row(m);
    }
    write_text(out_dir / "metrics.csv", metrics);
    if (!resumed) {
        write_text(out_dir / "timing.csv", timing_csv_header());
    }

    out << config.name << ": " << model.num_params() << " parameters, " << train_set.size()
        << " train / " << val_set.size() << " validation samples, data from " << dir.string()
        << "\n";

    TrainObserver observer;
    observer.on_epoch = [&](const EpochMetrics &m, const TrainingState &s) {
        append_text(out_dir / "metrics.csv", metrics_csv_row(m));
        append_text(out_dir / "timing.csv", timing_csv_row(m));
        save_checkpoint(make_checkpoint(config, s, false), out_dir / "last.ckpt.json");
        out << "epoch " << m.epoch << "/" << config.training.epochs
            << "  loss " << fixed(m.mean_train_loss, 6) << "  val_acc "
            << fixed(m.val_accuracy, 4) << "  (" << fixed(m.seconds, 1) << " s)\n"
            << std::flush;
    };
    observer.on_best = [&](const TrainingState &s) {
        save_checkpoint(make_checkpoint(config, s, true), out_dir / "best.ckpt.json");
    };
    state = train(std::move(state), train_set, val_set, config.training, observer);
    out << "best val_acc " << fixed(state.best_accuracy, 4) << " at epoch " << state.best_epoch
        << "\n";
    return kOk;
}

// ---- eval ------------------------------------------------------------------

struct EvalOptions {
    std::string checkpoint;
    std::string data_dir;
    std::string split = "test";
    std::optional<long long> limit;
    bool full = false;
    std::optional<int> threads;
};

int cmd_eval(const EvalOptions &o, std::ostream &out) {
    const auto ckpt = load_checkpoint(o.checkpoint);
    const auto split = parse_split(o.split);
    std::optional<std::size_t> limit;
    if (o.full) {
        limit = 0;
    } else if (o.limit) {
        if (*o.limit < 1) {
            throw ConfigError("--limit", "evaluation set is empty");
        }
        limit = static_cast<std::size_t>(*o.limit);
    }
    const auto dir = resolve_data_dir(ckpt.config, o.data_dir);
    const auto set = load_split(ckpt.config, dir, split, limit);
    if (set.size() == 0) {
        throw ConfigError("--split", "evaluation set is empty");
    }
    const double acc =
        evaluate_accuracy(ckpt.model, set, o.threads.value_or(ckpt.config.training.threads));
    const auto hits = static_cast<std::size_t>(std::llround(acc * static_cast<double>(set.size())));
    out << "accuracy " << fixed(acc, 4) << " (" << hits << "/" << set.size() << " "
        << to_string(split) << " samples)\n";
    return kOk;
}

// ---- gradcheck -------------------------------------------------------------

struct GradcheckOptions {
    ModelSource source;
    int trials = 10;
    double tolerance = 1e-6;
    double step = kDefaultFiniteDiffStep;
};

struct Worst {
    double delta = -1.0;
    std::string where;
    double analytic = 0.0;
    double numeric = 0.0;

    void update(double a, double n, const std::string &label) {
        const double d = std::abs(a - n);
        if (d > delta) {
            *this = {d, label, a, n};
        }
    }
};

// Flat view of every trainable parameter of a model, extractors first.
std::vector<double *> parameter_slots(SqnnModel &m) {
    std::vector<double *> slots;
    for (auto &e : m.extractors) {
        for (auto &v : e.params.values) {
            slots.push_back(&v);
        }
    }
    if (m.predictor) {
        for (auto &v : m.predictor->params.values) {
            slots.push_back(&v);
        }
    }
    return slots;
}

int cmd_gradcheck(const GradcheckOptions &o, std::ostream &out) {
    if (o.trials < 1) {
        throw ConfigError("--trials", "must be at least 1");
    }
    if (!(o.tolerance > 0.0)) {
        throw ConfigError("--tolerance", "must be positive");
    }
    const auto config = o.source.resolve();
    Rng rng(config.training.seed, 7);
    Worst worst;
    std::size_t checked = 0;
    for (int t = 0; t < o.trials; ++t) {
        auto model = make_model(config.model);
        initialize_parameters(model, rng);
        std::vector<double> image(static_cast<std::size_t>(config.model.image.pixels()));
        for (auto &v : image) {
            v = rng.uniform01();
        }
        // Whole-model chain rule against finite differences of the output.
        const auto fwd = forward(model, image);
        const auto back = backward(model, image, fwd, 1.0);
        std::vector<double> analytic;
        for (const auto &g : back.extractors) {
            analytic.insert(analytic.end(), g.values.begin(), g.values.end());
        }
        analytic.insert(analytic.end(), back.predictor.values.begin(),
                        back.predictor.values.end());
        auto slots = parameter_slots(model);
        std::vector<double> point;
        for (auto *p : slots) {
            point.push_back(*p);
        }
        const ScalarFunction f = [&](std::span<const double> theta) {
            for (std::size_t k = 0; k < slots.size(); ++k) {
                *slots[k] = theta[k];
            }
            return forward(model, image).output;
        };
        for (std::size_t k = 0; k < slots.size(); ++k) {
            worst.update(analytic[k], finite_diff_grad(f, point, k, o.step),
                         "trial " + std::to_string(t) + " parameter " + std::to_string(k));
            ++checked;
        }
        f(point);
        // Input gradient of each extractor circuit against its encoding angles.
        for (std::size_t i = 0; i < model.extractors.size(); ++i) {
            const auto &e = model.extractors[i];
            const auto angles =
                encoding_angles(gather_segment(model.partition, i, image), model.encoding);
            const auto g = input_gradient(e.circuit, e.params, angles, model.encoding.axis,
                                          model.backend);
            const ScalarFunction h = [&](std::span<const double> a) {
                return evaluate_angles(e.circuit, e.params, a, model.encoding.axis,
                                       model.backend);
            };
            for (std::size_t j = 0; j < angles.size(); ++j) {
                worst.update(g[j], finite_diff_grad(h, angles, j, o.step),
                             "trial " + std::to_string(t) + " extractor " + std::to_string(i) +
                                 " input " + std::to_string(j));
                ++checked;
            }
        }
    }
    char line[256];
    std::snprintf(line, sizeof line,
                  "%zu derivatives checked; worst |analytic - numeric| = %.3e at %s "
                  "(analytic %.12g, numeric %.12g)\n",
                  checked, worst.delta, worst.where.c_str(), worst.analytic, worst.numeric);
    out << line;
    if (worst.delta > o.tolerance) {
        out << "FAIL: exceeds tolerance " << o.tolerance << "\n";
        return kGradcheckFailed;
    }
    out << "PASS within tolerance " << o.tolerance << "\n";
    return kOk;
}

// ---- partition-preview -----------------------------------------------------

struct PreviewOptions {
    ModelSource source;
    std::string image;
    std::vector<int> capacities;
    std::string strategy = "even";
};

int cmd_partition_preview(const PreviewOptions &o, std::ostream &out) {
    ImageShape shape;
    std::vector<DeviceSpec> devices;
    PartitionStrategy strategy{};
    if (!o.capacities.empty()) {
        int h = 0;
        int w = 0;
        char x = 0;
        std::istringstream is(o.image);
        if (!(is >> h >> x >> w) || x != 'x' || h < 1 || w < 1) {
            throw ConfigError("--image", "expected HxW, e.g. 4x4");
        }
        shape = {h, w};
        for (std::size_t i = 0; i < o.capacities.size(); ++i) {
            devices.push_back({"extractor" + std::to_string(i), o.capacities[i],
                               DeviceRole::Extractor});
        }
        strategy = parse_strategy(o.strategy);
    } else {
        const auto c = o.source.resolve();
        shape = c.model.image;
        devices = c.model.extractors;
        strategy = c.model.strategy;
    }
    out << render(make_partition(shape, devices, strategy));
    return kOk;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Scalable quantum neural network simulator and trainer", "sqnn"};
    app.require_subcommand(1);

    TrainOptions train_opts;
    auto *train_cmd = app.add_subcommand("train", "Train a model and write metrics and checkpoints");
    train_opts.source.add_to(*train_cmd);
    train_cmd->add_option("--out-dir", train_opts.out_dir, "Output directory (default runs/<name>)");
    train_cmd->add_option("--data-dir", train_opts.data_dir, "MNIST directory (else SQNN_DATA_DIR)");
    train_cmd->add_option("--resume", train_opts.resume, "Continue from a last.ckpt.json");
    train_cmd->add_option("--epochs", train_opts.epochs, "Override training.epochs");
    train_cmd->add_option("--train-limit", train_opts.train_limit, "Override data.train_limit (0 = all)");
    train_cmd->add_option("--val-limit", train_opts.val_limit, "Override data.val_limit (0 = all)");

    EvalOptions eval_opts;
    auto *eval_cmd = app.add_subcommand("eval", "Score a checkpoint on a data split");
    eval_cmd->add_option("--checkpoint", eval_opts.checkpoint, "Checkpoint file")->required();
    eval_cmd->add_option("--data-dir", eval_opts.data_dir, "MNIST directory (else SQNN_DATA_DIR)");
    eval_cmd->add_option("--split", eval_opts.split, "test (validation, default) or train");
    eval_cmd->add_option("--limit", eval_opts.limit, "Number of samples (default: as configured)");
    eval_cmd->add_flag("--full", eval_opts.full, "Use the whole split");
    eval_cmd->add_option("--threads", eval_opts.threads, "Worker threads")->check(CLI::PositiveNumber);

    GradcheckOptions grad_opts;
    auto *grad_cmd = app.add_subcommand("gradcheck", "Compare analytic gradients with finite differences");
    grad_opts.source.add_to(*grad_cmd);
    grad_cmd->add_option("--trials", grad_opts.trials, "Random models to check");
    grad_cmd->add_option("--tolerance", grad_opts.tolerance, "Largest allowed absolute difference");
    grad_cmd->add_option("--step", grad_opts.step, "Finite-difference step");

    PreviewOptions preview_opts;
    auto *preview_cmd = app.add_subcommand("partition-preview", "Print how an image is split across devices");
    preview_opts.source.add_to(*preview_cmd);
    preview_cmd->add_option("--image", preview_opts.image, "Image size HxW (with --capacities)");
    preview_cmd->add_option("--capacities", preview_opts.capacities, "Extractor capacities")
        ->delimiter(',');
    preview_cmd->add_option("--strategy", preview_opts.strategy, "even, uneven or overlap");

    ModelSource show_source;
    auto *show_cmd = app.add_subcommand("show-config", "Print the resolved experiment config as JSON");
    show_source.add_to(*show_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        if (*train_cmd) {
            return cmd_train(train_opts, out);
        }
        if (*eval_cmd) {
            return cmd_eval(eval_opts, out);
        }
        if (*show_cmd) {
            out << to_json(show_source.resolve()).dump(2) << "\n";
            return kOk;
        }
        if (*grad_cmd) {
            return cmd_gradcheck(grad_opts, out);
        }
        return cmd_partition_preview(preview_opts, out);
    } catch (const CheckpointError &e) {
        err << "checkpoint error: " << e.what() << "\n";
        return kCheckpointError;
    } catch (const DataError &e) {
        err << "data error: " << e.what() << "\n";
        return kDataError;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const PartitionError &e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const Error &e) {
        // Geometry or value problems in the requested setup.
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

} // namespace sqnn::cli
