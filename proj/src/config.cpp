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
#include "sqnn/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "sqnn/error.hpp"

namespace sqnn {

using nlohmann::json;

namespace {

std::string join(const std::string &path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string index(const std::string &path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

void require_object(const json &j, const std::string &path,
                    std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) {
        throw ConfigError(path.empty() ? "<root>" : path, "expected an object");
    }
    for (const auto &[key, value] : j.items()) {
        bool known = false;
        for (auto a : allowed) {
            known = known || key == a;
        }
        if (!known) {
            throw ConfigError(join(path, key), "unknown field");
        }
    }
}

const json &field(const json &j, const std::string &path, std::string_view key) {
    auto it = j.find(std::string(key));
    if (it == j.end()) {
        throw ConfigError(join(path, key), "missing required field");
    }
    return *it;
}

std::string get_string(const json &j, const std::string &path) {
    if (!j.is_string()) {
        throw ConfigError(path, "expected a string");
    }
    return j.get<std::string>();
}

long long get_int(const json &j, const std::string &path, long long lo, long long hi) {
    if (!j.is_number_integer()) {
        throw ConfigError(path, "expected an integer");
    }
    const auto v = j.get<long long>();
    if (v < lo || v > hi) {
        throw ConfigError(path, "must lie in [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "], got " + std::to_string(v));
    }
    return v;
}

double get_number(const json &j, const std::string &path) {
    if (!j.is_number()) {
        throw ConfigError(path, "expected a number");
    }
    return j.get<double>();
}

// Wraps the enum parsers so their errors carry the field path.
template <class F> auto parse_enum(const json &j, const std::string &path, F parse) {
    const auto text = get_string(j, path);
    try {
        return parse(text);
    } catch (const ConfigError &e) {
        throw ConfigError(path, e.what());
    } catch (const Error &e) {
        throw ConfigError(path, e.what());
    }
}

std::vector<Axis> parse_axes(const json &j, const std::string &path) {
    if (!j.is_array() || j.empty()) {
        throw ConfigError(path, "expected a nonempty list of axes");
    }
    std::vector<Axis> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(parse_enum(j[i], index(path, i),
                                 [](const std::string &s) { return parse_axis(s); }));
    }
    return out;
}

json axes_json(std::span<const Axis> axes) {
    json a = json::array();
    for (auto x : axes) {
        a.push_back(std::string(to_string(x)));
    }
    return a;
}

DeviceSpec parse_device(const json &j, const std::string &path, DeviceRole role) {
    require_object(j, path, {"id", "capacity"});
    DeviceSpec d;
    d.device_id = get_string(field(j, path, "id"), join(path, "id"));
    d.data_qubit_capacity =
        static_cast<int>(get_int(field(j, path, "capacity"), join(path, "capacity"), 1,
                                 kMaxQubits - 1));
    d.role = role;
    return d;
}

json device_json(const DeviceSpec &d) {
    return {{"id", d.device_id}, {"capacity", d.data_qubit_capacity}};
}

ModelGeometry parse_model(const json &j, const std::string &path) {
    require_object(j, path,
                   {"image", "strategy", "extractors", "extractor_blocks", "extractor_axes",
                    "predictor", "predictor_blocks", "predictor_axes", "readout_prep",
                    "encoding", "backend"});
    ModelGeometry g;
    {
        const auto p = join(path, "image");
        const auto &img = field(j, path, "image");
        if (!img.is_array() || img.size() != 2) {
            throw ConfigError(p, "expected [height, width]");
        }
        g.image.height = static_cast<int>(get_int(img[0], index(p, 0), 1, 28));
        g.image.width = static_cast<int>(get_int(img[1], index(p, 1), 1, 28));
    }
    if (j.contains("strategy")) {
        g.strategy = parse_enum(j["strategy"], join(path, "strategy"),
                                [](const std::string &s) { return parse_strategy(s); });
    }
    {
        const auto p = join(path, "extractors");
        const auto &ex = field(j, path, "extractors");
        if (!ex.is_array() || ex.empty()) {
            throw ConfigError(p, "expected a nonempty list of devices");
        }
        std::set<std::string> ids;
        for (std::size_t i = 0; i < ex.size(); ++i) {
            g.extractors.push_back(parse_device(ex[i], index(p, i), DeviceRole::Extractor));
            if (!ids.insert(g.extractors.back().device_id).second) {
                throw ConfigError(index(p, i) + ".id", "duplicate device id");
            }
        }
    }
    if (j.contains("extractor_blocks")) {
        g.extractor_blocks = static_cast<int>(
            get_int(j["extractor_blocks"], join(path, "extractor_blocks"), 1, 1000));
    }
    if (j.contains("extractor_axes")) {
        g.extractor_axes = parse_axes(j["extractor_axes"], join(path, "extractor_axes"));
    }
    if (j.contains("predictor") && !j["predictor"].is_null()) {
        g.predictor = parse_device(j["predictor"], join(path, "predictor"),
                                   DeviceRole::Predictor);
    }
    if (j.contains("predictor_blocks")) {
        g.predictor_blocks = static_cast<int>(
            get_int(j["predictor_blocks"], join(path, "predictor_blocks"), 1, 1000));
    }
    if (j.contains("predictor_axes")) {
        g.predictor_axes = parse_axes(j["predictor_axes"], join(path, "predictor_axes"));
    }
    if (j.contains("readout_prep")) {
        g.readout_prep =
            parse_enum(j["readout_prep"], join(path, "readout_prep"),
                       [](const std::string &s) { return parse_readout_prep(s); });
    }
    if (j.contains("encoding")) {
        const auto p = join(path, "encoding");
        const auto &e = j["encoding"];
        require_object(e, p, {"axis", "scale_pi"});
        if (e.contains("axis")) {
            g.encoding.axis = parse_enum(e["axis"], join(p, "axis"),
                                         [](const std::string &s) { return parse_axis(s); });
        }
        if (e.contains("scale_pi")) {
            const double s = get_number(e["scale_pi"], join(p, "scale_pi"));
            if (!(s > 0.0 && s <= 2.0)) {
                throw ConfigError(join(p, "scale_pi"), "must lie in (0, 2]");
            }
            g.encoding.scale = s * std::numbers::pi;
        }
    }
    if (j.contains("backend")) {
        g.backend = parse_enum(j["backend"], join(path, "backend"),
                               [](const std::string &s) { return parse_backend(s); });
    }
    return g;
}

json model_json(const ModelGeometry &g) {
    json ex = json::array();
    for (const auto &d : g.extractors) {
        ex.push_back(device_json(d));
    }
    json j = {
        {"image", {g.image.height, g.image.width}},
        {"strategy", std::string(to_string(g.strategy))},
        {"extractors", ex},
        {"extractor_blocks", g.extractor_blocks},
        {"extractor_axes", axes_json(g.extractor_axes.empty() ? default_axis_sequence()
                                                               : std::span<const Axis>(g.extractor_axes))},
        {"predictor", g.predictor ? device_json(*g.predictor) : json(nullptr)},
        {"predictor_blocks", g.predictor_blocks},
        {"predictor_axes", axes_json(g.predictor_axes.empty() ? default_axis_sequence()
                                                               : std::span<const Axis>(g.predictor_axes))},
        {"readout_prep", std::string(to_string(g.readout_prep))},
        {"encoding",
         {{"axis", std::string(to_string(g.encoding.axis))},
          {"scale_pi", g.encoding.scale / std::numbers::pi}}},
        {"backend", std::string(to_string(g.backend))},
    };
    return j;
}

TrainConfig parse_training(const json &j, const std::string &path) {
    require_object(j, path,
                   {"learning_rate", "batch_size", "epochs", "loss", "seed", "threads"});
    TrainConfig t;
    if (j.contains("learning_rate")) {
        t.learning_rate = get_number(j["learning_rate"], join(path, "learning_rate"));
    }
    if (j.contains("batch_size")) {
        t.batch_size = static_cast<int>(
            get_int(j["batch_size"], join(path, "batch_size"), 1, 1 << 30));
    }
    if (j.contains("epochs")) {
        t.epochs = static_cast<int>(get_int(j["epochs"], join(path, "epochs"), 1, 1 << 30));
    }
    if (j.contains("loss")) {
        t.loss = parse_enum(j["loss"], join(path, "loss"),
                            [](const std::string &s) { return parse_loss(s); });
    }
    if (j.contains("seed")) {
        const auto &s = j["seed"];
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
            throw ConfigError(join(path, "seed"), "expected a non-negative integer");
        }
        t.seed = s.get<std::uint64_t>();
    }
    if (j.contains("threads")) {
        t.threads = static_cast<int>(get_int(j["threads"], join(path, "threads"), 1, 1024));
    }
    t.validate();
    return t;
}

json training_json(const TrainConfig &t) {
    return {{"learning_rate", t.learning_rate}, {"batch_size", t.batch_size},
            {"epochs", t.epochs},               {"loss", std::string(to_string(t.loss))},
            {"seed", t.seed},                   {"threads", t.threads}};
}

DataConfig parse_data(const json &j, const std::string &path) {
    require_object(j, path, {"dir", "train_limit", "val_limit", "digits"});
    DataConfig d;
    if (j.contains("dir")) {
        d.dir = get_string(j["dir"], join(path, "dir"));
    }
    if (j.contains("train_limit")) {
        d.train_limit = static_cast<std::size_t>(
            get_int(j["train_limit"], join(path, "train_limit"), 0, 1 << 30));
    }
    if (j.contains("val_limit")) {
        d.val_limit = static_cast<std::size_t>(
            get_int(j["val_limit"], join(path, "val_limit"), 0, 1 << 30));
    }
    if (j.contains("digits")) {
        const auto p = join(path, "digits");
        const auto &dg = j["digits"];
        if (!dg.is_array() || dg.size() != 2) {
            throw ConfigError(p, "expected [negative digit, positive digit]");
        }
        d.digits.negative = static_cast<int>(get_int(dg[0], index(p, 0), 0, 9));
        d.digits.positive = static_cast<int>(get_int(dg[1], index(p, 1), 0, 9));
        if (d.digits.negative == d.digits.positive) {
            throw ConfigError(p, "digits must differ");
        }
    }
    return d;
}

json data_json(const DataConfig &d) {
    return {{"dir", d.dir},
            {"train_limit", d.train_limit},
            {"val_limit", d.val_limit},
            {"digits", {d.digits.negative, d.digits.positive}}};
}

ExperimentConfig base_preset(std::string name, ImageShape image) {
    ExperimentConfig c;
    c.name = std::move(name);
    c.model.image = image;
    c.model.extractor_axes = {Axis::X, Axis::Y};
    c.model.predictor_axes = {Axis::Y};
    c.training.learning_rate = 0.3;
    c.training.batch_size = 32;
    c.training.epochs = 10;
    c.training.seed = 1234;
    c.data.train_limit = 2000;
    c.data.val_limit = 500;
    return c;
}

ExperimentConfig single_device(int side, int blocks) {
    const int n = side * side;
    auto c = base_preset(std::to_string(n) + "qb_" + std::to_string(blocks) + "blk",
                         {side, side});
    c.model.extractors = {{"device0", n, DeviceRole::Extractor}};
    c.model.extractor_blocks = blocks;
    return c;
}

ExperimentConfig multi_device(std::string name, int side, std::vector<int> capacities,
                              PartitionStrategy strategy) {
    auto c = base_preset(std::move(name), {side, side});
    c.model.strategy = strategy;
    for (std::size_t i = 0; i < capacities.size(); ++i) {
        c.model.extractors.push_back(
            {"extractor" + std::to_string(i), capacities[i], DeviceRole::Extractor});
    }
    c.model.predictor =
        DeviceSpec{"predictor", static_cast<int>(capacities.size()), DeviceRole::Predictor};
    c.model.extractor_blocks = 3;
    c.model.predictor_blocks = 1;
    return c;
}

} // namespace

ExperimentConfig config_from_json(const json &j) {
    require_object(j, "", {"name", "model", "training", "data"});
    ExperimentConfig c;
    if (j.contains("name")) {
        c.name = get_string(j["name"], "name");
    }
    c.model = parse_model(field(j, "", "model"), "model");
    if (j.contains("training")) {
        c.training = parse_training(j["training"], "training");
    }
    if (j.contains("data")) {
        c.data = parse_data(j["data"], "data");
    }
    return c;
}

json to_json(const ExperimentConfig &c) {
    return {{"name", c.name},
            {"model", model_json(c.model)},
            {"training", training_json(c.training)},
            {"data", data_json(c.data)}};
}

ExperimentConfig parse_config(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
    }
    return config_from_json(j);
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("<file>", "cannot open " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::vector<std::string> preset_names() {
    return {"4qb_3blk",  "9qb_3blk",  "16qb_3blk", "4qb_6blk",         "9qb_6blk",
            "16qb_6blk", "16qb_sqnn", "36qb_sqnn", "64qb_sqnn", "16qb_uneven_sqnn"};
}

ExperimentConfig preset(std::string_view name) {
    for (int blocks : {3, 6}) {
        for (int side : {2, 3, 4}) {
            auto c = single_device(side, blocks);
            if (c.name == name) {
                return c;
            }
        }
    }
    if (name == "16qb_sqnn") {
        return multi_device("16qb_sqnn", 4, {4, 4, 4, 4}, PartitionStrategy::EvenNoOverlap);
    }
    if (name == "36qb_sqnn") {
        return multi_device("36qb_sqnn", 6, {9, 9, 9, 9}, PartitionStrategy::EvenNoOverlap);
    }
    if (name == "64qb_sqnn") {
        return multi_device("64qb_sqnn", 8, {16, 16, 16, 16},
                            PartitionStrategy::EvenNoOverlap);
    }
    if (name == "16qb_uneven_sqnn") {
        return multi_device("16qb_uneven_sqnn", 4, {8, 4, 4},
                            PartitionStrategy::UnevenNoOverlap);
    }
    throw ConfigError("preset", "unknown preset '" + std::string(name) + "'");
}

} // namespace sqnn
