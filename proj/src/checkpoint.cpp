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
#include "sqnn/checkpoint.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "sqnn/error.hpp"

namespace sqnn {

using nlohmann::json;

namespace {

json circuit_json(const CircuitSpec &c) {
    json blocks = json::array();
    for (const auto &b : c.blocks) {
        blocks.push_back({{"axis", std::string(to_string(b.axis))},
                          {"param_offsets", b.param_offsets}});
    }
    return {{"num_data_qubits", c.num_data_qubits},
            {"readout_prep", std::string(to_string(c.readout_prep))},
            {"blocks", blocks}};
}

CircuitSpec circuit_from(const json &j) {
    CircuitSpec c;
    c.num_data_qubits = j.at("num_data_qubits").get<int>();
    c.readout_prep = parse_readout_prep(j.at("readout_prep").get<std::string>());
    for (const auto &b : j.at("blocks")) {
        c.blocks.push_back({parse_axis(b.at("axis").get<std::string>()),
                            b.at("param_offsets").get<std::vector<std::size_t>>()});
    }
    return c;
}

json device_circuit_json(const DeviceCircuit &d) {
    return {{"device",
             {{"id", d.device.device_id},
              {"capacity", d.device.data_qubit_capacity},
              {"role", d.device.role == DeviceRole::Extractor ? "extractor" : "predictor"}}},
            {"circuit", circuit_json(d.circuit)},
            {"params", d.params.values}};
}

DeviceCircuit device_circuit_from(const json &j) {
    DeviceCircuit d;
    const auto &dev = j.at("device");
    d.device.device_id = dev.at("id").get<std::string>();
    d.device.data_qubit_capacity = dev.at("capacity").get<int>();
    const auto role = dev.at("role").get<std::string>();
    if (role != "extractor" && role != "predictor") {
        throw CheckpointError("unknown device role '" + role + "'");
    }
    d.device.role = role == "extractor" ? DeviceRole::Extractor : DeviceRole::Predictor;
    d.circuit = circuit_from(j.at("circuit"));
    d.params.values = j.at("params").get<std::vector<double>>();
    return d;
}

json history_json(const std::vector<EpochMetrics> &history) {
    json h = json::array();
    for (const auto &m : history) {
        h.push_back({{"epoch", m.epoch},
                     {"mean_train_loss", m.mean_train_loss},
                     {"val_accuracy", m.val_accuracy}});
    }
    return h;
}

json payload_json(const Checkpoint &c) {
    return {{"format_version", kCheckpointFormatVersion},
            {"config", to_json(c.config)},
            {"labels", {{"negative", c.config.data.digits.negative},
                        {"positive", c.config.data.digits.positive}}},
            {"model", model_to_json(c.model)},
            {"best_model", c.best_model ? model_to_json(*c.best_model) : json(nullptr)},
            {"training",
             {{"epochs_done", c.epochs_done},
              {"best_accuracy", c.best_accuracy},
              {"best_epoch", c.best_epoch},
              {"rng_state", c.rng_state},
              {"history", history_json(c.history)}}}};
}

} // namespace

json model_to_json(const SqnnModel &m) {
    json tiles = json::array();
    for (const auto &t : m.partition.tiles) {
        tiles.push_back({t.row, t.col, t.height, t.width});
    }
    json extractors = json::array();
    for (const auto &e : m.extractors) {
        extractors.push_back(device_circuit_json(e));
    }
    return {{"partition",
             {{"image", {m.partition.shape.height, m.partition.shape.width}},
              {"strategy", std::string(to_string(m.partition.strategy))},
              {"tiles", tiles}}},
            {"encoding",
             {{"axis", std::string(to_string(m.encoding.axis))},
              {"scale", m.encoding.scale}}},
            {"backend", std::string(to_string(m.backend))},
            {"extractors", extractors},
            {"predictor", m.predictor ? device_circuit_json(*m.predictor) : json(nullptr)}};
}

SqnnModel model_from_json(const json &j) {
    try {
        SqnnModel m;
        const auto &p = j.at("partition");
        const ImageShape shape{p.at("image").at(0).get<int>(), p.at("image").at(1).get<int>()};
        std::vector<Tile> tiles;
        for (const auto &t : p.at("tiles")) {
            tiles.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(),
                             t.at(3).get<int>()});
        }
        m.partition = plan_from_tiles(
            shape, parse_strategy(p.at("strategy").get<std::string>()), std::move(tiles));
        m.encoding.axis = parse_axis(j.at("encoding").at("axis").get<std::string>());
        m.encoding.scale = j.at("encoding").at("scale").get<double>();
        m.backend = parse_backend(j.at("backend").get<std::string>());
        for (const auto &e : j.at("extractors")) {
            m.extractors.push_back(device_circuit_from(e));
        }
        if (!j.at("predictor").is_null()) {
            m.predictor = device_circuit_from(j.at("predictor"));
        }
        m.validate();
        return m;
    } catch (const CheckpointError &) {
        throw;
    } catch (const json::exception &e) {
        throw CheckpointError(std::string("malformed model: ") + e.what());
    } catch (const Error &e) {
        throw CheckpointError(std::string("inconsistent model: ") + e.what());
    }
}

std::string sha256_hex(const std::string &bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 digest failed");
    }
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        char buf[3];
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

std::string serialize_checkpoint(const Checkpoint &c) {
    auto payload = payload_json(c);
    const auto hash = sha256_hex(payload.dump());
    payload["content_hash"] = hash;
    return payload.dump(1) + "\n";
}

Checkpoint deserialize_checkpoint(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw CheckpointError(std::string("checkpoint is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("content_hash") || !j["content_hash"].is_string()) {
        throw CheckpointError("checkpoint has no content hash");
    }
    const auto recorded = j["content_hash"].get<std::string>();
    j.erase("content_hash");
    if (sha256_hex(j.dump()) != recorded) {
        throw CheckpointError("checkpoint content hash mismatch");
    }
    try {
        if (j.at("format_version").get<int>() != kCheckpointFormatVersion) {
            throw CheckpointError("unsupported checkpoint format version " +
                                  j.at("format_version").dump());
        }
        Checkpoint c;
        try {
            c.config = config_from_json(j.at("config"));
        } catch (const ConfigError &e) {
            throw CheckpointError(std::string("checkpoint config: ") + e.what());
        }
        c.model = model_from_json(j.at("model"));
        if (!j.at("best_model").is_null()) {
            c.best_model = model_from_json(j.at("best_model"));
        }
        const auto &t = j.at("training");
        c.epochs_done = t.at("epochs_done").get<int>();
        c.best_accuracy = t.at("best_accuracy").get<double>();
        c.best_epoch = t.at("best_epoch").get<int>();
        c.rng_state = t.at("rng_state").get<std::string>();
        for (const auto &m : t.at("history")) {
            EpochMetrics e;
            e.epoch = m.at("epoch").get<int>();
            e.mean_train_loss = m.at("mean_train_loss").get<double>();
            e.val_accuracy = m.at("val_accuracy").get<double>();
            c.history.push_back(e);
        }
        return c;
    } catch (const json::exception &e) {
        throw CheckpointError(std::string("malformed checkpoint: ") + e.what());
    }
}

void save_checkpoint(const Checkpoint &c, const std::filesystem::path &path) {
    const auto text = serialize_checkpoint(c);
    // Write then rename so a crash never leaves a half-written checkpoint.
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text;
        if (!out) {
            throw CheckpointError("cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CheckpointError("cannot open checkpoint " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return deserialize_checkpoint(ss.str());
}

Checkpoint make_checkpoint(const ExperimentConfig &config, const TrainingState &state,
                           bool best) {
    Checkpoint c;
    c.config = config;
    c.model = best ? state.best_model : state.model;
    if (!best) {
        c.best_model = state.best_model;
    }
    c.epochs_done = state.epochs_done;
    c.best_accuracy = state.best_accuracy;
    c.best_epoch = state.best_epoch;
    c.rng_state = state.rng_state;
    c.history = state.history;
    return c;
}

TrainingState resume_state(const Checkpoint &c) {
    if (!c.best_model) {
        throw CheckpointError("checkpoint holds no resumable training state");
    }
    TrainingState s;
    s.model = c.model;
    s.best_model = *c.best_model;
    s.rng_state = c.rng_state;
    s.epochs_done = c.epochs_done;
    s.best_accuracy = c.best_accuracy;
    s.best_epoch = c.best_epoch;
    s.history = c.history;
    return s;
}

} // namespace sqnn
