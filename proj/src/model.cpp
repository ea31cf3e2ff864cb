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
#include "sqnn/model.hpp"

#include <algorithm>
#include <string>

#include "sqnn/error.hpp"

namespace sqnn {

namespace {

std::vector<double> predictor_angles(const FeatureVector &features) {
    std::vector<double> angles(features.size());
    std::transform(features.values.begin(), features.values.end(), angles.begin(),
                   feature_to_angle);
    return angles;
}

void check_image(const SqnnModel &model, std::span<const double> image) {
    if (image.size() != static_cast<std::size_t>(model.partition.shape.pixels())) {
        throw ShapeError("sample has " + std::to_string(image.size()) +
                         " pixels, model expects " +
                         std::to_string(model.partition.shape.pixels()));
    }
}

void check_role(const DeviceSpec &device, DeviceRole role) {
    if (device.role != role) {
        throw ValidationError("device '" + device.device_id + "' has the wrong role");
    }
}

} // namespace

std::size_t SqnnModel::num_params() const noexcept {
    std::size_t total = predictor ? predictor->params.size() : 0;
    for (const auto &e : extractors) {
        total += e.params.size();
    }
    return total;
}

void SqnnModel::validate() const {
    encoding.validate();
    if (extractors.empty()) {
        throw ValidationError("model needs at least one extractor");
    }
    if (extractors.size() != partition.num_segments()) {
        throw ShapeError("model has " + std::to_string(extractors.size()) +
                         " extractors but the partition has " +
                         std::to_string(partition.num_segments()) + " segments");
    }
    for (std::size_t i = 0; i < extractors.size(); ++i) {
        const auto &e = extractors[i];
        check_role(e.device, DeviceRole::Extractor);
        e.circuit.validate();
        const auto seg = partition.segments[i].size();
        if (static_cast<std::size_t>(e.circuit.num_data_qubits) != seg) {
            throw ShapeError("extractor " + std::to_string(i) + " has " +
                             std::to_string(e.circuit.num_data_qubits) +
                             " data qubits for a " + std::to_string(seg) +
                             "-pixel segment");
        }
        if (e.circuit.num_data_qubits > e.device.data_qubit_capacity) {
            throw CapacityError("extractor '" + e.device.device_id +
                                "' is too small for its segment");
        }
        if (e.params.size() != e.circuit.num_params()) {
            throw ShapeError("extractor " + std::to_string(i) +
                             " parameter count does not match its circuit");
        }
    }
    if (!predictor) {
        if (extractors.size() != 1) {
            throw ValidationError("a model without a predictor must have exactly "
                                  "one extractor");
        }
        return;
    }
    check_role(predictor->device, DeviceRole::Predictor);
    predictor->circuit.validate();
    if (static_cast<std::size_t>(predictor->circuit.num_data_qubits) != extractors.size()) {
        throw ShapeError("predictor has " +
                         std::to_string(predictor->circuit.num_data_qubits) +
                         " data qubits for " + std::to_string(extractors.size()) +
                         " features");
    }
    if (predictor->circuit.num_data_qubits > predictor->device.data_qubit_capacity) {
        throw CapacityError("predictor '" + predictor->device.device_id +
                            "' cannot host " + std::to_string(extractors.size()) +
                            " features");
    }
    if (predictor->params.size() != predictor->circuit.num_params()) {
        throw ShapeError("predictor parameter count does not match its circuit");
    }
}

SqnnModel make_model(const ModelGeometry &g) {
    SqnnModel model;
    model.encoding = g.encoding;
    model.backend = g.backend;
    model.partition = make_partition(g.image, g.extractors, g.strategy);
    std::size_t seg = 0;
    for (const auto &device : g.extractors) {
        if (device.role != DeviceRole::Extractor) {
            throw ValidationError("device '" + device.device_id +
                                  "' listed as extractor has another role");
        }
        const int n = static_cast<int>(model.partition.segments[seg++].size());
        auto circuit = build_basic_model(n, g.extractor_blocks, g.extractor_axes,
                                         g.readout_prep);
        ParamVector params{std::vector<double>(circuit.num_params(), 0.0)};
        model.extractors.push_back({device, std::move(circuit), std::move(params)});
    }
    if (g.predictor) {
        auto circuit = build_basic_model(static_cast<int>(model.extractors.size()),
                                         g.predictor_blocks, g.predictor_axes,
                                         g.readout_prep);
        ParamVector params{std::vector<double>(circuit.num_params(), 0.0)};
        model.predictor = DeviceCircuit{*g.predictor, std::move(circuit), std::move(params)};
    }
    model.validate();
    return model;
}

void ClassicalChannel::send(FeatureRecord record) { records_.push_back(std::move(record)); }

FeatureVector ClassicalChannel::collect(std::size_t num_extractors) const {
    FeatureVector f{std::vector<double>(num_extractors, 0.0)};
    std::vector<bool> seen(num_extractors, false);
    for (const auto &r : records_) {
        if (r.extractor_index >= num_extractors || seen[r.extractor_index]) {
            throw ValidationError("channel holds an unexpected or duplicate feature "
                                  "from extractor " +
                                  std::to_string(r.extractor_index));
        }
        seen[r.extractor_index] = true;
        f.values[r.extractor_index] = r.feature;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw ValidationError("channel is missing extractor features");
    }
    return f;
}

double extract_feature(const SqnnModel &model, std::size_t i,
                       std::span<const double> image) {
    check_image(model, image);
    const auto &e = model.extractors.at(i);
    const auto pixels = gather_segment(model.partition, i, image);
    return evaluate_angles(e.circuit, e.params, encoding_angles(pixels, model.encoding),
                           model.encoding.axis, model.backend);
}

FeatureVector extract_features(const SqnnModel &model, std::span<const double> image,
                               std::span<const std::size_t> order) {
    check_image(model, image);
    FeatureVector f{std::vector<double>(model.num_features(), 0.0)};
    if (order.empty()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            f.values[i] = extract_feature(model, i, image);
        }
        return f;
    }
    std::vector<bool> seen(f.size(), false);
    for (auto i : order) {
        if (i >= f.size() || seen[i]) {
            throw ShapeError("extraction order must list every extractor once");
        }
        seen[i] = true;
    }
    if (order.size() != f.size()) {
        throw ShapeError("extraction order must list every extractor once");
    }
    for (auto i : order) {
        f.values[i] = extract_feature(model, i, image);
    }
    return f;
}

double predict(const SqnnModel &model, const FeatureVector &features) {
    if (features.size() != model.num_features()) {
        throw ShapeError("predictor expects " + std::to_string(model.num_features()) +
                         " features, got " + std::to_string(features.size()));
    }
    if (!model.predictor) {
        return features[0];
    }
    const auto &p = *model.predictor;
    return evaluate_angles(p.circuit, p.params, predictor_angles(features),
                           model.encoding.axis, model.backend);
}

ForwardResult forward(const SqnnModel &model, std::span<const double> image,
                      std::size_t sample_id, ClassicalChannel *channel) {
    ForwardResult out{extract_features(model, image), 0.0};
    if (channel != nullptr) {
        for (std::size_t i = 0; i < out.features.size(); ++i) {
            channel->send({model.extractors[i].device.device_id, sample_id, i,
                           out.features[i]});
        }
    }
    out.output = predict(model, out.features);
    return out;
}

BackwardResult backward(const SqnnModel &model, std::span<const double> image,
                        const ForwardResult &fwd, double dloss_doutput) {
    check_image(model, image);
    if (fwd.features.size() != model.num_features()) {
        throw ShapeError("stale forward result: " + std::to_string(fwd.features.size()) +
                         " features for a model with " +
                         std::to_string(model.num_features()));
    }
    BackwardResult out;
    std::vector<double> doutput_dfeature(model.num_features(), 1.0);
    if (model.predictor) {
        const auto &p = *model.predictor;
        const auto angles = predictor_angles(fwd.features);
        out.predictor = full_gradient(p.circuit, p.params,
                                      encode_angles(angles, model.encoding.axis),
                                      model.backend);
        for (auto &g : out.predictor.values) {
            g *= dloss_doutput;
        }
        const auto dangle = input_gradient(p.circuit, p.params, angles,
                                           model.encoding.axis, model.backend);
        for (std::size_t i = 0; i < doutput_dfeature.size(); ++i) {
            doutput_dfeature[i] = dangle[i] * kFeatureAngleSlope;
        }
    }
    for (std::size_t i = 0; i < model.extractors.size(); ++i) {
        const auto &e = model.extractors[i];
        const auto pixels = gather_segment(model.partition, i, image);
        auto g = full_gradient(
            e.circuit, e.params,
            encode_angles(encoding_angles(pixels, model.encoding), model.encoding.axis),
            model.backend);
        const double factor = dloss_doutput * doutput_dfeature[i];
        for (auto &v : g.values) {
            v *= factor;
        }
        out.extractors.push_back(std::move(g));
    }
    return out;
}

SequentialRun run_sequential(const DeviceSpec &device, const SqnnModel &model,
                             std::span<const double> image, std::size_t sample_id) {
    check_image(model, image);
    std::size_t largest = model.num_features();
    for (const auto &seg : model.partition.segments) {
        largest = std::max(largest, seg.size());
    }
    if (static_cast<std::size_t>(device.data_qubit_capacity) < largest) {
        throw CapacityError("device '" + device.device_id + "' has " +
                            std::to_string(device.data_qubit_capacity) +
                            " data qubits, sequential execution needs " +
                            std::to_string(largest));
    }
    SequentialRun run;
    for (std::size_t i = 0; i < model.extractors.size(); ++i) {
        // The device rebuilds extractor i's circuit and reloads its parameters.
        const auto &e = model.extractors[i];
        const double f = extract_feature(model, i, image);
        run.trace.push_back({DeviceRole::Extractor, i, e.circuit, e.params, f});
        run.channel.send({device.device_id, sample_id, i, f});
    }
    run.result.features = run.channel.collect(model.num_features());
    run.result.output = predict(model, run.result.features);
    if (model.predictor) {
        run.trace.push_back({DeviceRole::Predictor, 0, model.predictor->circuit,
                             model.predictor->params, run.result.output});
    }
    return run;
}

} // namespace sqnn
