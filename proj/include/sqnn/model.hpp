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
 * @file model.hpp
 * Scalable QNN: extractor devices turn image segments into features, a
 * predictor device fuses them into the classification score.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqnn/circuit.hpp"
#include "sqnn/encoding.hpp"
#include "sqnn/gradients.hpp"
#include "sqnn/partition.hpp"

namespace sqnn {

/// A device together with the circuit it runs and that circuit's parameters.
struct DeviceCircuit {
    DeviceSpec device;
    CircuitSpec circuit;
    ParamVector params;

    friend bool operator==(const DeviceCircuit &, const DeviceCircuit &) = default;
};

/**
 * @brief Extractor circuits, predictor circuit and the input partition.
 *
 * Without a predictor the model is a plain single-device QNN: it must have
 * exactly one extractor, whose readout is the model output.
 */
struct SqnnModel {
    std::vector<DeviceCircuit> extractors;
    std::optional<DeviceCircuit> predictor;
    PartitionPlan partition;
    AngleEncodingConfig encoding;
    Backend backend = Backend::Factored;

    [[nodiscard]] std::size_t num_features() const noexcept { return extractors.size(); }
    [[nodiscard]] std::size_t num_params() const noexcept;
    /// Throws ValidationError/ShapeError on inconsistent geometry.
    void validate() const;

    friend bool operator==(const SqnnModel &, const SqnnModel &) = default;
};

/// Model geometry and circuit layout; parameters are set separately.
struct ModelGeometry {
    ImageShape image;
    PartitionStrategy strategy = PartitionStrategy::EvenNoOverlap;
    std::vector<DeviceSpec> extractors;
    int extractor_blocks = 3;
    std::vector<Axis> extractor_axes;
    /// Absent for a single-device QNN.
    std::optional<DeviceSpec> predictor;
    int predictor_blocks = 1;
    std::vector<Axis> predictor_axes;
    ReadoutPrep readout_prep = ReadoutPrep::PlusState;
    AngleEncodingConfig encoding;
    Backend backend = Backend::Factored;

    friend bool operator==(const ModelGeometry &, const ModelGeometry &) = default;
};

/// Builds the partition and circuits with all parameters zero.
[[nodiscard]] SqnnModel make_model(const ModelGeometry &geometry);

struct FeatureVector {
    std::vector<double> values;

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values[i]; }
};

/// What travels over the classical link from an extractor to the predictor.
struct FeatureRecord {
    std::string device_id;
    std::size_t sample_id = 0;
    std::size_t extractor_index = 0;
    double feature = 0.0;
};

/**
 * @brief In-process stand-in for the extractor -> predictor link.
 *
 * Records arrive in any order; `collect` reassembles them by extractor
 * index and rejects gaps or duplicates.
 */
class ClassicalChannel {
  public:
    void send(FeatureRecord record);
    [[nodiscard]] FeatureVector collect(std::size_t num_extractors) const;
    [[nodiscard]] std::span<const FeatureRecord> records() const noexcept {
        return records_;
    }

  private:
    std::vector<FeatureRecord> records_;
};

struct ForwardResult {
    FeatureVector features;
    double output = 0.0;
};

struct BackwardResult {
    GradientVector predictor;
    std::vector<GradientVector> extractors;
};

/// Readout of extractor i on its segment of `image`.
[[nodiscard]] double extract_feature(const SqnnModel &model, std::size_t i,
                                     std::span<const double> image);

/// One feature per extractor, evaluated in `order` (default: ascending).
[[nodiscard]] FeatureVector extract_features(const SqnnModel &model,
                                             std::span<const double> image,
                                             std::span<const std::size_t> order = {});

/// Predictor output y' on angle-encoded features (feature_to_angle).
[[nodiscard]] double predict(const SqnnModel &model, const FeatureVector &features);

[[nodiscard]] ForwardResult forward(const SqnnModel &model,
                                    std::span<const double> image,
                                    std::size_t sample_id = 0,
                                    ClassicalChannel *channel = nullptr);

/**
 * @brief Chain rule from dL/dy' to every parameter group.
 *
 * Predictor: dL/dy' * dy'/dtheta_pre. Extractor i: dL/dy' * dy'/df_i *
 * df_i/dtheta_f^i with dy'/df_i = (input shift gradient) * pi/2.
 */
[[nodiscard]] BackwardResult backward(const SqnnModel &model,
                                      std::span<const double> image,
                                      const ForwardResult &fwd, double dloss_doutput);

/// One stage executed by the single device, as recorded classically.
struct SequentialStep {
    DeviceRole role;
    std::size_t index;
    CircuitSpec circuit;
    ParamVector params;
    double output;
};

struct SequentialRun {
    ForwardResult result;
    std::vector<SequentialStep> trace;
    ClassicalChannel channel;
};

/**
 * @brief Run the whole model on one device: extractor roles in order, then
 * the predictor role.
 *
 * Throws CapacityError if `device` is smaller than any segment or than the
 * feature count.
 */
[[nodiscard]] SequentialRun run_sequential(const DeviceSpec &device,
                                           const SqnnModel &model,
                                           std::span<const double> image,
                                           std::size_t sample_id = 0);

} // namespace sqnn
