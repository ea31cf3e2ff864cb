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
#pragma once

#include <numbers>
#include <span>

#include "sqnn/gates.hpp"
#include "sqnn/product_state.hpp"
#include "sqnn/statevector.hpp"

namespace sqnn {

/// Rotation axis and radians-per-unit-input used to load classical values.
struct AngleEncodingConfig {
    Axis axis = Axis::X;
    double scale = std::numbers::pi;

    /// Throws ValidationError unless scale is in (0, 2 pi].
    void validate() const;
    friend bool operator==(const AngleEncodingConfig &,
                           const AngleEncodingConfig &) = default;
};

/// Angles that `angle_encode` would load for input `x`.
[[nodiscard]] std::vector<double> encoding_angles(std::span<const double> x,
                                                  const AngleEncodingConfig &config);

/// (x) R_axis(angle_j)|0> as a product state. Throws on non-finite angles.
[[nodiscard]] ProductState encode_angles(std::span<const double> angles, Axis axis);

/// (x) R_axis(scale * x_j)|0>, dense.
[[nodiscard]] Statevector angle_encode(std::span<const double> x,
                                       const AngleEncodingConfig &config = {});
[[nodiscard]] ProductState angle_encode_product(std::span<const double> x,
                                                const AngleEncodingConfig &config = {});

/// |b_1 ... b_n> with b_j = 1 iff x_j >= threshold.
[[nodiscard]] Statevector basis_encode(std::span<const double> x,
                                       double threshold = 0.5);

/// Amplitudes x_i / ||x||. Length must be a power of two; no padding.
[[nodiscard]] Statevector amplitude_encode(std::span<const double> x);

/// d(angle)/d(feature) of `feature_to_angle` inside [-1, 1].
inline constexpr double kFeatureAngleSlope = std::numbers::pi / 2.0;

/// Maps a readout expectation f in [-1, 1] onto an angle in [0, pi] as
/// (f + 1) pi / 2. Inputs are clamped to [-1, 1].
[[nodiscard]] double feature_to_angle(double feature);

} // namespace sqnn
