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
#include "sqnn/encoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "sqnn/error.hpp"

namespace sqnn {

Statevector ProductState::to_statevector() const {
    if (qubits.empty()) {
        throw ShapeError("empty product state");
    }
    std::vector<Complex> amps{Complex{1.0}};
    for (const auto &q : qubits) {
        std::vector<Complex> next;
        next.reserve(amps.size() * 2);
        for (const auto &a : amps) {
            next.push_back(a * q[0]);
            next.push_back(a * q[1]);
        }
        amps = std::move(next);
    }
    return Statevector::from_amplitudes(std::move(amps), false);
}

void AngleEncodingConfig::validate() const {
    if (!(scale > 0.0 && scale <= 2.0 * std::numbers::pi)) {
        throw ValidationError("encoding scale must lie in (0, 2pi], got " +
                              std::to_string(scale));
    }
}

std::vector<double> encoding_angles(std::span<const double> x,
                                    const AngleEncodingConfig &config) {
    std::vector<double> angles(x.size());
    std::transform(x.begin(), x.end(), angles.begin(),
                   [&](double v) { return config.scale * v; });
    return angles;
}

ProductState encode_angles(std::span<const double> angles, Axis axis) {
    if (angles.empty()) {
        throw ShapeError("cannot encode an empty vector");
    }
    ProductState state;
    state.qubits.reserve(angles.size());
    const Qubit zero{Complex{1.0}, Complex{}};
    for (double a : angles) {
        state.qubits.push_back(apply_gate(rotation(axis, a), zero));
    }
    return state;
}

ProductState angle_encode_product(std::span<const double> x,
                                  const AngleEncodingConfig &config) {
    config.validate();
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw ValidationError("angle_encode: input entries must be finite");
        }
    }
    return encode_angles(encoding_angles(x, config), config.axis);
}

Statevector angle_encode(std::span<const double> x,
                         const AngleEncodingConfig &config) {
    return angle_encode_product(x, config).to_statevector();
}

Statevector basis_encode(std::span<const double> x, double threshold) {
    if (x.empty()) {
        throw ShapeError("cannot encode an empty vector");
    }
    Statevector state(static_cast<int>(x.size()));
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!std::isfinite(x[j])) {
            throw ValidationError("basis_encode: input entries must be finite");
        }
        if (x[j] >= threshold) {
            state.apply(pauli(Axis::X), static_cast<int>(j));
        }
    }
    return state;
}

Statevector amplitude_encode(std::span<const double> x) {
    if (x.size() < 2 || !std::has_single_bit(x.size())) {
        throw ShapeError("amplitude_encode: length " + std::to_string(x.size()) +
                         " is not a power of two >= 2");
    }
    double sum = 0.0;
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw ValidationError("amplitude_encode: input entries must be finite");
        }
        sum += v * v;
    }
    const double norm = std::sqrt(sum);
    if (norm == 0.0) {
        throw ValidationError("amplitude_encode: zero vector has no state");
    }
    std::vector<Complex> amps(x.size());
    std::transform(x.begin(), x.end(), amps.begin(),
                   [&](double v) { return Complex{v / norm}; });
    return Statevector::from_amplitudes(std::move(amps));
}

double feature_to_angle(double feature) {
    return (std::clamp(feature, -1.0, 1.0) + 1.0) * kFeatureAngleSlope;
}

} // namespace sqnn
