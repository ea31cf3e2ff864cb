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
 * @file gradients.hpp
 * Parameter-shift derivatives of circuit expectations, and a central
 * finite-difference oracle.
 *
 * Every gate in a block circuit (and every encoding rotation) is generated by
 * a Pauli product with eigenvalues +-1, so dE/dtheta_k equals
 * [E(theta_k + pi/2) - E(theta_k - pi/2)] / 2 exactly.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

#include "sqnn/circuit.hpp"

namespace sqnn {

inline constexpr double kShift = std::numbers::pi / 2.0;
inline constexpr double kDefaultFiniteDiffStep = 1e-5;

/// Partial derivatives aligned with a ParamVector (or an input vector).
struct GradientVector {
    std::vector<double> values;

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values[i]; }
    [[nodiscard]] double &operator[](std::size_t i) { return values[i]; }

    friend bool operator==(const GradientVector &, const GradientVector &) = default;
};

[[nodiscard]] double param_shift_grad(const CircuitSpec &spec,
                                      const ParamVector &params,
                                      const Statevector &input, std::size_t k);
[[nodiscard]] double param_shift_grad(const CircuitSpec &spec,
                                      const ParamVector &params,
                                      const ProductState &input, std::size_t k,
                                      Backend backend = Backend::Factored);

/// All parameter partials; 2 * num_params circuit evaluations.
[[nodiscard]] GradientVector full_gradient(const CircuitSpec &spec,
                                           const ParamVector &params,
                                           const Statevector &input);
[[nodiscard]] GradientVector full_gradient(const CircuitSpec &spec,
                                           const ParamVector &params,
                                           const ProductState &input,
                                           Backend backend = Backend::Factored);

/// dE/d(angle_i) for an angle-encoded input, by shifting the encoding
/// rotation on data qubit i.
[[nodiscard]] double input_grad(const CircuitSpec &spec, const ParamVector &params,
                                std::span<const double> input_angles,
                                Axis encoding_axis, std::size_t i,
                                Backend backend = Backend::Factored);

[[nodiscard]] GradientVector input_gradient(const CircuitSpec &spec,
                                            const ParamVector &params,
                                            std::span<const double> input_angles,
                                            Axis encoding_axis,
                                            Backend backend = Backend::Factored);

using ScalarFunction = std::function<double(std::span<const double>)>;

/// [f(x + eps e_i) - f(x - eps e_i)] / (2 eps); eps must lie in [1e-7, 1e-3].
[[nodiscard]] double finite_diff_grad(const ScalarFunction &f,
                                      std::span<const double> point,
                                      std::size_t i,
                                      double eps = kDefaultFiniteDiffStep);

} // namespace sqnn
