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
#include "sqnn/gradients.hpp"

#include <string>

#include "sqnn/encoding.hpp"
#include "sqnn/error.hpp"

namespace sqnn {

namespace {

void check_index(std::size_t i, std::size_t size, const char *what) {
    if (i >= size) {
        throw IndexError(std::string(what) + " index " + std::to_string(i) +
                         " out of range for size " + std::to_string(size));
    }
}

template <class Evaluate>
double shifted_difference(std::vector<double> point, std::size_t i,
                          Evaluate &&eval) {
    const double base = point[i];
    point[i] = base + kShift;
    const double plus = eval(point);
    point[i] = base - kShift;
    const double minus = eval(point);
    return 0.5 * (plus - minus);
}

template <class Input, class... Extra>
double shift_param(const CircuitSpec &spec, const ParamVector &params,
                   const Input &input, std::size_t k, Extra... extra) {
    check_index(k, params.size(), "parameter");
    return shifted_difference(params.values, k, [&](const std::vector<double> &p) {
        return evaluate(spec, ParamVector{p}, input, extra...);
    });
}

} // namespace

double param_shift_grad(const CircuitSpec &spec, const ParamVector &params,
                        const Statevector &input, std::size_t k) {
    return shift_param(spec, params, input, k);
}

double param_shift_grad(const CircuitSpec &spec, const ParamVector &params,
                        const ProductState &input, std::size_t k,
                        Backend backend) {
    return shift_param(spec, params, input, k, backend);
}

GradientVector full_gradient(const CircuitSpec &spec, const ParamVector &params,
                             const Statevector &input) {
    GradientVector g{std::vector<double>(params.size())};
    for (std::size_t k = 0; k < params.size(); ++k) {
        g[k] = param_shift_grad(spec, params, input, k);
    }
    return g;
}

GradientVector full_gradient(const CircuitSpec &spec, const ParamVector &params,
                             const ProductState &input, Backend backend) {
    GradientVector g{std::vector<double>(params.size())};
    for (std::size_t k = 0; k < params.size(); ++k) {
        g[k] = param_shift_grad(spec, params, input, k, backend);
    }
    return g;
}

double input_grad(const CircuitSpec &spec, const ParamVector &params,
                  std::span<const double> input_angles, Axis encoding_axis,
                  std::size_t i, Backend backend) {
    check_index(i, input_angles.size(), "input");
    return shifted_difference(
        std::vector<double>(input_angles.begin(), input_angles.end()), i,
        [&](const std::vector<double> &angles) {
            return evaluate_angles(spec, params, angles, encoding_axis, backend);
        });
}

GradientVector input_gradient(const CircuitSpec &spec, const ParamVector &params,
                              std::span<const double> input_angles,
                              Axis encoding_axis, Backend backend) {
    GradientVector g{std::vector<double>(input_angles.size())};
    for (std::size_t i = 0; i < input_angles.size(); ++i) {
        g[i] = input_grad(spec, params, input_angles, encoding_axis, i, backend);
    }
    return g;
}

double finite_diff_grad(const ScalarFunction &f, std::span<const double> point,
                        std::size_t i, double eps) {
    check_index(i, point.size(), "coordinate");
    if (!(eps >= 1e-7 && eps <= 1e-3)) {
        throw ValidationError("finite difference step must lie in [1e-7, 1e-3]");
    }
    std::vector<double> x(point.begin(), point.end());
    x[i] = point[i] + eps;
    const double plus = f(x);
    x[i] = point[i] - eps;
    const double minus = f(x);
    return (plus - minus) / (2.0 * eps);
}

} // namespace sqnn
