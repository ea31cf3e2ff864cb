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
#include "sqnn/gates.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "sqnn/error.hpp"

namespace sqnn {

namespace {

void require_finite(double theta, std::string_view what) {
    if (!std::isfinite(theta)) {
        throw ValidationError(std::string(what) + ": angle must be finite");
    }
}

} // namespace

std::string_view to_string(Axis axis) {
    switch (axis) {
    case Axis::X:
        return "X";
    case Axis::Y:
        return "Y";
    case Axis::Z:
        return "Z";
    }
    return "?";
}

Axis parse_axis(std::string_view text) {
    if (text.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(text[0]))) {
        case 'X':
            return Axis::X;
        case 'Y':
            return Axis::Y;
        case 'Z':
            return Axis::Z;
        default:
            break;
        }
    }
    throw ValidationError("unknown axis '" + std::string(text) +
                          "' (expected X, Y or Z)");
}

Gate4 kron(const Gate2 &a, const Gate2 &b) {
    Gate4 out;
    for (std::size_t ar = 0; ar < 2; ++ar) {
        for (std::size_t ac = 0; ac < 2; ++ac) {
            for (std::size_t br = 0; br < 2; ++br) {
                for (std::size_t bc = 0; bc < 2; ++bc) {
                    out(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

Gate2 pauli(Axis axis) {
    constexpr Complex i{0.0, 1.0};
    Gate2 m;
    switch (axis) {
    case Axis::X:
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case Axis::Y:
        m(0, 1) = -i;
        m(1, 0) = i;
        break;
    case Axis::Z:
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    }
    return m;
}

Gate2 hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    Gate2 m;
    m(0, 0) = h;
    m(0, 1) = h;
    m(1, 0) = h;
    m(1, 1) = -h;
    return m;
}

Gate2 rotation(Axis axis, double theta) {
    require_finite(theta, "rotation");
    const double c = std::cos(theta / 2.0);
    const Complex minus_i_s{0.0, -std::sin(theta / 2.0)};
    return Complex{c} * Gate2::identity() + minus_i_s * pauli(axis);
}

Gate4 ising(Axis axis, double theta) {
    require_finite(theta, "ising");
    const double c = std::cos(theta / 2.0);
    const Complex minus_i_s{0.0, -std::sin(theta / 2.0)};
    const Gate2 p = pauli(axis);
    return Complex{c} * Gate4::identity() + minus_i_s * kron(p, p);
}

} // namespace sqnn
