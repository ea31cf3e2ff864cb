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

#include <array>
#include <span>
#include <vector>

#include "sqnn/gates.hpp"
#include "sqnn/statevector.hpp"

namespace sqnn {

using Qubit = std::array<Complex, 2>;

/// Unentangled register: one normalized single-qubit state per qubit, in
/// qubit order. Angle encoding always produces one of these.
struct ProductState {
    std::vector<Qubit> qubits;

    [[nodiscard]] int num_qubits() const noexcept {
        return static_cast<int>(qubits.size());
    }
    /// Dense expansion (qubit 0 most significant).
    [[nodiscard]] Statevector to_statevector() const;
};

[[nodiscard]] inline Qubit apply_gate(const Gate2 &g, const Qubit &q) {
    return {g(0, 0) * q[0] + g(0, 1) * q[1], g(1, 0) * q[0] + g(1, 1) * q[1]};
}

/// <a|b>
[[nodiscard]] inline Complex inner(const Qubit &a, const Qubit &b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

} // namespace sqnn
