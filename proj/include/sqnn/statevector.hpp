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
 * @file statevector.hpp
 * Dense statevector of an n-qubit register.
 *
 * Qubit 0 is the most significant bit of the basis index: for two qubits the
 * amplitude order is |00>, |01>, |10>, |11> with the left label belonging to
 * qubit 0. Two-qubit gates act on the local basis |q_a q_b> with q_a as the
 * more significant bit.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sqnn/gates.hpp"

namespace sqnn {

inline constexpr int kMaxQubits = 24;
inline constexpr double kUnitarityTolerance = 1e-10;

/// Whether gate matrices are checked for unitarity before application.
enum class GateCheck { Unitary, Skip };

class Statevector {
  public:
    /// |0...0> on `num_qubits` qubits. Throws CapacityError outside [1, 24].
    explicit Statevector(int num_qubits);

    /**
     * @brief Wrap an explicit amplitude vector.
     *
     * The length must be a power of two (>= 2). With `require_normalized`
     * the L2 norm must be 1 within 1e-9; pass false to build unnormalized
     * vectors for linearity checks.
     */
    static Statevector from_amplitudes(std::vector<Complex> amplitudes,
                                       bool require_normalized = true);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }

    void apply(const Gate2 &gate, int target, GateCheck check = GateCheck::Unitary);
    void apply(const Gate4 &gate, int q_a, int q_b,
               GateCheck check = GateCheck::Unitary);

    /// <Z> on `readout`: sum |a_i|^2 (+1 if the qubit's bit is 0, else -1).
    [[nodiscard]] double expectation_z(int readout) const;
    [[nodiscard]] double norm() const;

    /// Tensor product with `other` appended as the least significant qubits.
    [[nodiscard]] Statevector tensor(const Statevector &other) const;

  private:
    Statevector(int num_qubits, std::vector<Complex> amplitudes);
    void check_qubit(int q) const;
    [[nodiscard]] std::size_t mask(int q) const {
        return std::size_t{1} << (num_qubits_ - 1 - q);
    }

    int num_qubits_;
    std::vector<Complex> amps_;
};

[[nodiscard]] Statevector new_zero_state(int num_qubits);
[[nodiscard]] Statevector apply_single(Statevector state, const Gate2 &gate,
                                       int target);
[[nodiscard]] Statevector apply_two(Statevector state, const Gate4 &gate,
                                    int q_a, int q_b);
[[nodiscard]] double expectation_z(const Statevector &state, int readout);

} // namespace sqnn
