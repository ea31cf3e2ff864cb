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
#include "sqnn/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "sqnn/error.hpp"

namespace sqnn {

namespace {

template <std::size_t N>
void check_gate(const SquareMatrix<N> &gate, GateCheck check) {
    if (check == GateCheck::Unitary && !is_unitary(gate, kUnitarityTolerance)) {
        throw ValidationError("gate matrix is not unitary (error " +
                              std::to_string(unitarity_error(gate)) + ")");
    }
}

} // namespace

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("statevector supports 1.." +
                            std::to_string(kMaxQubits) + " qubits, got " +
                            std::to_string(num_qubits));
    }
    amps_.assign(std::size_t{1} << num_qubits, Complex{});
    amps_[0] = 1.0;
}

Statevector::Statevector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes,
                                         bool require_normalized) {
    const std::size_t n = amplitudes.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw ShapeError("amplitude vector length " + std::to_string(n) +
                         " is not a power of two >= 2");
    }
    const int qubits = std::countr_zero(n);
    if (qubits > kMaxQubits) {
        throw CapacityError("amplitude vector exceeds " +
                            std::to_string(kMaxQubits) + " qubits");
    }
    Statevector sv(qubits, std::move(amplitudes));
    if (require_normalized && std::abs(sv.norm() - 1.0) > 1e-9) {
        throw ValidationError("amplitudes are not normalized (norm " +
                              std::to_string(sv.norm()) + ")");
    }
    return sv;
}

void Statevector::check_qubit(int q) const {
    if (q < 0 || q >= num_qubits_) {
        throw IndexError("qubit " + std::to_string(q) + " out of range for " +
                         std::to_string(num_qubits_) + "-qubit register");
    }
}

void Statevector::apply(const Gate2 &gate, int target, GateCheck check) {
    check_qubit(target);
    check_gate(gate, check);
    const std::size_t stride = mask(target);
    const Complex g00 = gate(0, 0), g01 = gate(0, 1);
    const Complex g10 = gate(1, 0), g11 = gate(1, 1);
    // Blocks of 2*stride amplitudes; the first half has the target bit clear.
    for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i + stride];
            amps_[i] = g00 * a0 + g01 * a1;
            amps_[i + stride] = g10 * a0 + g11 * a1;
        }
    }
}

void Statevector::apply(const Gate4 &gate, int q_a, int q_b, GateCheck check) {
    check_qubit(q_a);
    check_qubit(q_b);
    if (q_a == q_b) {
        throw IndexError("two-qubit gate needs distinct qubits, got " +
                         std::to_string(q_a) + " twice");
    }
    check_gate(gate, check);
    const std::size_t ma = mask(q_a);
    const std::size_t mb = mask(q_b);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & (ma | mb)) != 0) {
            continue;
        }
        const std::array<std::size_t, 4> idx{i, i | mb, i | ma, i | ma | mb};
        std::array<Complex, 4> in;
        for (std::size_t k = 0; k < 4; ++k) {
            in[k] = amps_[idx[k]];
        }
        for (std::size_t r = 0; r < 4; ++r) {
            Complex acc{};
            for (std::size_t c = 0; c < 4; ++c) {
                acc += gate(r, c) * in[c];
            }
            amps_[idx[r]] = acc;
        }
    }
}

double Statevector::expectation_z(int readout) const {
    check_qubit(readout);
    const std::size_t m = mask(readout);
    double value = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const double p = std::norm(amps_[i]);
        value += (i & m) ? -p : p;
    }
    return value;
}

double Statevector::norm() const {
    double sum = 0.0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

Statevector Statevector::tensor(const Statevector &other) const {
    const int qubits = num_qubits_ + other.num_qubits_;
    if (qubits > kMaxQubits) {
        throw CapacityError("tensor product exceeds " +
                            std::to_string(kMaxQubits) + " qubits");
    }
    std::vector<Complex> out;
    out.reserve(amps_.size() * other.amps_.size());
    for (const auto &a : amps_) {
        for (const auto &b : other.amps_) {
            out.push_back(a * b);
        }
    }
    return Statevector(qubits, std::move(out));
}

Statevector new_zero_state(int num_qubits) { return Statevector(num_qubits); }

Statevector apply_single(Statevector state, const Gate2 &gate, int target) {
    state.apply(gate, target);
    return state;
}

Statevector apply_two(Statevector state, const Gate4 &gate, int q_a, int q_b) {
    state.apply(gate, q_a, q_b);
    return state;
}

double expectation_z(const Statevector &state, int readout) {
    return state.expectation_z(readout);
}

} // namespace sqnn
