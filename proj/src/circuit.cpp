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
#include "sqnn/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "sqnn/encoding.hpp"
#include "sqnn/error.hpp"

namespace sqnn {

namespace {

constexpr std::array<Axis, 2> kDefaultAxes{Axis::X, Axis::Z};

// Branch cap for the factored backend; 4096 branches is ~16.7M pair products
// per expectation, beyond which the dense path is the better choice.
constexpr std::size_t kMaxBranches = 4096;

void check_shapes(const CircuitSpec &spec, const ParamVector &params,
                  int input_qubits) {
    if (input_qubits != spec.num_data_qubits) {
        throw ShapeError("circuit has " + std::to_string(spec.num_data_qubits) +
                         " data qubits but input has " +
                         std::to_string(input_qubits));
    }
    if (params.size() != spec.num_params()) {
        throw ShapeError("circuit has " + std::to_string(spec.num_params()) +
                         " parameters but " + std::to_string(params.size()) +
                         " were given");
    }
}

struct Branch {
    std::vector<Qubit> data;
    Qubit readout;
};

double evaluate_factored(const CircuitSpec &spec, const ParamVector &params,
                         const ProductState &input) {
    const auto n = static_cast<std::size_t>(spec.num_data_qubits);
    std::vector<Branch> branches{{input.qubits, readout_state(spec.readout_prep)}};

    for (const auto &block : spec.blocks) {
        // Readout eigenvalue +1 / -1 of P: the coupling acts on data qubit j
        // as R_P(+theta_j) / R_P(-theta_j).
        const Gate2 p = pauli(block.axis);
        const Gate2 proj_plus = Complex{0.5} * (Gate2::identity() + p);
        const Gate2 proj_minus = Complex{0.5} * (Gate2::identity() + Complex{-1.0} * p);
        std::vector<Gate2> rot_plus(n), rot_minus(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double theta = params[block.param_offsets[j]];
            rot_plus[j] = rotation(block.axis, theta);
            rot_minus[j] = rotation(block.axis, -theta);
        }

        std::vector<Branch> next;
        next.reserve(branches.size() * 2);
        for (const auto &branch : branches) {
            for (int sign : {+1, -1}) {
                Qubit r = apply_gate(sign > 0 ? proj_plus : proj_minus, branch.readout);
                if (r[0] == Complex{} && r[1] == Complex{}) {
                    continue;
                }
                const auto &rot = sign > 0 ? rot_plus : rot_minus;
                Branch b{std::vector<Qubit>(n), r};
                for (std::size_t j = 0; j < n; ++j) {
                    b.data[j] = apply_gate(rot[j], branch.data[j]);
                }
                next.push_back(std::move(b));
            }
        }
        if (next.size() > kMaxBranches) {
            throw CapacityError("factored backend exceeds " +
                                std::to_string(kMaxBranches) +
                                " branches; use the dense backend");
        }
        branches = std::move(next);
    }

    // <Z_r> = sum_{k,l} <D_k|D_l> <r_k|Z|r_l>, Hermitian in (k, l).
    auto z_element = [](const Qubit &a, const Qubit &b) {
        return std::conj(a[0]) * b[0] - std::conj(a[1]) * b[1];
    };
    double diagonal = 0.0;
    double off_diagonal = 0.0;
    for (std::size_t k = 0; k < branches.size(); ++k) {
        const auto &bk = branches[k];
        double data_norm = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            data_norm *= std::norm(bk.data[j][0]) + std::norm(bk.data[j][1]);
        }
        diagonal += data_norm * z_element(bk.readout, bk.readout).real();
        for (std::size_t l = k + 1; l < branches.size(); ++l) {
            const auto &bl = branches[l];
            Complex overlap = z_element(bk.readout, bl.readout);
            for (std::size_t j = 0; j < n && overlap != Complex{}; ++j) {
                overlap *= inner(bk.data[j], bl.data[j]);
            }
            off_diagonal += overlap.real();
        }
    }
    return diagonal + 2.0 * off_diagonal;
}

} // namespace

std::string_view to_string(ReadoutPrep prep) {
    return prep == ReadoutPrep::ZeroState ? "zero" : "plus";
}

ReadoutPrep parse_readout_prep(std::string_view text) {
    if (text == "zero") {
        return ReadoutPrep::ZeroState;
    }
    if (text == "plus") {
        return ReadoutPrep::PlusState;
    }
    throw ValidationError("unknown readout preparation '" + std::string(text) +
                          "' (expected zero or plus)");
}

Qubit readout_state(ReadoutPrep prep) {
    const Qubit zero{Complex{1.0}, Complex{}};
    return prep == ReadoutPrep::ZeroState ? zero : apply_gate(hadamard(), zero);
}

std::string_view to_string(Backend backend) {
    return backend == Backend::Dense ? "dense" : "factored";
}

Backend parse_backend(std::string_view text) {
    if (text == "dense") {
        return Backend::Dense;
    }
    if (text == "factored") {
        return Backend::Factored;
    }
    throw ValidationError("unknown backend '" + std::string(text) +
                          "' (expected dense or factored)");
}

std::size_t CircuitSpec::num_params() const noexcept {
    std::size_t count = 0;
    for (const auto &b : blocks) {
        count += b.param_offsets.size();
    }
    return count;
}

void CircuitSpec::validate() const {
    if (num_data_qubits < 1) {
        throw ValidationError("circuit needs at least one data qubit");
    }
    const std::size_t total = num_params();
    std::vector<bool> seen(total, false);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto &offsets = blocks[b].param_offsets;
        if (offsets.size() != static_cast<std::size_t>(num_data_qubits)) {
            throw ValidationError("block " + std::to_string(b) + " has " +
                                  std::to_string(offsets.size()) +
                                  " gates, expected one per data qubit");
        }
        for (auto k : offsets) {
            if (k >= total || seen[k]) {
                throw ValidationError("block " + std::to_string(b) +
                                      " has invalid or repeated parameter offset " +
                                      std::to_string(k));
            }
            seen[k] = true;
        }
    }
}

std::span<const Axis> default_axis_sequence() { return kDefaultAxes; }

CircuitSpec build_basic_model(int n_data, int n_blocks,
                              std::span<const Axis> axis_sequence,
                              ReadoutPrep prep) {
    if (n_data < 1 || n_blocks < 1) {
        throw ValidationError("basic model needs n_data >= 1 and n_blocks >= 1");
    }
    if (axis_sequence.empty()) {
        axis_sequence = default_axis_sequence();
    }
    CircuitSpec spec;
    spec.num_data_qubits = n_data;
    spec.readout_prep = prep;
    std::size_t next = 0;
    for (int k = 0; k < n_blocks; ++k) {
        Block block{axis_sequence[static_cast<std::size_t>(k) % axis_sequence.size()], {}};
        for (int j = 0; j < n_data; ++j) {
            block.param_offsets.push_back(next++);
        }
        spec.blocks.push_back(std::move(block));
    }
    return spec;
}

std::vector<BoundGate> bind(const CircuitSpec &spec, const ParamVector &params) {
    if (params.size() != spec.num_params()) {
        throw ShapeError("bind: circuit has " + std::to_string(spec.num_params()) +
                         " parameters but " + std::to_string(params.size()) +
                         " were given");
    }
    std::vector<BoundGate> gates;
    gates.reserve(params.size());
    for (const auto &block : spec.blocks) {
        for (int j = 0; j < spec.num_data_qubits; ++j) {
            const std::size_t k = block.param_offsets[static_cast<std::size_t>(j)];
            gates.push_back({ising(block.axis, params[k]), j, spec.readout_qubit(), k});
        }
    }
    return gates;
}

double evaluate(const CircuitSpec &spec, const ParamVector &params,
                const Statevector &input) {
    check_shapes(spec, params, input.num_qubits());
    Statevector state = input.tensor(Statevector(1));
    if (spec.readout_prep == ReadoutPrep::PlusState) {
        state.apply(hadamard(), spec.readout_qubit());
    }
    for (const auto &gate : bind(spec, params)) {
        // Closed-form Ising matrices are unitary to rounding; skip the check.
        state.apply(gate.matrix, gate.data_qubit, gate.readout_qubit,
                    GateCheck::Skip);
    }
    return state.expectation_z(spec.readout_qubit());
}

double evaluate(const CircuitSpec &spec, const ParamVector &params,
                const ProductState &input, Backend backend) {
    check_shapes(spec, params, input.num_qubits());
    if (backend == Backend::Dense) {
        return evaluate(spec, params, input.to_statevector());
    }
    return evaluate_factored(spec, params, input);
}

double evaluate_angles(const CircuitSpec &spec, const ParamVector &params,
                       std::span<const double> angles, Axis encoding_axis,
                       Backend backend) {
    return evaluate(spec, params, encode_angles(angles, encoding_axis), backend);
}

} // namespace sqnn
