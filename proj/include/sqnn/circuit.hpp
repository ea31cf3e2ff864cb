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
 * @file circuit.hpp
 * Layered variational circuits of Ising-coupling blocks.
 *
 * A circuit has `num_data_qubits` data qubits followed by one readout qubit
 * (the last, least significant qubit). Each block entangles every data qubit
 * with the readout through exp(-i theta/2 P (x) P) for the block's axis P,
 * one trainable angle per gate. The circuit output is <Z> on the readout.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "sqnn/gates.hpp"
#include "sqnn/product_state.hpp"
#include "sqnn/statevector.hpp"

namespace sqnn {

enum class ReadoutPrep { ZeroState, PlusState };

[[nodiscard]] std::string_view to_string(ReadoutPrep prep);
[[nodiscard]] ReadoutPrep parse_readout_prep(std::string_view text);
[[nodiscard]] Qubit readout_state(ReadoutPrep prep);

/**
 * @brief How a circuit expectation is computed.
 *
 * `Dense` simulates the full 2^(n+1) statevector. `Factored` exploits the
 * block structure: a readout in an eigenstate of the block axis turns every
 * coupling into a single-qubit rotation on the data qubit, so a product-state
 * input stays a sum of at most 2^blocks product branches. Both are exact.
 */
enum class Backend { Dense, Factored };

[[nodiscard]] std::string_view to_string(Backend backend);
[[nodiscard]] Backend parse_backend(std::string_view text);

struct Block {
    Axis axis = Axis::X;
    /// Parameter index of the gate on data qubit j.
    std::vector<std::size_t> param_offsets;

    friend bool operator==(const Block &, const Block &) = default;
};

struct CircuitSpec {
    int num_data_qubits = 0;
    ReadoutPrep readout_prep = ReadoutPrep::PlusState;
    std::vector<Block> blocks;

    [[nodiscard]] int readout_qubit() const noexcept { return num_data_qubits; }
    [[nodiscard]] int num_qubits() const noexcept { return num_data_qubits + 1; }
    [[nodiscard]] std::size_t num_params() const noexcept;

    /// Every block covers each data qubit once and offsets enumerate
    /// 0..num_params()-1 exactly once. Throws ValidationError.
    void validate() const;

    friend bool operator==(const CircuitSpec &, const CircuitSpec &) = default;
};

struct ParamVector {
    std::vector<double> values;

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values[i]; }
    [[nodiscard]] double &operator[](std::size_t i) { return values[i]; }

    friend bool operator==(const ParamVector &, const ParamVector &) = default;
};

/// Block k uses axis_sequence[k % size]; parameters are numbered block by
/// block, data qubit ascending.
[[nodiscard]] CircuitSpec
build_basic_model(int n_data, int n_blocks,
                  std::span<const Axis> axis_sequence = {},
                  ReadoutPrep prep = ReadoutPrep::PlusState);

/// Default block axes when none are given: X, Z, X, Z, ...
[[nodiscard]] std::span<const Axis> default_axis_sequence();

struct BoundGate {
    Gate4 matrix;
    int data_qubit;
    int readout_qubit;
    std::size_t param_index;
};

/// Concrete gate list in application order.
[[nodiscard]] std::vector<BoundGate> bind(const CircuitSpec &spec,
                                          const ParamVector &params);

/// Dense evaluation of the circuit on `input` (data qubits only).
[[nodiscard]] double evaluate(const CircuitSpec &spec, const ParamVector &params,
                              const Statevector &input);

[[nodiscard]] double evaluate(const CircuitSpec &spec, const ParamVector &params,
                              const ProductState &input,
                              Backend backend = Backend::Factored);

/// Evaluate on the product state (x) R_axis(angle_j)|0>.
[[nodiscard]] double evaluate_angles(const CircuitSpec &spec,
                                     const ParamVector &params,
                                     std::span<const double> angles,
                                     Axis encoding_axis, Backend backend);

} // namespace sqnn
