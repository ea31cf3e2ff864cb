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
 * @file gates.hpp
 * Fixed and parameterized gate matrices.
 *
 * Rotations use the closed form exp(-i P theta/2) = cos(theta/2) I -
 * i sin(theta/2) P, and Ising couplings the same form with P (x) P. Global
 * phase is kept exactly as the closed form produces it.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string_view>

namespace sqnn {

using Complex = std::complex<double>;

enum class Axis { X, Y, Z };

[[nodiscard]] std::string_view to_string(Axis axis);
/// Accepts "X"/"Y"/"Z" in either case; throws ValidationError otherwise.
[[nodiscard]] Axis parse_axis(std::string_view text);

/**
 * @brief Dense row-major N x N complex matrix.
 */
template <std::size_t N> struct SquareMatrix {
    static constexpr std::size_t dim = N;
    std::array<Complex, N * N> entries{};

    [[nodiscard]] constexpr Complex &operator()(std::size_t row,
                                                std::size_t col) {
        return entries[row * N + col];
    }
    [[nodiscard]] constexpr const Complex &operator()(std::size_t row,
                                                      std::size_t col) const {
        return entries[row * N + col];
    }

    [[nodiscard]] static constexpr SquareMatrix identity() {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    friend bool operator==(const SquareMatrix &, const SquareMatrix &) = default;
};

using Gate2 = SquareMatrix<2>;
using Gate4 = SquareMatrix<4>;

template <std::size_t N>
[[nodiscard]] SquareMatrix<N> operator*(const SquareMatrix<N> &a,
                                        const SquareMatrix<N> &b) {
    SquareMatrix<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t k = 0; k < N; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < N; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

template <std::size_t N>
[[nodiscard]] SquareMatrix<N> operator*(Complex scalar, SquareMatrix<N> m) {
    for (auto &e : m.entries) {
        e *= scalar;
    }
    return m;
}

template <std::size_t N>
[[nodiscard]] SquareMatrix<N> operator+(SquareMatrix<N> a,
                                        const SquareMatrix<N> &b) {
    for (std::size_t i = 0; i < N * N; ++i) {
        a.entries[i] += b.entries[i];
    }
    return a;
}

template <std::size_t N>
[[nodiscard]] SquareMatrix<N> adjoint(const SquareMatrix<N> &m) {
    SquareMatrix<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            out(i, j) = std::conj(m(j, i));
        }
    }
    return out;
}

/// Largest entrywise modulus of a - b.
template <std::size_t N>
[[nodiscard]] double max_abs_diff(const SquareMatrix<N> &a,
                                  const SquareMatrix<N> &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < N * N; ++i) {
        worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
    }
    return worst;
}

/// Largest entrywise deviation of U^dagger U from the identity.
template <std::size_t N>
[[nodiscard]] double unitarity_error(const SquareMatrix<N> &m) {
    return max_abs_diff(adjoint(m) * m, SquareMatrix<N>::identity());
}

template <std::size_t N>
[[nodiscard]] bool is_unitary(const SquareMatrix<N> &m, double tol) {
    return unitarity_error(m) <= tol;
}

/// Kronecker product; `a` acts on the more significant qubit.
[[nodiscard]] Gate4 kron(const Gate2 &a, const Gate2 &b);

[[nodiscard]] Gate2 pauli(Axis axis);
[[nodiscard]] Gate2 hadamard();
/// exp(-i P theta / 2). Throws ValidationError for non-finite theta.
[[nodiscard]] Gate2 rotation(Axis axis, double theta);
/// exp(-i (P (x) P) theta / 2). Throws ValidationError for non-finite theta.
[[nodiscard]] Gate4 ising(Axis axis, double theta);

} // namespace sqnn
