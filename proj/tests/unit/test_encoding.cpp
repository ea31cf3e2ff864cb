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
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracle.hpp"
#include "sqnn/encoding.hpp"
#include "sqnn/error.hpp"

using namespace sqnn;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double pi = std::numbers::pi;
const Complex I{0.0, 1.0};
} // namespace

TEST_CASE("angle_encode examples", "[encoding]") {
    const std::vector<double> zeros{0.0, 0.0, 0.0};
    const auto s0 = angle_encode(zeros);
    CHECK(s0[0] == Complex(1.0));
    CHECK(s0.num_qubits() == 3);

    const std::vector<double> one{1.0};
    const auto s1 = angle_encode(one, {Axis::X, pi});
    CHECK(std::abs(s1[0]) < 1e-15);
    CHECK(std::abs(s1[1] - (-I)) < 1e-15);

    // Tensor product of closed-form single-qubit states.
    const std::vector<double> x{0.5, 0.25};
    const auto s2 = angle_encode(x);
    const Complex a0 = std::cos(pi * 0.5 / 2);
    const Complex a1 = -I * std::sin(pi * 0.5 / 2);
    const Complex b0 = std::cos(pi * 0.25 / 2);
    const Complex b1 = -I * std::sin(pi * 0.25 / 2);
    CHECK(std::abs(s2[0] - a0 * b0) < 1e-15);
    CHECK(std::abs(s2[1] - a0 * b1) < 1e-15);
    CHECK(std::abs(s2[2] - a1 * b0) < 1e-15);
    CHECK(std::abs(s2[3] - a1 * b1) < 1e-15);
}

TEST_CASE("angle_encode properties", "[encoding][property]") {
    Rng rng(2);
    for (int t = 0; t < 100; ++t) {
        const auto n = 1 + rng.below(6);
        const auto x = oracle::uniform(rng, n, 0.0, 1.0);
        const auto axis = oracle::random_axis(rng);
        const auto s = angle_encode(x, {axis, pi});
        CHECK_THAT(s.norm(), WithinAbs(1.0, 1e-12));
        // Product form and dense form agree.
        const auto dense = angle_encode_product(x, {axis, pi}).to_statevector();
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(std::abs(s[i] - dense[i]) < 1e-15);
        }
        // Injective on [0, 1] with scale pi for X and Y rotations: a distinct
        // input lowers the fidelity. Z rotations of |0> only add a phase.
        auto y = x;
        y[rng.below(n)] = rng.uniform(0.0, 1.0);
        if (y != x && axis != Axis::Z) {
            const auto u = angle_encode(y, {axis, pi});
            Complex overlap = 0.0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                overlap += std::conj(s[i]) * u[i];
            }
            CHECK(std::norm(overlap) < 1.0 - 1e-12);
        }
    }
    const std::vector<double> a{0.2};
    const std::vector<double> b{0.9};
    CHECK_THAT(std::abs(angle_encode(a, {Axis::Z, pi})[0]), WithinAbs(1.0, 1e-15));
    CHECK_THAT(std::abs(angle_encode(b, {Axis::Z, pi})[0]), WithinAbs(1.0, 1e-15));

    const std::vector<double> bad{0.1, std::numeric_limits<double>::quiet_NaN()};
    CHECK_THROWS_AS(angle_encode(bad), ValidationError);
    CHECK_THROWS_AS(AngleEncodingConfig({Axis::X, 0.0}).validate(), ValidationError);
    CHECK_THROWS_AS(AngleEncodingConfig({Axis::X, 7.0}).validate(), ValidationError);
    CHECK_NOTHROW(AngleEncodingConfig({Axis::X, 2 * pi}).validate());
}

TEST_CASE("basis_encode", "[encoding]") {
    const std::vector<double> example{0.3, 0.6, 0.2, 0.8};
    const auto s = basis_encode(example, 0.5);
    CHECK(s[0b0101] == Complex(1.0));
    const std::vector<double> zeros{0.0, 0.0};
    CHECK(basis_encode(zeros, 0.5)[0] == Complex(1.0));
    const std::vector<double> edge{0.5};
    CHECK(basis_encode(edge, 0.5)[1] == Complex(1.0));

    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        const auto x = oracle::uniform(rng, 1 + rng.below(6), 0.0, 1.0);
        const auto b = basis_encode(x, 0.5);
        int nonzero = 0;
        for (auto a : b.amplitudes()) {
            if (a != Complex(0.0)) {
                ++nonzero;
                CHECK(a == Complex(1.0));
            }
        }
        CHECK(nonzero == 1);
    }
}

TEST_CASE("amplitude_encode", "[encoding]") {
    const std::vector<double> e0{1, 0, 0, 0};
    CHECK(amplitude_encode(e0)[0] == Complex(1.0));
    const std::vector<double> flat{1, 1, 1, 1};
    const auto u = amplitude_encode(flat);
    for (auto a : u.amplitudes()) {
        CHECK_THAT(a.real(), WithinAbs(0.5, 1e-15));
    }
    const std::vector<double> zero{0, 0};
    CHECK_THROWS_AS(amplitude_encode(zero), ValidationError);
    const std::vector<double> three{1, 2, 3};
    CHECK_THROWS_AS(amplitude_encode(three), ShapeError);

    const std::vector<double> x{0.2, -1.3, 0.7, 2.1, 0.0, 0.4, -0.9, 1.0};
    std::vector<double> cx;
    for (double v : x) {
        cx.push_back(3.7 * v);
    }
    const auto a = amplitude_encode(x);
    const auto b = amplitude_encode(cx);
    CHECK_THAT(a.norm(), WithinAbs(1.0, 1e-15));
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(std::abs(a[i] - b[i]) < 1e-15);
    }
}

TEST_CASE("feature_to_angle", "[encoding]") {
    CHECK(feature_to_angle(-1.0) == 0.0);
    CHECK_THAT(feature_to_angle(1.0), WithinAbs(pi, 1e-15));
    CHECK_THAT(feature_to_angle(0.0), WithinAbs(pi / 2, 1e-15));
    CHECK_THAT(feature_to_angle(1.5), WithinAbs(pi, 1e-15));
    CHECK(feature_to_angle(-3.0) == 0.0);
    CHECK(kFeatureAngleSlope == pi / 2);
}
