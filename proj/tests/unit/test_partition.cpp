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

#include <numeric>
#include <set>
#include <string>

#include "oracle.hpp"
#include "sqnn/error.hpp"
#include "sqnn/partition.hpp"

using namespace sqnn;

namespace {

std::vector<DeviceSpec> extractors(std::initializer_list<int> caps) {
    std::vector<DeviceSpec> out;
    int i = 0;
    for (int c : caps) {
        out.push_back({"e" + std::to_string(i++), c, DeviceRole::Extractor});
    }
    return out;
}

std::string grid(const PartitionPlan &plan) {
    const auto text = render(plan);
    return text.substr(0, text.find("\n\n"));
}

} // namespace

TEST_CASE("even 4x4 with four devices gives four 2x2 tiles", "[partition]") {
    const auto plan = make_partition({4, 4}, extractors({4, 4, 4, 4}),
                                     PartitionStrategy::EvenNoOverlap);
    REQUIRE(plan.num_segments() == 4);
    CHECK(plan.tiles[0] == Tile{0, 0, 2, 2});
    CHECK(plan.tiles[1] == Tile{0, 2, 2, 2});
    CHECK(plan.tiles[2] == Tile{2, 0, 2, 2});
    CHECK(plan.tiles[3] == Tile{2, 2, 2, 2});
    CHECK(grid(plan) == "0011\n0011\n2233\n2233");
    CHECK(plan.segments[1] == std::vector<std::size_t>{2, 3, 6, 7});
    CHECK(plan.overlap_pixels() == 0);
}

TEST_CASE("uneven [8,4,4] gives a 2x4 tile and two 2x2 tiles", "[partition]") {
    const auto plan = make_partition({4, 4}, extractors({8, 4, 4}),
                                     PartitionStrategy::UnevenNoOverlap);
    REQUIRE(plan.num_segments() == 3);
    CHECK(plan.tiles[0] == Tile{0, 0, 2, 4});
    CHECK(plan.tiles[1] == Tile{2, 0, 2, 2});
    CHECK(plan.tiles[2] == Tile{2, 2, 2, 2});
    CHECK(grid(plan) == "0000\n0000\n1122\n1122");
}

TEST_CASE("infeasible partitions are rejected", "[partition]") {
    CHECK_THROWS_AS(make_partition({4, 4}, extractors({5, 5, 5, 5}),
                                   PartitionStrategy::EvenNoOverlap),
                    PartitionError);
    CHECK_THROWS_AS(make_partition({4, 4}, extractors({4, 4, 8}),
                                   PartitionStrategy::EvenNoOverlap),
                    PartitionError);
    // 7 pixels cannot form a rectangle inside a 4x4 image.
    CHECK_THROWS_AS(make_partition({4, 4}, extractors({7, 9}),
                                   PartitionStrategy::UnevenNoOverlap),
                    PartitionError);
    CHECK_THROWS_AS(make_partition({3, 3}, extractors({4, 4}),
                                   PartitionStrategy::EvenOverlap),
                    PartitionError);
    CHECK_THROWS_AS(make_partition({4, 4}, {}, PartitionStrategy::EvenNoOverlap),
                    PartitionError);
}

TEST_CASE("predictor devices are ignored by make_partition", "[partition]") {
    auto devs = extractors({4, 4, 4, 4});
    devs.push_back({"p", 4, DeviceRole::Predictor});
    CHECK(make_partition({4, 4}, devs, PartitionStrategy::EvenNoOverlap).num_segments() == 4);
}

TEST_CASE("overlap strategy covers everything and reports shared pixels", "[partition]") {
    const auto plan = make_partition({4, 4}, extractors({9, 9, 9, 9}),
                                     PartitionStrategy::EvenOverlap);
    const auto cov = plan.coverage();
    CHECK(std::all_of(cov.begin(), cov.end(), [](int c) { return c >= 1; }));
    CHECK(plan.overlap_pixels() == 12);
    CHECK(grid(plan) == "1221\n2442\n2442\n1221");
    CHECK(render(plan).find("overlap: 12 pixels") != std::string::npos);
}

TEST_CASE("no-overlap plans cover every pixel exactly once", "[partition][property]") {
    struct Case {
        ImageShape shape;
        std::vector<int> caps;
        PartitionStrategy strategy;
    };
    const std::vector<Case> cases = {
        {{4, 4}, {4, 4, 4, 4}, PartitionStrategy::EvenNoOverlap},
        {{6, 6}, {9, 9, 9, 9}, PartitionStrategy::EvenNoOverlap},
        {{8, 8}, {16, 16, 16, 16}, PartitionStrategy::EvenNoOverlap},
        {{4, 4}, {8, 4, 4}, PartitionStrategy::UnevenNoOverlap},
        {{4, 6}, {6, 6, 12}, PartitionStrategy::UnevenNoOverlap},
        {{3, 3}, {3, 6}, PartitionStrategy::UnevenNoOverlap},
        {{4, 4}, {16}, PartitionStrategy::EvenNoOverlap},
    };
    for (const auto &c : cases) {
        std::vector<DeviceSpec> devs;
        for (std::size_t i = 0; i < c.caps.size(); ++i) {
            devs.push_back({"d" + std::to_string(i), c.caps[i], DeviceRole::Extractor});
        }
        const auto plan = make_partition(c.shape, devs, c.strategy);
        std::vector<int> seen(static_cast<std::size_t>(c.shape.pixels()), 0);
        for (std::size_t i = 0; i < plan.num_segments(); ++i) {
            CHECK(plan.segments[i].size() <= static_cast<std::size_t>(c.caps[i]));
            for (auto p : plan.segments[i]) {
                ++seen[p];
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; }));
    }
}

TEST_CASE("gather_segment matches direct pixel lookup", "[partition]") {
    const auto plan = make_partition({6, 6}, extractors({9, 9, 9, 9}),
                                     PartitionStrategy::EvenNoOverlap);
    std::vector<double> image(36);
    std::iota(image.begin(), image.end(), 0.0);
    for (std::size_t i = 0; i < plan.num_segments(); ++i) {
        const auto seg = gather_segment(plan, i, image);
        const auto &t = plan.tiles[i];
        std::size_t k = 0;
        for (int r = t.row; r < t.row + t.height; ++r) {
            for (int c = t.col; c < t.col + t.width; ++c) {
                CHECK(seg[k++] == static_cast<double>(r * 6 + c));
            }
        }
    }
    CHECK_THROWS_AS(gather_segment(plan, 0, std::vector<double>(35)), ShapeError);
}

TEST_CASE("plan_from_tiles validates coverage", "[partition]") {
    CHECK_THROWS_AS(plan_from_tiles({2, 2}, PartitionStrategy::EvenNoOverlap,
                                    {{0, 0, 1, 2}}),
                    PartitionError);
    CHECK_THROWS_AS(plan_from_tiles({2, 2}, PartitionStrategy::EvenNoOverlap,
                                    {{0, 0, 2, 2}, {0, 0, 1, 1}}),
                    PartitionError);
    CHECK_THROWS_AS(plan_from_tiles({2, 2}, PartitionStrategy::EvenNoOverlap,
                                    {{0, 1, 2, 2}}),
                    PartitionError);
    CHECK_NOTHROW(plan_from_tiles({2, 2}, PartitionStrategy::EvenOverlap,
                                  {{0, 0, 2, 2}, {0, 0, 1, 1}}));
}

TEST_CASE("strategy names round-trip", "[partition]") {
    for (auto s : {PartitionStrategy::EvenNoOverlap, PartitionStrategy::UnevenNoOverlap,
                   PartitionStrategy::EvenOverlap}) {
        CHECK(parse_strategy(to_string(s)) == s);
    }
}
