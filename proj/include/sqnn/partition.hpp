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
 * @file partition.hpp
 * Assignment of image pixels to extractor devices as rectangular tiles.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqnn {

struct ImageShape {
    int height = 0;
    int width = 0;

    [[nodiscard]] int pixels() const noexcept { return height * width; }
    friend bool operator==(const ImageShape &, const ImageShape &) = default;
};

enum class DeviceRole { Extractor, Predictor };

struct DeviceSpec {
    std::string device_id;
    int data_qubit_capacity = 0;
    DeviceRole role = DeviceRole::Extractor;

    friend bool operator==(const DeviceSpec &, const DeviceSpec &) = default;
};

enum class PartitionStrategy { EvenNoOverlap, UnevenNoOverlap, EvenOverlap };

[[nodiscard]] std::string_view to_string(PartitionStrategy strategy);
/// "even", "uneven" or "overlap".
[[nodiscard]] PartitionStrategy parse_strategy(std::string_view text);

struct Tile {
    int row = 0;
    int col = 0;
    int height = 0;
    int width = 0;

    [[nodiscard]] int size() const noexcept { return height * width; }
    friend bool operator==(const Tile &, const Tile &) = default;
};

/**
 * @brief Ordered list of image segments, one per extractor.
 *
 * Segment i lists the row-major pixel indices covered by tile i, itself
 * flattened row-major. Tiles are ordered by their top-left corner.
 */
struct PartitionPlan {
    ImageShape shape;
    PartitionStrategy strategy = PartitionStrategy::EvenNoOverlap;
    std::vector<Tile> tiles;
    std::vector<std::vector<std::size_t>> segments;

    [[nodiscard]] std::size_t num_segments() const noexcept { return tiles.size(); }
    /// Number of segments covering each pixel, row-major.
    [[nodiscard]] std::vector<int> coverage() const;
    /// Pixels that belong to more than one segment.
    [[nodiscard]] int overlap_pixels() const;

    friend bool operator==(const PartitionPlan &, const PartitionPlan &) = default;
};

/**
 * @brief Tile `shape` for the extractor devices in `devices` (predictors are
 * ignored), segment i sized exactly to extractor i's capacity.
 *
 * EvenNoOverlap needs equal capacities and a grid of equal tiles;
 * UnevenNoOverlap searches for any rectangular tiling placing devices in
 * order at the first free row-major cell; EvenOverlap spreads an equal grid
 * of larger tiles evenly so that neighbours share boundary pixels.
 * Throws PartitionError when no tiling exists.
 */
[[nodiscard]] PartitionPlan make_partition(ImageShape shape,
                                           std::span<const DeviceSpec> devices,
                                           PartitionStrategy strategy);

/// Rebuild a plan from stored tiles, re-checking bounds and coverage.
[[nodiscard]] PartitionPlan plan_from_tiles(ImageShape shape,
                                            PartitionStrategy strategy,
                                            std::vector<Tile> tiles);

/// Pixel values of segment i gathered from a row-major image.
[[nodiscard]] std::vector<double> gather_segment(const PartitionPlan &plan,
                                                 std::size_t i,
                                                 std::span<const double> image);

/// Text rendering: one character per pixel naming its segment (or, for
/// overlapping plans, the number of covering segments), then a tile list.
[[nodiscard]] std::string render(const PartitionPlan &plan);

} // namespace sqnn
