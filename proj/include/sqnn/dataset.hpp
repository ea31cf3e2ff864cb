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
 * @file dataset.hpp
 * MNIST ingestion and preprocessing for the binary digit task.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "sqnn/encoding.hpp"
#include "sqnn/partition.hpp"

namespace sqnn {

class Rng;

/// Raw IDX content: `count` images of rows x cols bytes plus one label each.
struct IdxData {
    std::size_t count = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> pixels;
    std::vector<std::uint8_t> labels;
};

/**
 * @brief Parse IDX image (magic 0x00000803) and label (0x00000801) buffers.
 *
 * Dimensions are big-endian 32-bit. Throws FormatError naming the byte offset
 * of a bad magic number, a truncated payload or mismatched counts.
 */
[[nodiscard]] IdxData parse_idx(std::span<const std::uint8_t> images,
                                std::span<const std::uint8_t> labels);
[[nodiscard]] IdxData load_idx(const std::filesystem::path &images_path,
                               const std::filesystem::path &labels_path);

/// Which digit becomes label -1 and which +1.
struct DigitPair {
    int negative = 3;
    int positive = 6;

    friend bool operator==(const DigitPair &, const DigitPair &) = default;
};

/// Images with values in [0, 1], row-major, and labels in {-1, +1}.
struct ImageSet {
    ImageShape shape;
    std::vector<double> pixels;
    std::vector<int> labels;
    /// Index of each image in the file it came from.
    std::vector<std::size_t> source_index;

    [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
    [[nodiscard]] std::span<const double> image(std::size_t i) const {
        const auto n = static_cast<std::size_t>(shape.pixels());
        return std::span<const double>(pixels).subspan(i * n, n);
    }
    /// Throws ShapeError if pixels, labels and source indices disagree in count.
    void validate() const;
};

/// Keeps the two digits of `pair`, maps them to -1/+1 and scales bytes by 1/255.
[[nodiscard]] ImageSet filter_and_relabel(const IdxData &raw, DigitPair pair = {});

/**
 * @brief Area-weighted resampling of a row-major image.
 *
 * Output pixel (r, c) is the mean of the source over the rectangle it covers
 * when both grids span the same physical extent; partially covered source
 * pixels contribute by overlap fraction, so non-integer factors work. Output
 * is clamped to [0, 1].
 */
[[nodiscard]] std::vector<double> downscale(std::span<const double> image,
                                            ImageShape from, ImageShape to);
[[nodiscard]] ImageSet downscale(const ImageSet &set, ImageShape to);

[[nodiscard]] ImageSet take(const ImageSet &set, std::span<const std::size_t> indices);
/// `n` distinct samples chosen by `rng`, kept in source order. n = 0 or
/// n >= size keeps everything.
[[nodiscard]] ImageSet random_subset(const ImageSet &set, std::size_t n, Rng &rng);

/// Per sample, per segment: row-major pixel values scaled to angles.
[[nodiscard]] std::vector<std::vector<std::vector<double>>>
to_partitioned_angles(const ImageSet &set, const PartitionPlan &plan,
                      const AngleEncodingConfig &encoding);

} // namespace sqnn
