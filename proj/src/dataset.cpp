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
#include "sqnn/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>
#include <string>

#include "sqnn/error.hpp"
#include "sqnn/rng.hpp"

namespace sqnn {

namespace {

constexpr std::uint32_t kImageMagic = 0x00000803;
constexpr std::uint32_t kLabelMagic = 0x00000801;

std::uint32_t read_be32(std::span<const std::uint8_t> buf, std::size_t offset,
                        const char *what) {
    if (offset + 4 > buf.size()) {
        throw FormatError(std::string(what) + ": truncated header", buf.size());
    }
    return (std::uint32_t{buf[offset]} << 24) | (std::uint32_t{buf[offset + 1]} << 16) |
           (std::uint32_t{buf[offset + 2]} << 8) | std::uint32_t{buf[offset + 3]};
}

std::vector<std::uint8_t> read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open " + path.string());
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Row k of the (to x from) matrix of overlap fractions between output cell k
// and source pixel i on a shared [0, 1) axis.
std::vector<double> area_weights(int from, int to) {
    std::vector<double> w(static_cast<std::size_t>(from * to), 0.0);
    const double scale = static_cast<double>(from) / to;
    for (int k = 0; k < to; ++k) {
        const double lo = k * scale;
        const double hi = (k + 1) * scale;
        for (int i = static_cast<int>(lo); i < from && i < hi; ++i) {
            const double overlap = std::min<double>(hi, i + 1) - std::max<double>(lo, i);
            if (overlap > 0.0) {
                w[static_cast<std::size_t>(k * from + i)] = overlap / scale;
            }
        }
    }
    return w;
}

} // namespace

IdxData parse_idx(std::span<const std::uint8_t> images,
                  std::span<const std::uint8_t> labels) {
    if (read_be32(images, 0, "image file") != kImageMagic) {
        throw FormatError("image file: bad magic number", 0);
    }
    if (read_be32(labels, 0, "label file") != kLabelMagic) {
        throw FormatError("label file: bad magic number", 0);
    }
    IdxData out;
    out.count = read_be32(images, 4, "image file");
    out.rows = read_be32(images, 8, "image file");
    out.cols = read_be32(images, 12, "image file");
    const std::size_t label_count = read_be32(labels, 4, "label file");
    if (label_count != out.count) {
        throw FormatError("label count " + std::to_string(label_count) +
                              " does not match image count " + std::to_string(out.count),
                          4);
    }
    const std::size_t image_bytes = out.count * out.rows * out.cols;
    if (images.size() < 16 + image_bytes) {
        throw FormatError("image file: truncated payload, expected " +
                              std::to_string(16 + image_bytes) + " bytes",
                          images.size());
    }
    if (labels.size() < 8 + out.count) {
        throw FormatError("label file: truncated payload, expected " +
                              std::to_string(8 + out.count) + " bytes",
                          labels.size());
    }
    out.pixels.assign(images.begin() + 16, images.begin() + 16 + static_cast<std::ptrdiff_t>(image_bytes));
    out.labels.assign(labels.begin() + 8, labels.begin() + 8 + static_cast<std::ptrdiff_t>(out.count));
    return out;
}

IdxData load_idx(const std::filesystem::path &images_path,
                 const std::filesystem::path &labels_path) {
    const auto images = read_file(images_path);
    const auto labels = read_file(labels_path);
    return parse_idx(images, labels);
}

void ImageSet::validate() const {
    const auto n = static_cast<std::size_t>(shape.pixels());
    if (pixels.size() != labels.size() * n || source_index.size() != labels.size()) {
        throw ShapeError("image set has inconsistent image/label counts");
    }
}

ImageSet filter_and_relabel(const IdxData &raw, DigitPair pair) {
    ImageSet out;
    out.shape = {static_cast<int>(raw.rows), static_cast<int>(raw.cols)};
    const std::size_t n = raw.rows * raw.cols;
    for (std::size_t i = 0; i < raw.count; ++i) {
        const int digit = raw.labels[i];
        if (digit != pair.negative && digit != pair.positive) {
            continue;
        }
        out.labels.push_back(digit == pair.negative ? -1 : 1);
        out.source_index.push_back(i);
        for (std::size_t k = 0; k < n; ++k) {
            out.pixels.push_back(raw.pixels[i * n + k] / 255.0);
        }
    }
    return out;
}

std::vector<double> downscale(std::span<const double> image, ImageShape from,
                              ImageShape to) {
    if (to.height < 1 || to.width < 1 || to.height > from.height || to.width > from.width) {
        throw ShapeError("downscale target " + std::to_string(to.height) + "x" +
                         std::to_string(to.width) + " must lie within 1.." +
                         std::to_string(from.height) + "x" + std::to_string(from.width));
    }
    if (image.size() != static_cast<std::size_t>(from.pixels())) {
        throw ShapeError("downscale: image size does not match its shape");
    }
    const auto wy = area_weights(from.height, to.height);
    const auto wx = area_weights(from.width, to.width);
    // Rows first, then columns.
    std::vector<double> rows(static_cast<std::size_t>(to.height * from.width), 0.0);
    for (int k = 0; k < to.height; ++k) {
        for (int i = 0; i < from.height; ++i) {
            const double w = wy[static_cast<std::size_t>(k * from.height + i)];
            if (w == 0.0) {
                continue;
            }
            for (int c = 0; c < from.width; ++c) {
                rows[static_cast<std::size_t>(k * from.width + c)] +=
                    w * image[static_cast<std::size_t>(i * from.width + c)];
            }
        }
    }
    std::vector<double> out(static_cast<std::size_t>(to.pixels()), 0.0);
    for (int r = 0; r < to.height; ++r) {
        for (int k = 0; k < to.width; ++k) {
            double acc = 0.0;
            for (int c = 0; c < from.width; ++c) {
                acc += wx[static_cast<std::size_t>(k * from.width + c)] *
                       rows[static_cast<std::size_t>(r * from.width + c)];
            }
            out[static_cast<std::size_t>(r * to.width + k)] = std::clamp(acc, 0.0, 1.0);
        }
    }
    return out;
}

ImageSet downscale(const ImageSet &set, ImageShape to) {
    set.validate();
    ImageSet out;
    out.shape = to;
    out.labels = set.labels;
    out.source_index = set.source_index;
    out.pixels.reserve(set.size() * static_cast<std::size_t>(to.pixels()));
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto small = downscale(set.image(i), set.shape, to);
        out.pixels.insert(out.pixels.end(), small.begin(), small.end());
    }
    return out;
}

ImageSet take(const ImageSet &set, std::span<const std::size_t> indices) {
    ImageSet out;
    out.shape = set.shape;
    for (auto i : indices) {
        if (i >= set.size()) {
            throw IndexError("sample " + std::to_string(i) + " out of range");
        }
        const auto img = set.image(i);
        out.pixels.insert(out.pixels.end(), img.begin(), img.end());
        out.labels.push_back(set.labels[i]);
        out.source_index.push_back(set.source_index[i]);
    }
    return out;
}

ImageSet random_subset(const ImageSet &set, std::size_t n, Rng &rng) {
    std::vector<std::size_t> order(set.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (n == 0 || n >= set.size()) {
        return take(set, order);
    }
    rng.shuffle(std::span<std::size_t>(order));
    order.resize(n);
    std::sort(order.begin(), order.end());
    return take(set, order);
}

std::vector<std::vector<std::vector<double>>>
to_partitioned_angles(const ImageSet &set, const PartitionPlan &plan,
                      const AngleEncodingConfig &encoding) {
    if (set.shape != plan.shape) {
        throw ShapeError("image shape does not match the partition plan");
    }
    std::vector<std::vector<std::vector<double>>> out(set.size());
    for (std::size_t s = 0; s < set.size(); ++s) {
        for (std::size_t seg = 0; seg < plan.num_segments(); ++seg) {
            out[s].push_back(encoding_angles(gather_segment(plan, seg, set.image(s)), encoding));
        }
    }
    return out;
}

} // namespace sqnn
