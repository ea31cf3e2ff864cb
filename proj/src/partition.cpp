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
#include "sqnn/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "sqnn/error.hpp"

namespace sqnn {

namespace {

std::vector<int> extractor_capacities(std::span<const DeviceSpec> devices) {
    std::vector<int> caps;
    for (const auto &d : devices) {
        if (d.role != DeviceRole::Extractor) {
            continue;
        }
        if (d.data_qubit_capacity < 1) {
            throw PartitionError("device '" + d.device_id + "' has capacity " +
                                 std::to_string(d.data_qubit_capacity));
        }
        caps.push_back(d.data_qubit_capacity);
    }
    if (caps.empty()) {
        throw PartitionError("no extractor devices to partition across");
    }
    return caps;
}

std::string describe(ImageShape shape, const std::vector<int> &caps) {
    std::ostringstream os;
    os << shape.height << "x" << shape.width << " image (" << shape.pixels()
       << " pixels) vs extractor capacities [";
    for (std::size_t i = 0; i < caps.size(); ++i) {
        os << (i ? "," : "") << caps[i];
    }
    os << "]";
    return os.str();
}

// (height, width) factorizations of `area`, most square first, wider first on ties.
std::vector<std::pair<int, int>> tile_shapes(int area) {
    std::vector<std::pair<int, int>> shapes;
    for (int h = 1; h <= area; ++h) {
        if (area % h == 0) {
            shapes.emplace_back(h, area / h);
        }
    }
    std::stable_sort(shapes.begin(), shapes.end(), [](auto a, auto b) {
        const int da = std::abs(a.first - a.second);
        const int db = std::abs(b.first - b.second);
        return da != db ? da < db : a.first < b.first;
    });
    return shapes;
}

std::vector<int> evenly_spaced_starts(int extent, int tile, int count) {
    std::vector<int> starts(static_cast<std::size_t>(count), 0);
    for (int i = 1; i < count; ++i) {
        starts[static_cast<std::size_t>(i)] = i * (extent - tile) / (count - 1);
    }
    return starts;
}

std::vector<Tile> grid_tiles(int tile_h, int tile_w, const std::vector<int> &rows,
                             const std::vector<int> &cols) {
    std::vector<Tile> tiles;
    for (int r : rows) {
        for (int c : cols) {
            tiles.push_back({r, c, tile_h, tile_w});
        }
    }
    return tiles;
}

std::vector<Tile> even_tiles(ImageShape shape, const std::vector<int> &caps) {
    const int c = caps.front();
    const int p = static_cast<int>(caps.size());
    if (std::any_of(caps.begin(), caps.end(), [c](int v) { return v != c; }) ||
        c * p != shape.pixels()) {
        throw PartitionError("even partition impossible: " + describe(shape, caps));
    }
    std::optional<std::pair<int, int>> best;
    for (int gr = 1; gr <= p; ++gr) {
        if (p % gr != 0 || shape.height % gr != 0 || shape.width % (p / gr) != 0) {
            continue;
        }
        const int th = shape.height / gr;
        const int tw = shape.width / (p / gr);
        if (!best || std::abs(th - tw) < std::abs(best->first - best->second)) {
            best = {th, tw};
        }
    }
    if (!best) {
        throw PartitionError("no equal rectangular tiling for " + describe(shape, caps));
    }
    const auto [th, tw] = *best;
    std::vector<int> rows, cols;
    for (int r = 0; r < shape.height; r += th) {
        rows.push_back(r);
    }
    for (int col = 0; col < shape.width; col += tw) {
        cols.push_back(col);
    }
    return grid_tiles(th, tw, rows, cols);
}

bool place_uneven(ImageShape shape, const std::vector<int> &caps, std::size_t next,
                  std::vector<int> &owner, std::vector<Tile> &tiles) {
    if (next == caps.size()) {
        return true;
    }
    const auto free_it = std::find(owner.begin(), owner.end(), -1);
    const int first = static_cast<int>(free_it - owner.begin());
    const int r0 = first / shape.width;
    const int c0 = first % shape.width;
    for (auto [h, w] : tile_shapes(caps[next])) {
        if (r0 + h > shape.height || c0 + w > shape.width) {
            continue;
        }
        bool free = true;
        for (int r = r0; r < r0 + h && free; ++r) {
            for (int c = c0; c < c0 + w && free; ++c) {
                free = owner[static_cast<std::size_t>(r * shape.width + c)] == -1;
            }
        }
        if (!free) {
            continue;
        }
        auto mark = [&](int value) {
            for (int r = r0; r < r0 + h; ++r) {
                for (int c = c0; c < c0 + w; ++c) {
                    owner[static_cast<std::size_t>(r * shape.width + c)] = value;
                }
            }
        };
        mark(static_cast<int>(next));
        tiles.push_back({r0, c0, h, w});
        if (place_uneven(shape, caps, next + 1, owner, tiles)) {
            return true;
        }
        tiles.pop_back();
        mark(-1);
    }
    return false;
}

std::vector<Tile> uneven_tiles(ImageShape shape, const std::vector<int> &caps) {
    int total = 0;
    for (int c : caps) {
        total += c;
    }
    if (total != shape.pixels()) {
        throw PartitionError("capacities do not sum to the pixel count: " +
                             describe(shape, caps));
    }
    std::vector<int> owner(static_cast<std::size_t>(shape.pixels()), -1);
    std::vector<Tile> tiles;
    if (!place_uneven(shape, caps, 0, owner, tiles)) {
        throw PartitionError("no rectangular tiling for " + describe(shape, caps));
    }
    return tiles;
}

std::vector<Tile> overlap_tiles(ImageShape shape, const std::vector<int> &caps) {
    const int c = caps.front();
    const int p = static_cast<int>(caps.size());
    if (std::any_of(caps.begin(), caps.end(), [c](int v) { return v != c; })) {
        throw PartitionError("overlapping partition needs equal capacities: " +
                             describe(shape, caps));
    }
    struct Candidate {
        int gr, gc, th, tw, excess;
    };
    std::optional<Candidate> best;
    for (int gr = 1; gr <= p; ++gr) {
        if (p % gr != 0) {
            continue;
        }
        const int gc = p / gr;
        for (auto [th, tw] : tile_shapes(c)) {
            if (th > shape.height || tw > shape.width || gr * th < shape.height ||
                gc * tw < shape.width || (gr == 1 && th != shape.height) ||
                (gc == 1 && tw != shape.width)) {
                continue;
            }
            const int excess = p * c - shape.pixels();
            if (excess <= 0) {
                continue;
            }
            const Candidate cand{gr, gc, th, tw, excess};
            if (!best || std::abs(th - tw) < std::abs(best->th - best->tw)) {
                best = cand;
            }
        }
    }
    if (!best) {
        throw PartitionError("no overlapping equal tiling for " + describe(shape, caps));
    }
    return grid_tiles(best->th, best->tw,
                      evenly_spaced_starts(shape.height, best->th, best->gr),
                      evenly_spaced_starts(shape.width, best->tw, best->gc));
}

} // namespace

std::string_view to_string(PartitionStrategy strategy) {
    switch (strategy) {
    case PartitionStrategy::EvenNoOverlap:
        return "even";
    case PartitionStrategy::UnevenNoOverlap:
        return "uneven";
    case PartitionStrategy::EvenOverlap:
        return "overlap";
    }
    return "?";
}

PartitionStrategy parse_strategy(std::string_view text) {
    if (text == "even") {
        return PartitionStrategy::EvenNoOverlap;
    }
    if (text == "uneven") {
        return PartitionStrategy::UnevenNoOverlap;
    }
    if (text == "overlap") {
        return PartitionStrategy::EvenOverlap;
    }
    throw ValidationError("unknown partition strategy '" + std::string(text) +
                          "' (expected even, uneven or overlap)");
}

std::vector<int> PartitionPlan::coverage() const {
    std::vector<int> counts(static_cast<std::size_t>(shape.pixels()), 0);
    for (const auto &segment : segments) {
        for (auto px : segment) {
            ++counts[px];
        }
    }
    return counts;
}

int PartitionPlan::overlap_pixels() const {
    const auto counts = coverage();
    return static_cast<int>(
        std::count_if(counts.begin(), counts.end(), [](int v) { return v > 1; }));
}

PartitionPlan plan_from_tiles(ImageShape shape, PartitionStrategy strategy,
                              std::vector<Tile> tiles) {
    if (shape.height < 1 || shape.width < 1) {
        throw PartitionError("image shape must be positive");
    }
    if (tiles.empty()) {
        throw PartitionError("partition has no tiles");
    }
    PartitionPlan plan{shape, strategy, std::move(tiles), {}};
    for (const auto &t : plan.tiles) {
        if (t.height < 1 || t.width < 1 || t.row < 0 || t.col < 0 ||
            t.row + t.height > shape.height || t.col + t.width > shape.width) {
            throw PartitionError("tile outside the " + std::to_string(shape.height) +
                                 "x" + std::to_string(shape.width) + " image");
        }
        std::vector<std::size_t> segment;
        for (int r = t.row; r < t.row + t.height; ++r) {
            for (int c = t.col; c < t.col + t.width; ++c) {
                segment.push_back(static_cast<std::size_t>(r * shape.width + c));
            }
        }
        plan.segments.push_back(std::move(segment));
    }
    const auto counts = plan.coverage();
    const bool exact = std::all_of(counts.begin(), counts.end(), [](int v) { return v == 1; });
    const bool covered = std::all_of(counts.begin(), counts.end(), [](int v) { return v >= 1; });
    if (strategy == PartitionStrategy::EvenOverlap ? !covered : !exact) {
        throw PartitionError(strategy == PartitionStrategy::EvenOverlap
                                 ? "tiles leave pixels uncovered"
                                 : "tiles must cover every pixel exactly once");
    }
    return plan;
}

PartitionPlan make_partition(ImageShape shape, std::span<const DeviceSpec> devices,
                             PartitionStrategy strategy) {
    if (shape.height < 1 || shape.width < 1) {
        throw PartitionError("image shape must be positive");
    }
    const auto caps = extractor_capacities(devices);
    std::vector<Tile> tiles;
    switch (strategy) {
    case PartitionStrategy::EvenNoOverlap:
        tiles = even_tiles(shape, caps);
        break;
    case PartitionStrategy::UnevenNoOverlap:
        tiles = uneven_tiles(shape, caps);
        break;
    case PartitionStrategy::EvenOverlap:
        tiles = overlap_tiles(shape, caps);
        break;
    }
    return plan_from_tiles(shape, strategy, std::move(tiles));
}

std::vector<double> gather_segment(const PartitionPlan &plan, std::size_t i,
                                   std::span<const double> image) {
    if (image.size() != static_cast<std::size_t>(plan.shape.pixels())) {
        throw ShapeError("image has " + std::to_string(image.size()) +
                         " pixels, partition expects " +
                         std::to_string(plan.shape.pixels()));
    }
    if (i >= plan.segments.size()) {
        throw IndexError("segment " + std::to_string(i) + " out of range");
    }
    std::vector<double> out;
    out.reserve(plan.segments[i].size());
    for (auto px : plan.segments[i]) {
        out.push_back(image[px]);
    }
    return out;
}

std::string render(const PartitionPlan &plan) {
    static constexpr std::string_view kDigits =
        "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    const auto counts = plan.coverage();
    std::vector<std::size_t> owner(counts.size(), 0);
    for (std::size_t s = 0; s < plan.segments.size(); ++s) {
        for (auto px : plan.segments[s]) {
            owner[px] = s;
        }
    }
    const bool overlapping = plan.overlap_pixels() > 0;
    std::ostringstream os;
    for (int r = 0; r < plan.shape.height; ++r) {
        for (int c = 0; c < plan.shape.width; ++c) {
            const auto px = static_cast<std::size_t>(r * plan.shape.width + c);
            const std::size_t symbol = overlapping ? static_cast<std::size_t>(counts[px])
                                                   : owner[px];
            os << (symbol < kDigits.size() ? kDigits[symbol] : '*');
        }
        os << '\n';
    }
    os << '\n';
    for (std::size_t s = 0; s < plan.tiles.size(); ++s) {
        const auto &t = plan.tiles[s];
        os << "segment " << s << ": " << t.height << "x" << t.width << " at ("
           << t.row << "," << t.col << "), " << t.size() << " pixels\n";
    }
    if (overlapping) {
        os << "overlap: " << plan.overlap_pixels() << " pixels shared (grid shows "
           << "segments per pixel)\n";
    }
    return os.str();
}

} // namespace sqnn
