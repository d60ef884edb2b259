#pragma once

#include <string>
#include <vector>

#include "harmtile/count.hpp"

namespace harmtile {

std::string color_name(Color c);
Color color_from_name(const std::string& name);

// Tiling schema:
//   {width, height, color, tiles: [{vertices: [[x,y],...], class,
//    params: {a, b}, dashed: [sideIndex,...]}]}
// with vertex cycles counterclockwise in canonical rotation.
std::string tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const std::string& text);

// Kernel vectors as bit grids, one row string per y, listed top to bottom
// (y descending).
std::string kernel_to_json(int width, int height, Color polarity, const std::string& method,
                           const std::vector<PolarizedVector>& basis);
std::vector<PolarizedVector> kernel_from_json(const std::string& text);

struct ManifestEntry {
    std::string file;
    std::string color;
    int index = 0;       // per-color index
    int tile_count = 0;
    friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct Manifest {
    int width = 0;
    int height = 0;
    long long total = 0;
    std::vector<ManifestEntry> entries;
    friend bool operator==(const Manifest&, const Manifest&) = default;
};

std::string manifest_to_json(const Manifest& m);
Manifest manifest_from_json(const std::string& text);

// {width, height, c, beta, omega, count}; the count is a JSON number while it
// fits in 64 bits and a decimal string beyond that.
std::string count_to_json(const CountBreakdown& b);

std::string report_to_json(const VerifyReport& report);

}  // namespace harmtile
