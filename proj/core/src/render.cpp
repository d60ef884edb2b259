#include "harmtile/render.hpp"

#include <algorithm>

namespace harmtile {

namespace {

constexpr int kUnit = 32;
constexpr int kMargin = 16;

const char* fill_for(TileClass c) {
    switch (c) {
        case TileClass::Octagon: return "#ffd27f";
        case TileClass::Hexagon: return "#b3e6b3";
        case TileClass::AxisSquare: return "#9fc5e8";
        case TileClass::TiltedSquare: return "#d9b3ff";
        case TileClass::Trapezoid: return "#ffb3b3";
        case TileClass::Triangle: return "#fff2a8";
    }
    return "#cccccc";
}

bool is_dashed(const Tile& tile, int side) {
    return std::find(tile.dashed_sides.begin(), tile.dashed_sides.end(), side) !=
           tile.dashed_sides.end();
}

}  // namespace

std::string tiling_to_svg(const Tiling& t) {
    const int w = t.rect.width * kUnit + 2 * kMargin;
    const int h = t.rect.height * kUnit + 2 * kMargin;
    auto sx = [&](int x) { return kMargin + x * kUnit; };
    auto sy = [&](int y) { return kMargin + (t.rect.height - y) * kUnit; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
           "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " +
           std::to_string(h) + "\">\n";
    svg += "<rect width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) +
           "\" fill=\"white\"/>\n";

    for (const Tile& tile : t.tiles) {
        svg += "<polygon points=\"";
        for (std::size_t i = 0; i < tile.chunk.vertices.size(); ++i) {
            Point p = tile.chunk.vertices[i];
            if (i) svg += " ";
            svg += std::to_string(sx(p.x)) + "," + std::to_string(sy(p.y));
        }
        svg += "\" fill=\"";
        svg += fill_for(tile.cls);
        svg += "\" stroke=\"none\"/>\n";
    }
    for (const Tile& tile : t.tiles) {
        const auto& v = tile.chunk.vertices;
        const int k = static_cast<int>(v.size());
        for (int i = 0; i < k; ++i) {
            Point a = v[i], b = v[(i + 1) % k];
            svg += "<line x1=\"" + std::to_string(sx(a.x)) + "\" y1=\"" + std::to_string(sy(a.y)) +
                   "\" x2=\"" + std::to_string(sx(b.x)) + "\" y2=\"" + std::to_string(sy(b.y)) +
                   "\"";
            if (is_dashed(tile, i))
                svg += " stroke=\"#888888\" stroke-width=\"2\" stroke-dasharray=\"6,4\"";
            else
                svg += " stroke=\"black\" stroke-width=\"2\"";
            svg += "/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

std::string tiling_to_ascii(const Tiling& t) {
    const int cols = 2 * t.rect.width + 1;
    const int rows = 2 * t.rect.height + 1;
    std::vector<std::string> canvas(rows, std::string(cols, ' '));

    auto put = [&](int cx, int cy, char ch) {
        canvas[2 * t.rect.height - cy][cx] = ch;  // y flipped for display
    };

    for (const Tile& tile : t.tiles) {
        const auto& v = tile.chunk.vertices;
        const int k = static_cast<int>(v.size());
        for (int i = 0; i < k; ++i) {
            Point a = v[i], b = v[(i + 1) % k];
            int dx = b.x - a.x, dy = b.y - a.y;
            int sx = (dx > 0) - (dx < 0), sy = (dy > 0) - (dy < 0);
            int len = std::max(std::abs(dx), std::abs(dy));
            bool dashed = is_dashed(tile, i);
            char mid;
            if (dy == 0)
                mid = dashed ? '.' : '-';
            else if (dx == 0)
                mid = dashed ? ':' : '|';
            else
                mid = (sx == sy) ? '/' : '\\';
            for (int s = 0; s < 2 * len; ++s) {
                int cx = 2 * a.x + s * sx, cy = 2 * a.y + s * sy;
                put(cx, cy, s % 2 == 0 ? '+' : mid);
            }
            put(2 * b.x, 2 * b.y, '+');
        }
    }

    std::string out;
    for (const std::string& row : canvas) {
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace harmtile
