#pragma once

#include <compare>
#include <vector>

#include "harmtile/gf2.hpp"

namespace harmtile {

struct Point {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Color { Black, White };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

// Parity coloring of the integer lattice: (x, y) is black iff x + y is even.
inline Color color_of(Point p) {
    return ((p.x + p.y) & 1) == 0 ? Color::Black : Color::White;
}

// The m x n rectangular point lattice: points (x, y) with 0 <= x < m,
// 0 <= y < n, colored by parity. It is the grid of lattice points of the
// rectangle R = [0, m-1] x [0, n-1], whose sides must be nonzero, so both
// dimensions are at least 2. Point indexing per color class follows row-major
// scan order (y outer, x inner).
class GridGraph {
public:
    GridGraph(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int num_black() const { return num_black_; }
    int num_white() const { return num_white_; }
    int num_for(Color c) const { return c == Color::Black ? num_black_ : num_white_; }

    bool contains(Point p) const { return p.x >= 0 && p.x < m_ && p.y >= 0 && p.y < n_; }

    Color color(Point p) const;  // throws std::out_of_range if p is not in G

    // The 2-4 lattice neighbors inside G, in E, N, W, S order with absent
    // ones skipped.
    std::vector<Point> neighbors(Point p) const;

    // 0-based rank of p within its color class in scan order.
    std::pair<Color, int> point_index(Point p) const;
    Point point_at(Color c, int ordinal) const;

    // Black-to-white adjacency matrix, num_white x num_black: entry (w, b) is
    // 1 iff white point w and black point b are lattice neighbors.
    gf2::Gf2Matrix build_bw() const;
    // White-to-black adjacency, num_black x num_white (the transpose of BW).
    gf2::Gf2Matrix build_wb() const;

private:
    int m_;
    int n_;
    int num_black_;
    int num_white_;
};

// The grid/fundamental-square decomposition controlled by
// c = gcd(m+1, n+1) - 1. Grid points are those on lines x = k(c+1)-1 or
// y = k(c+1)-1; removing them splits G into c x c fundamental squares.
// When c = 0 every point is a grid point and there are no squares.
struct GridStructure {
    int m = 0;
    int n = 0;
    int c = 0;

    struct Square {
        int block_x = 0;  // block indices, x fastest
        int block_y = 0;
        Point origin;     // lowest corner; the square spans c points each way
    };

    std::vector<Point> grid_points;  // scan order
    std::vector<Square> squares;     // block_y outer, block_x inner

    bool on_grid(Point p) const;
};

GridStructure grid_structure(const GridGraph& g);

// Low-level adjacency builders valid for any m, n >= 1. GridGraph::build_bw
// delegates here; the relaxed bound exists so the square-kernel machinery can
// handle the one-point 1x1 square (whose BW matrix is 0 x 1).
gf2::Gf2Matrix adjacency_bw(int m, int n);
gf2::Gf2Matrix adjacency_wb(int m, int n);

}  // namespace harmtile
