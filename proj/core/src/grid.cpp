#include "harmtile/grid.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace harmtile {

namespace {

std::string point_str(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Number of black points in rows 0..y-1 of an m-wide graph, plus those before
// column x in row y. Blacks sit at even x+y; an even row holds ceil(m/2) of
// them, an odd row floor(m/2).
int blacks_before(int m, Point p) {
    int even_rows = (p.y + 1) / 2;
    int odd_rows = p.y / 2;
    int count = even_rows * ((m + 1) / 2) + odd_rows * (m / 2);
    // In row y: black columns have x parity equal to y parity.
    count += (p.y % 2 == 0) ? (p.x + 1) / 2 : p.x / 2;
    return count;
}

}  // namespace

GridGraph::GridGraph(int m, int n) : m_(m), n_(n) {
    if (m < 2 || n < 2)
        throw std::invalid_argument("grid graph needs m, n >= 2 (nonzero rectangle sides), got " +
                                    std::to_string(m) + "x" + std::to_string(n));
    num_black_ = (m * n + 1) / 2;
    num_white_ = m * n / 2;
}

Color GridGraph::color(Point p) const {
    if (!contains(p))
        throw std::out_of_range("point " + point_str(p) + " outside " + std::to_string(m_) + "x" +
                                std::to_string(n_) + " graph");
    return color_of(p);
}

std::vector<Point> GridGraph::neighbors(Point p) const {
    if (!contains(p))
        throw std::out_of_range("point " + point_str(p) + " outside " + std::to_string(m_) + "x" +
                                std::to_string(n_) + " graph");
    std::vector<Point> result;
    result.reserve(4);
    const Point candidates[4] = {{p.x + 1, p.y}, {p.x, p.y + 1}, {p.x - 1, p.y}, {p.x, p.y - 1}};
    for (Point q : candidates)
        if (contains(q)) result.push_back(q);
    return result;
}

std::pair<Color, int> GridGraph::point_index(Point p) const {
    Color c = color(p);
    int scanned = p.y * m_ + p.x;
    int blacks = blacks_before(m_, p);
    return {c, c == Color::Black ? blacks : scanned - blacks};
}

Point GridGraph::point_at(Color c, int ordinal) const {
    if (ordinal < 0 || ordinal >= num_for(c))
        throw std::out_of_range("ordinal " + std::to_string(ordinal) + " outside color class of size " +
                                std::to_string(num_for(c)));
    // First point of the color class in row y has x = parity offset.
    int remaining = ordinal;
    for (int y = 0; y < n_; ++y) {
        int first_x = (c == Color::Black) ? (y % 2) : 1 - (y % 2);
        int in_row = (m_ - first_x + 1) / 2;
        if (remaining < in_row) return {first_x + 2 * remaining, y};
        remaining -= in_row;
    }
    throw std::logic_error("point_at: ordinal not reached");
}

gf2::Gf2Matrix GridGraph::build_bw() const { return adjacency_bw(m_, n_); }
gf2::Gf2Matrix GridGraph::build_wb() const { return adjacency_wb(m_, n_); }

namespace {

gf2::Gf2Matrix adjacency_part(int m, int n, Color row_color) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("adjacency builder needs m, n >= 1");
    int blacks = (m * n + 1) / 2;
    int whites = m * n / 2;
    int rows = (row_color == Color::White) ? whites : blacks;
    int cols = (row_color == Color::White) ? blacks : whites;
    gf2::Gf2Matrix a(rows, cols);

    // Scan order assigns ordinals; each point of the row color gets one row,
    // marked at the ordinals of its neighbors (all of the opposite color).
    std::vector<int> ordinal(static_cast<std::size_t>(m) * n, 0);
    int next_black = 0, next_white = 0;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < m; ++x)
            ordinal[y * m + x] = (color_of({x, y}) == Color::Black) ? next_black++ : next_white++;

    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < m; ++x) {
            if (color_of({x, y}) != row_color) continue;
            int r = ordinal[y * m + x];
            const Point nbrs[4] = {{x + 1, y}, {x, y + 1}, {x - 1, y}, {x, y - 1}};
            for (Point q : nbrs)
                if (q.x >= 0 && q.x < m && q.y >= 0 && q.y < n) a.set(r, ordinal[q.y * m + q.x], true);
        }
    }
    return a;
}

}  // namespace

gf2::Gf2Matrix adjacency_bw(int m, int n) { return adjacency_part(m, n, Color::White); }
gf2::Gf2Matrix adjacency_wb(int m, int n) { return adjacency_part(m, n, Color::Black); }

bool GridStructure::on_grid(Point p) const {
    if (c == 0) return true;
    return (p.x + 1) % (c + 1) == 0 || (p.y + 1) % (c + 1) == 0;
}

GridStructure grid_structure(const GridGraph& g) {
    GridStructure s;
    s.m = g.m();
    s.n = g.n();
    s.c = std::gcd(g.m() + 1, g.n() + 1) - 1;

    for (int y = 0; y < g.n(); ++y)
        for (int x = 0; x < g.m(); ++x)
            if (s.on_grid({x, y})) s.grid_points.push_back({x, y});

    if (s.c > 0) {
        int blocks_x = (g.m() + 1) / (s.c + 1);
        int blocks_y = (g.n() + 1) / (s.c + 1);
        for (int by = 0; by < blocks_y; ++by)
            for (int bx = 0; bx < blocks_x; ++bx)
                s.squares.push_back({bx, by, Point{bx * (s.c + 1), by * (s.c + 1)}});
    }
    return s;
}

}  // namespace harmtile
