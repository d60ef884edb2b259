#include <doctest.h>

#include <stdexcept>

#include "harmtile/grid.hpp"

using namespace harmtile;

TEST_CASE("coloring follows coordinate parity") {
    GridGraph g(6, 8);
    CHECK(g.color({0, 0}) == Color::Black);
    CHECK(g.color({1, 0}) == Color::White);
    CHECK(g.color({3, 5}) == Color::Black);
    CHECK_THROWS_AS(g.color({6, 0}), std::out_of_range);
    CHECK_THROWS_AS(g.color({0, -1}), std::out_of_range);
}

TEST_CASE("graphs smaller than 2x2 are rejected") {
    CHECK_THROWS_AS(GridGraph(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(GridGraph(3, 0), std::invalid_argument);
}

TEST_CASE("neighbors come in E, N, W, S order") {
    GridGraph g(3, 3);
    CHECK(g.neighbors({1, 1}) == std::vector<Point>{{2, 1}, {1, 2}, {0, 1}, {1, 0}});
    CHECK(g.neighbors({0, 0}) == std::vector<Point>{{1, 0}, {0, 1}});
    CHECK(g.neighbors({1, 0}) == std::vector<Point>{{2, 0}, {1, 1}, {0, 0}});
}

TEST_CASE("point indexing is scan-ordered per color class") {
    GridGraph g(3, 3);
    CHECK(g.point_index({0, 0}) == std::pair{Color::Black, 0});
    CHECK(g.point_index({1, 0}) == std::pair{Color::White, 0});
    CHECK(g.point_index({2, 0}) == std::pair{Color::Black, 1});
}

TEST_CASE("point indexing round-trips over whole graphs") {
    for (int m = 2; m <= 20; ++m) {
        for (int n = 2; n <= 20; n += 3) {
            GridGraph g(m, n);
            int seen_black = 0, seen_white = 0;
            for (int y = 0; y < n; ++y) {
                for (int x = 0; x < m; ++x) {
                    auto [color, ordinal] = g.point_index({x, y});
                    int& seen = (color == Color::Black) ? seen_black : seen_white;
                    CHECK(ordinal == seen);
                    ++seen;
                    CHECK(g.point_at(color, ordinal) == Point{x, y});
                }
            }
            CHECK(seen_black == g.num_black());
            CHECK(seen_white == g.num_white());
        }
    }
}

TEST_CASE("color classes have the expected sizes") {
    GridGraph g(5, 5);
    CHECK(g.num_black() == 13);
    CHECK(g.num_white() == 12);
    GridGraph h(4, 4);
    CHECK(h.num_black() == 8);
    CHECK(h.num_white() == 8);
}

TEST_CASE("BW of the 2x2 graph is all ones") {
    auto bw = GridGraph(2, 2).build_bw();
    REQUIRE(bw.rows() == 2);
    REQUIRE(bw.cols() == 2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) CHECK(bw.get(r, c));
}

TEST_CASE("BW of the 3x3 graph is 4x5 with row weight 3") {
    auto bw = GridGraph(3, 3).build_bw();
    REQUIRE(bw.rows() == 4);
    REQUIRE(bw.cols() == 5);
    for (std::size_t r = 0; r < 4; ++r) CHECK(bw.row(r).popcount() == 3);
}

TEST_CASE("WB is the transpose of BW") {
    for (int m = 2; m <= 10; ++m)
        for (int n = 2; n <= 10; ++n) {
            GridGraph g(m, n);
            CHECK(g.build_wb() == g.build_bw().transposed());
        }
}

TEST_CASE("matrix weights match lattice degrees") {
    GridGraph g(7, 4);
    auto bw = g.build_bw();
    for (int y = 0; y < g.n(); ++y) {
        for (int x = 0; x < g.m(); ++x) {
            Point p{x, y};
            auto [color, ordinal] = g.point_index(p);
            std::size_t weight = (color == Color::White)
                                     ? bw.row(ordinal).popcount()
                                     : bw.transposed().row(ordinal).popcount();
            CHECK(weight == g.neighbors(p).size());
        }
    }
}

TEST_CASE("grid structure of the 14x9 graph") {
    GridStructure s = grid_structure(GridGraph(14, 9));
    CHECK(s.c == 4);
    CHECK(s.squares.size() == 6);
    for (const auto& sq : s.squares) {
        CHECK(sq.origin.x == sq.block_x * 5);
        CHECK(sq.origin.y == sq.block_y * 5);
    }
    CHECK(s.on_grid({4, 0}));
    CHECK(s.on_grid({0, 4}));
    CHECK_FALSE(s.on_grid({0, 0}));
}

TEST_CASE("grid structure c values") {
    CHECK(grid_structure(GridGraph(8, 5)).c == 2);
    GridStructure coprime = grid_structure(GridGraph(4, 3));
    CHECK(coprime.c == 0);
    CHECK(coprime.squares.empty());
    CHECK(coprime.grid_points.size() == 12);  // every point
}

TEST_CASE("grid points and fundamental squares partition the graph") {
    for (int m = 2; m <= 60; ++m)
        for (int n = 2; n <= 60; ++n) {
            GridStructure s = grid_structure(GridGraph(m, n));
            long long covered = static_cast<long long>(s.grid_points.size()) +
                                static_cast<long long>(s.c) * s.c * s.squares.size();
            CHECK(covered == static_cast<long long>(m) * n);
        }
}

TEST_CASE("adjacency always joins opposite colors") {
    GridGraph g(6, 5);
    for (int y = 0; y < g.n(); ++y)
        for (int x = 0; x < g.m(); ++x)
            for (Point q : g.neighbors({x, y})) CHECK(g.color(q) == opposite(g.color({x, y})));
}

TEST_CASE("one-point-wide builders exist below the GridGraph floor") {
    auto bw = adjacency_bw(1, 1);
    CHECK(bw.rows() == 0);
    CHECK(bw.cols() == 1);
    CHECK(nullspace_basis(bw).size() == 1);
    auto wb = adjacency_wb(1, 1);
    CHECK(wb.rows() == 1);
    CHECK(wb.cols() == 0);
    CHECK(nullspace_basis(wb).empty());
}
