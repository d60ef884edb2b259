#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "harmtile/tiling.hpp"

using namespace harmtile;

namespace {

PolarizedVector kernel_vector(int m, int n, Color polarity, std::vector<Point> active) {
    PolarizedVector v(m, n, polarity);
    for (Point p : active) v.set(p, true);
    REQUIRE(is_harmonic(v));
    return v;
}

SideActivityFn all_active() {
    return [](Point, Point) { return SideActivity::Active; };
}

}  // namespace

TEST_CASE("segments validate their offsets") {
    CHECK(Segment({0, 0}, {2, 0}).kind == SegmentKind::Axis);
    CHECK(Segment({0, 2}, {0, 0}).kind == SegmentKind::Axis);
    CHECK(Segment({1, 1}, {0, 0}).kind == SegmentKind::Diagonal);
    CHECK(Segment({3, 2}, {2, 3}).kind == SegmentKind::Diagonal);
    CHECK_THROWS_AS(Segment({0, 0}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Segment({0, 0}, {2, 2}), std::invalid_argument);
    CHECK(Segment({0, 0}, {2, 0}) == Segment({2, 0}, {0, 0}));
}

TEST_CASE("active points are the support") {
    CHECK(active_points(PolarizedVector(4, 4, Color::Black)).empty());

    auto v22 = kernel_vector(2, 2, Color::Black, {{0, 0}, {1, 1}});
    CHECK(active_points(v22) == std::vector<Point>{{0, 0}, {1, 1}});

    auto v33 = kernel_vector(3, 3, Color::White, {{1, 0}, {0, 1}, {2, 1}, {1, 2}});
    CHECK(active_points(v33) == std::vector<Point>{{1, 0}, {0, 1}, {2, 1}, {1, 2}});
}

TEST_CASE("active adjacency of the 2x2 kernel vector is one diagonal") {
    auto segments = active_adjacency(kernel_vector(2, 2, Color::Black, {{0, 0}, {1, 1}}));
    REQUIRE(segments.size() == 1);
    CHECK(*segments.begin() == Segment({0, 0}, {1, 1}));
}

TEST_CASE("active adjacency of the 3x3 white kernel vector is the tilted square") {
    auto segments =
        active_adjacency(kernel_vector(3, 3, Color::White, {{1, 0}, {0, 1}, {2, 1}, {1, 2}}));
    SegmentSet expected{Segment({1, 0}, {0, 1}), Segment({1, 0}, {2, 1}), Segment({0, 1}, {1, 2}),
                        Segment({2, 1}, {1, 2})};
    CHECK(segments == expected);
    // The interior black point has all four neighbors active: its collinear
    // pairs get no axis segment, only the right-angle diagonals above.
    for (const Segment& s : segments) CHECK(s.kind == SegmentKind::Diagonal);
}

TEST_CASE("active adjacency refuses non-kernel vectors") {
    PolarizedVector v(4, 4, Color::Black);
    v.set(0, 0, true);
    CHECK_THROWS_AS(active_adjacency(v), std::invalid_argument);
}

TEST_CASE("axis segments appear when a pair is alone and collinear") {
    // All four corners of the 3x3 graph active, center inactive: each edge
    // midpoint sees exactly its two corners, collinear.
    auto v = kernel_vector(3, 3, Color::Black, {{0, 0}, {2, 0}, {0, 2}, {2, 2}});
    auto segments = active_adjacency(v);
    SegmentSet expected{Segment({0, 0}, {2, 0}), Segment({0, 0}, {0, 2}), Segment({2, 0}, {2, 2}),
                        Segment({0, 2}, {2, 2})};
    CHECK(segments == expected);
}

TEST_CASE("split with no segments returns the whole rectangle") {
    auto chunks = split({}, Rect{3, 2});
    REQUIRE(chunks.size() == 1);
    CHECK(chunks[0].vertices == std::vector<Point>{{0, 0}, {3, 0}, {3, 2}, {0, 2}});
}

TEST_CASE("splitting the unit square along its diagonal gives two triangles") {
    auto chunks = split({Segment({0, 0}, {1, 1})}, Rect{1, 1});
    REQUIRE(chunks.size() == 2);
    CHECK(chunks[0].vertices == std::vector<Point>{{0, 0}, {1, 0}, {1, 1}});
    CHECK(chunks[1].vertices == std::vector<Point>{{0, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("splitting the 2x2 square along the tilted square gives five chunks") {
    SegmentSet segments{Segment({1, 0}, {0, 1}), Segment({1, 0}, {2, 1}), Segment({0, 1}, {1, 2}),
                        Segment({2, 1}, {1, 2})};
    auto chunks = split(segments, Rect{2, 2});
    REQUIRE(chunks.size() == 5);
    int triangles = 0, quads = 0;
    for (const Chunk& c : chunks) {
        if (c.vertices.size() == 3) ++triangles;
        if (c.vertices.size() == 4) ++quads;
    }
    CHECK(triangles == 4);
    CHECK(quads == 1);
    // The middle chunk is the tilted square.
    Chunk tilted = canonical_chunk({{1, 0}, {2, 1}, {1, 2}, {0, 1}});
    CHECK(std::count(chunks.begin(), chunks.end(), tilted) == 1);
}

TEST_CASE("split rejects crossing segments") {
    // Two perpendicular axis segments crossing at an interior lattice point.
    SegmentSet crossing{Segment({0, 1}, {2, 1}), Segment({1, 0}, {1, 2})};
    CHECK_THROWS_AS(split(crossing, Rect{2, 2}), SplitError);

    // Two diagonal segments crossing at a half-integer point.
    SegmentSet diag_cross{Segment({0, 0}, {1, 1}), Segment({0, 1}, {1, 0})};
    CHECK_THROWS_AS(split(diag_cross, Rect{1, 1}), SplitError);
}

TEST_CASE("classification of the corner triangle") {
    Chunk tri = canonical_chunk({{0, 0}, {1, 0}, {1, 1}});
    SegmentSet segments{Segment({0, 0}, {1, 1})};
    Tile tile = classify_chunk(tri, Rect{1, 1}, side_activity_from(segments));
    CHECK(tile.cls == TileClass::Triangle);
    CHECK(tile.a == 1);
    // Both legs dashed, hypotenuse active.
    CHECK(tile.dashed_sides.size() == 2);
}

TEST_CASE("classification of the tilted square") {
    Chunk sq = canonical_chunk({{1, 0}, {2, 1}, {1, 2}, {0, 1}});
    Tile tile = classify_chunk(sq, Rect{2, 2}, all_active());
    CHECK(tile.cls == TileClass::TiltedSquare);
    CHECK(tile.dashed_sides.empty());
}

TEST_CASE("classification of the 2x2 axis square") {
    Chunk sq = canonical_chunk({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    Tile tile = classify_chunk(sq, Rect{2, 2}, all_active());
    CHECK(tile.cls == TileClass::AxisSquare);
}

TEST_CASE("classification of a trapezoid") {
    // Base 6 on the lower boundary, top 2, legs 2*sqrt(2).
    Chunk tz = canonical_chunk({{0, 0}, {6, 0}, {4, 2}, {2, 2}});
    auto activity = [](Point a, Point b) {
        bool base = a.y == 0 && b.y == 0;
        return base ? SideActivity::Inactive : SideActivity::Active;
    };
    Tile tile = classify_chunk(tz, Rect{6, 4}, activity);
    CHECK(tile.cls == TileClass::Trapezoid);
    CHECK(tile.a == 2);
    CHECK(tile.dashed_sides == std::vector<int>{0});
}

TEST_CASE("classification of a hexagon") {
    // Axis sides of length 2, two antiparallel diagonals of length 3*sqrt(2).
    Chunk hex = canonical_chunk({{0, 0}, {2, 0}, {5, 3}, {5, 5}, {3, 5}, {0, 2}});
    Tile tile = classify_chunk(hex, Rect{8, 8}, all_active());
    CHECK(tile.cls == TileClass::Hexagon);
    CHECK(tile.a == 3);
}

TEST_CASE("classification of an octagon") {
    // Axis sides 2, diagonal sides 1*sqrt(2) and 2*sqrt(2) alternating.
    Chunk oct = canonical_chunk({{1, 0}, {3, 0}, {5, 2}, {5, 4}, {4, 5}, {2, 5}, {0, 3}, {0, 1}});
    Tile tile = classify_chunk(oct, Rect{5, 5}, all_active());
    CHECK(tile.cls == TileClass::Octagon);
    CHECK(((tile.a == 1 && tile.b == 2) || (tile.a == 2 && tile.b == 1)));
}

TEST_CASE("pentagons are rejected") {
    // Two 3pi/4 and three pi/2 angles, every generic side rule satisfied, so
    // the five-sided catalog rejection itself must fire.
    Chunk pent = canonical_chunk({{0, 0}, {2, 0}, {2, 2}, {1, 3}, {0, 2}});
    CHECK_THROWS_WITH_AS(classify_chunk(pent, Rect{4, 4}, all_active()),
                         doctest::Contains("pentagonal"), ClassifyError);
    try {
        classify_chunk(pent, Rect{4, 4}, all_active());
    } catch (const ClassifyError& e) {
        CHECK(e.polygon.size() == 5);
    }
}

TEST_CASE("heptagons are rejected") {
    // Six 3pi/4 angles and one right angle; the long base hides on the
    // boundary as an inactive side so every generic rule passes first.
    Chunk hept = canonical_chunk({{0, 0}, {4, 0}, {5, 1}, {5, 3}, {4, 4}, {2, 4}, {0, 2}});
    auto activity = [](Point a, Point b) {
        return (a.y == 0 && b.y == 0) ? SideActivity::Inactive : SideActivity::Active;
    };
    CHECK_THROWS_WITH_AS(classify_chunk(hept, Rect{5, 4}, activity),
                         doctest::Contains("heptagonal"), ClassifyError);
}

TEST_CASE("oversized axis squares are outside the catalog") {
    Chunk big = canonical_chunk({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    CHECK_THROWS_AS(classify_chunk(big, Rect{4, 4}, all_active()), ClassifyError);
}

TEST_CASE("mixed sides are rejected") {
    Chunk sq = canonical_chunk({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    auto mixed = [](Point, Point) { return SideActivity::Mixed; };
    CHECK_THROWS_AS(classify_chunk(sq, Rect{2, 2}, mixed), ClassifyError);
}

TEST_CASE("side activity distinguishes covered, bare and partial sides") {
    SegmentSet segments{Segment({0, 0}, {2, 0}), Segment({2, 0}, {4, 0}),
                        Segment({0, 2}, {1, 3})};
    SideActivityFn activity = side_activity_from(segments);
    CHECK(activity({0, 0}, {4, 0}) == SideActivity::Active);
    CHECK(activity({0, 0}, {6, 0}) == SideActivity::Mixed);
    CHECK(activity({0, 1}, {4, 1}) == SideActivity::Inactive);
    CHECK(activity({0, 2}, {1, 3}) == SideActivity::Active);
    CHECK(activity({0, 2}, {2, 4}) == SideActivity::Mixed);
    CHECK(activity({4, 0}, {0, 0}) == SideActivity::Active);  // orientation-independent
}

TEST_CASE("validate_tiling accepts the two-triangle tiling of the unit square") {
    SegmentSet segments{Segment({0, 0}, {1, 1})};
    SideActivityFn activity = side_activity_from(segments);
    Tiling t;
    t.rect = {1, 1};
    t.color = Color::Black;
    for (const Chunk& c : split(segments, t.rect))
        t.tiles.push_back(classify_chunk(c, t.rect, activity));
    canonicalize_tiling(t);

    ValidationReport report = validate_tiling(t);
    CHECK(report.ok);

    SUBCASE("deleting a tile breaks the cover") {
        t.tiles.pop_back();
        ValidationReport broken = validate_tiling(t);
        CHECK_FALSE(broken.ok);
    }
    SUBCASE("moving a dashed side into the interior breaks validation") {
        // The hypotenuse is the interior side; marking it dashed must fail.
        for (Tile& tile : t.tiles) {
            tile.dashed_sides.clear();
            const auto& v = tile.chunk.vertices;
            for (int i = 0; i < 3; ++i) {
                Point a = v[i], b = v[(i + 1) % 3];
                if (a.x != b.x && a.y != b.y) tile.dashed_sides.push_back(i);  // the diagonal
            }
        }
        ValidationReport broken = validate_tiling(t);
        CHECK_FALSE(broken.ok);
    }
}

TEST_CASE("validate_tiling flags wrong-color vertices") {
    // The tilted-square tiling of the 2x2 square has white non-corner
    // vertices; declaring it black must fail the monochromatic rule.
    SegmentSet segments{Segment({1, 0}, {0, 1}), Segment({1, 0}, {2, 1}), Segment({0, 1}, {1, 2}),
                        Segment({2, 1}, {1, 2})};
    Tiling t;
    t.rect = {2, 2};
    t.color = Color::Black;
    SideActivityFn activity = side_activity_from(segments);
    for (const Chunk& c : split(segments, t.rect))
        t.tiles.push_back(classify_chunk(c, t.rect, activity));
    ValidationReport report = validate_tiling(t);
    CHECK_FALSE(report.ok);
}

TEST_CASE("canonical chunks start at the smallest vertex counterclockwise") {
    Chunk a = canonical_chunk({{2, 0}, {2, 2}, {0, 2}, {0, 0}});
    CHECK(a.vertices == std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    Chunk b = canonical_chunk({{0, 0}, {0, 2}, {2, 2}, {2, 0}});  // clockwise input
    CHECK(b.vertices == a.vertices);
}

TEST_CASE("active points away from corners have at least two incident segments") {
    for (int m = 2; m <= 9; ++m) {
        for (int n = 2; n <= 9; ++n) {
            GridGraph g(m, n);
            for (Color polarity : {Color::Black, Color::White}) {
                auto basis = kernel_basis_elimination(g, polarity);
                for (unsigned long mask = 1; mask < (1ul << basis.size()); ++mask) {
                    PolarizedVector u(m, n, polarity);
                    for (std::size_t i = 0; i < basis.size(); ++i)
                        if (mask & (1ul << i)) u ^= basis[i];
                    SegmentSet segments = active_adjacency(u);
                    for (Point p : active_points(u)) {
                        int degree = 0;
                        for (const Segment& s : segments) degree += (s.a == p || s.b == p);
                        bool corner = (p.x == 0 || p.x == m - 1) && (p.y == 0 || p.y == n - 1);
                        if (!corner) CHECK(degree >= 2);
                        // Interior stars have degree 2, 3 or 4.
                        bool interior = p.x > 0 && p.x < m - 1 && p.y > 0 && p.y < n - 1;
                        if (interior) {
                            CHECK(degree >= 2);
                            CHECK(degree <= 4);
                        }
                    }
                }
            }
        }
    }
}
