#include "harmtile/tiling.hpp"

#include <algorithm>
#include <array>

namespace harmtile {

namespace {

std::string point_str(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string polygon_str(const std::vector<Point>& poly) {
    std::string s = "[";
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (i) s += " ";
        s += point_str(poly[i]);
    }
    return s + "]";
}

}  // namespace

Segment::Segment(Point p, Point q) {
    int dx = q.x - p.x, dy = q.y - p.y;
    bool axis = (dx == 0 && (dy == 2 || dy == -2)) || (dy == 0 && (dx == 2 || dx == -2));
    bool diag = (dx == 1 || dx == -1) && (dy == 1 || dy == -1);
    if (!axis && !diag)
        throw std::invalid_argument("not a splitting segment: " + point_str(p) + "-" +
                                    point_str(q));
    kind = axis ? SegmentKind::Axis : SegmentKind::Diagonal;
    if (q < p) std::swap(p, q);
    a = p;
    b = q;
}

std::vector<Point> active_points(const PolarizedVector& u) {
    std::vector<Point> pts;
    for (int y = 0; y < u.n(); ++y)
        for (int x = 0; x < u.m(); ++x)
            if (u.get(x, y)) pts.push_back({x, y});
    return pts;
}

SegmentSet active_adjacency(const PolarizedVector& u) {
    if (!is_harmonic(u))
        throw std::invalid_argument("active adjacency requires a kernel element");

    GridGraph g(u.m(), u.n());
    SegmentSet segments;
    for (int y = 0; y < u.n(); ++y) {
        for (int x = 0; x < u.m(); ++x) {
            Point w{x, y};
            if (color_of(w) == u.polarity()) continue;
            std::vector<Point> active;
            for (Point q : g.neighbors(w))
                if (u.get(q)) active.push_back(q);
            for (std::size_t i = 0; i < active.size(); ++i) {
                for (std::size_t j = i + 1; j < active.size(); ++j) {
                    int dot = (active[i].x - w.x) * (active[j].x - w.x) +
                              (active[i].y - w.y) * (active[j].y - w.y);
                    if (dot == 0) {
                        segments.insert(Segment(active[i], active[j]));
                    } else if (dot == -1 && active.size() == 2) {
                        // Collinear pair, and they are w's only active neighbors.
                        segments.insert(Segment(active[i], active[j]));
                    }
                }
            }
        }
    }
    return segments;
}

namespace {

// Compass direction index: E=0, NE=1, N=2, NW=3, W=4, SW=5, S=6, SE=7.
int dir8_of(int dx, int dy) {
    int sx = (dx > 0) - (dx < 0);
    int sy = (dy > 0) - (dy < 0);
    static constexpr std::array<std::array<int, 3>, 3> table = {{
        {{5, 4, 3}},  // sx = -1 : SW, W, NW
        {{6, -1, 2}},  // sx = 0 : S, -, N
        {{7, 0, 1}},  // sx = +1 : SE, E, NE
    }};
    return table[sx + 1][sy + 1];
}

constexpr std::array<Point, 8> kDir8Steps = {{{1, 0},
                                              {1, 1},
                                              {0, 1},
                                              {-1, 1},
                                              {-1, 0},
                                              {-1, -1},
                                              {0, -1},
                                              {1, -1}}};

struct SideInfo {
    Point a, b;        // from vertices[i] to vertices[i+1]
    int dir = 0;       // compass index
    bool axis = true;  // axis-aligned vs diagonal
    int len = 0;       // integer length; diagonal sides in sqrt(2) units
    bool on_boundary = false;
    SideActivity activity = SideActivity::Active;
    // interior angle at vertex i (the side's start), in units of pi/4
    int start_angle = 0;
};

std::vector<SideInfo> side_geometry(const Chunk& chunk, Rect rect,
                                    const std::vector<SideActivity>& activities) {
    const auto& v = chunk.vertices;
    const int k = static_cast<int>(v.size());
    if (k < 3 || k > 8)
        throw ClassifyError("chunk has " + std::to_string(k) + " sides, outside the 3..8 range " +
                                polygon_str(v),
                            v);

    std::vector<SideInfo> sides(k);
    for (int i = 0; i < k; ++i) {
        Point a = v[i], b = v[(i + 1) % k];
        int dx = b.x - a.x, dy = b.y - a.y;
        bool axis = (dx == 0) != (dy == 0);
        bool diag = dx != 0 && (dx == dy || dx == -dy);
        if (!axis && !diag)
            throw ClassifyError("chunk side " + point_str(a) + "-" + point_str(b) +
                                    " is neither axis-aligned nor at 45 degrees",
                                v);
        SideInfo& s = sides[i];
        s.a = a;
        s.b = b;
        s.dir = dir8_of(dx, dy);
        s.axis = axis;
        s.len = std::max(std::abs(dx), std::abs(dy));
        s.on_boundary = (a.x == 0 && b.x == 0) || (a.x == rect.width && b.x == rect.width) ||
                        (a.y == 0 && b.y == 0) || (a.y == rect.height && b.y == rect.height);
        s.activity = activities[i];
    }

    int turn_total = 0;
    for (int i = 0; i < k; ++i) {
        int turn = (sides[i].dir - sides[(i + k - 1) % k].dir + 8) % 8;
        if (turn < 1 || turn > 3)
            throw ClassifyError("chunk is not convex counterclockwise at vertex " +
                                    point_str(v[i]) + " " + polygon_str(v),
                                v);
        sides[i].start_angle = 4 - turn;  // pi/4 units: 3, 2, or 1
        turn_total += turn;
    }
    if (turn_total != 8)
        throw ClassifyError("chunk boundary does not wind once counterclockwise " + polygon_str(v),
                            v);

    for (const SideInfo& s : sides) {
        if (s.activity == SideActivity::Mixed)
            throw ClassifyError("mixed side " + point_str(s.a) + "-" + point_str(s.b) +
                                    " (partially covered by active segments)",
                                chunk.vertices);
        if (s.activity == SideActivity::Inactive && !s.on_boundary)
            throw ClassifyError("inactive side " + point_str(s.a) + "-" + point_str(s.b) +
                                    " away from the rectangle boundary",
                                chunk.vertices);
        if (s.activity == SideActivity::Active && s.axis && s.len != 2)
            throw ClassifyError("active axis side " + point_str(s.a) + "-" + point_str(s.b) +
                                    " has length " + std::to_string(s.len) + ", must be 2",
                                chunk.vertices);
    }
    return sides;
}

bool is_rect_corner(Point p, Rect r) {
    return (p.x == 0 || p.x == r.width) && (p.y == 0 || p.y == r.height);
}

Tile classify_core(const Chunk& chunk, Rect rect, const std::vector<SideActivity>& activities) {
    const auto& v = chunk.vertices;
    const int k = static_cast<int>(v.size());
    std::vector<SideInfo> sides = side_geometry(chunk, rect, activities);

    auto angle_count = [&](int units) {
        int c = 0;
        for (const auto& s : sides)
            if (s.start_angle == units) ++c;
        return c;
    };
    const int sharp = angle_count(1), right = angle_count(2), wide = angle_count(3);

    Tile tile;
    tile.chunk = chunk;
    for (int i = 0; i < k; ++i)
        if (sides[i].activity == SideActivity::Inactive) tile.dashed_sides.push_back(i);

    auto require = [&](bool cond, const std::string& what) {
        if (!cond) throw ClassifyError(what + " " + polygon_str(v), v);
    };

    switch (k) {
        case 3: {
            require(right == 1 && sharp == 2, "triangle must be right isosceles");
            int r = 0;
            while (sides[r].start_angle != 2) ++r;
            require(is_rect_corner(v[r], rect), "triangle right angle must sit at a corner of R");
            const SideInfo& leg_out = sides[r];
            const SideInfo& leg_in = sides[(r + k - 1) % k];
            const SideInfo& hyp = sides[(r + 1) % k];
            require(leg_out.axis && leg_in.axis && !hyp.axis,
                    "triangle legs must be axis-aligned with a diagonal hypotenuse");
            require(leg_out.len == leg_in.len && hyp.len == leg_out.len,
                    "triangle must be isosceles with matching hypotenuse");
            require(leg_out.on_boundary && leg_in.on_boundary, "triangle legs must lie on the boundary");
            require(leg_out.activity == SideActivity::Inactive &&
                        leg_in.activity == SideActivity::Inactive,
                    "triangle legs must be dashed");
            require(hyp.activity == SideActivity::Active, "triangle hypotenuse must be active");
            tile.cls = TileClass::Triangle;
            tile.a = leg_out.len;
            break;
        }
        case 4: {
            if (right == 4) {
                bool all_axis = sides[0].axis && sides[1].axis && sides[2].axis && sides[3].axis;
                bool all_diag = !sides[0].axis && !sides[1].axis && !sides[2].axis && !sides[3].axis;
                require(all_axis || all_diag, "rectangular chunk with mixed side kinds");
                for (const auto& s : sides)
                    require(s.activity == SideActivity::Active, "square sides must all be active");
                if (all_axis) {
                    for (const auto& s : sides) require(s.len == 2, "axis square must be 2x2");
                    tile.cls = TileClass::AxisSquare;
                } else {
                    for (const auto& s : sides)
                        require(s.len == 1, "tilted square sides must have length sqrt(2)");
                    tile.cls = TileClass::TiltedSquare;
                }
                break;
            }
            require(sharp == 2 && wide == 2, "quadrilateral must be a square or a trapezoid");
            // The two pi/4 angles must be adjacent, flanking the long base.
            int base = -1;
            for (int i = 0; i < k; ++i)
                if (sides[i].start_angle == 1 && sides[(i + 1) % k].start_angle == 1) base = i;
            require(base >= 0, "the sharp angles of a trapezoid must flank one side");
            const SideInfo& b = sides[base];
            const SideInfo& top = sides[(base + 2) % k];
            const SideInfo& leg1 = sides[(base + 1) % k];
            const SideInfo& leg2 = sides[(base + 3) % k];
            require(b.axis && top.axis && !leg1.axis && !leg2.axis,
                    "trapezoid needs axis base and top with diagonal legs");
            require(b.activity == SideActivity::Inactive && b.on_boundary,
                    "trapezoid base must be dashed on the boundary");
            require(top.activity == SideActivity::Active && top.len == 2,
                    "trapezoid top must be an active side of length 2");
            require(leg1.activity == SideActivity::Active && leg2.activity == SideActivity::Active,
                    "trapezoid legs must be active");
            require(leg1.len == leg2.len, "trapezoid legs must match");
            require(b.len == 2 * leg1.len + 2, "trapezoid base must equal top + 2*leg");
            tile.cls = TileClass::Trapezoid;
            tile.a = leg1.len;
            break;
        }
        case 5:
            throw ClassifyError("pentagonal chunk cannot occur " + polygon_str(v), v);
        case 6: {
            require(right == 2 && wide == 4, "hexagon must have four 3pi/4 and two pi/2 angles");
            for (int i = 0; i < k; ++i) {
                if (sides[i].start_angle != 2) continue;
                require(sides[(i + 1) % k].start_angle != 2 && sides[(i + k - 1) % k].start_angle != 2,
                        "hexagon right angles must be separated");
                require(sides[i].axis && sides[(i + k - 1) % k].axis,
                        "hexagon right angles must sit between axis sides");
            }
            int diag_len = 0, diag_count = 0, first_diag_dir = -1;
            for (const auto& s : sides) {
                require(s.activity == SideActivity::Active, "hexagon sides must all be active");
                if (s.axis) {
                    require(s.len == 2, "hexagon axis sides must have length 2");
                } else {
                    ++diag_count;
                    if (first_diag_dir < 0) {
                        first_diag_dir = s.dir;
                        diag_len = s.len;
                    } else {
                        require((s.dir + 4) % 8 == first_diag_dir,
                                "hexagon diagonal sides must be antiparallel");
                        require(s.len == diag_len, "hexagon diagonal sides must match");
                    }
                }
            }
            require(diag_count == 2, "hexagon must have exactly two diagonal sides");
            tile.cls = TileClass::Hexagon;
            tile.a = diag_len;
            break;
        }
        case 7:
            throw ClassifyError("heptagonal chunk cannot occur " + polygon_str(v), v);
        case 8: {
            require(wide == 8, "octagon angles must all be 3pi/4");
            int first_diag = -1;
            for (int i = 0; i < k; ++i) {
                const auto& s = sides[i];
                require(s.activity == SideActivity::Active, "octagon sides must all be active");
                if (s.axis) {
                    require(s.len == 2, "octagon axis sides must have length 2");
                } else if (first_diag < 0) {
                    first_diag = i;
                }
            }
            // Turns of pi/4 everywhere force strict axis/diagonal alternation,
            // and closure forces opposite diagonals to match.
            tile.a = sides[first_diag].len;
            tile.b = sides[(first_diag + 2) % k].len;
            require(sides[(first_diag + 4) % k].len == tile.a &&
                        sides[(first_diag + 6) % k].len == tile.b,
                    "octagon opposite diagonal sides must match");
            tile.cls = TileClass::Octagon;
            break;
        }
        default:
            throw ClassifyError("chunk with " + std::to_string(k) + " sides is outside the catalog",
                                v);
    }

    // Dashed sides are exactly what the class dictates; anything else would
    // contradict the activity rules already enforced above.
    return tile;
}

}  // namespace

SideActivityFn side_activity_from(const SegmentSet& segments) {
    return [segments](Point a, Point b) -> SideActivity {
        int dx = b.x - a.x, dy = b.y - a.y;
        int sx = (dx > 0) - (dx < 0), sy = (dy > 0) - (dy < 0);
        bool axis = (dx == 0) != (dy == 0);
        int len = std::max(std::abs(dx), std::abs(dy));
        int piece = axis ? 2 : 1;  // lattice points per active piece along the side

        // Mark which unit cells of the side are covered by a segment.
        std::vector<bool> covered(len, false);
        for (int t = 0; t + piece <= len; ++t) {
            Point p{a.x + t * sx, a.y + t * sy};
            Point q{a.x + (t + piece) * sx, a.y + (t + piece) * sy};
            Segment candidate(p, q);
            if (segments.count(candidate))
                for (int u = t; u < t + piece; ++u) covered[u] = true;
        }
        bool any = false, all = true;
        for (bool c : covered) {
            any = any || c;
            all = all && c;
        }
        if (!any) return SideActivity::Inactive;
        return all ? SideActivity::Active : SideActivity::Mixed;
    };
}

Tile classify_chunk(const Chunk& chunk, Rect rect, const SideActivityFn& side_activity) {
    const int k = static_cast<int>(chunk.vertices.size());
    if (k < 3)
        throw ClassifyError("degenerate chunk " + polygon_str(chunk.vertices), chunk.vertices);
    std::vector<SideActivity> activities(k);
    for (int i = 0; i < k; ++i)
        activities[i] = side_activity(chunk.vertices[i], chunk.vertices[(i + 1) % k]);
    return classify_core(chunk, rect, activities);
}

Chunk canonical_chunk(std::vector<Point> vertices) {
    if (vertices.size() >= 3) {
        long long area2 = 0;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            Point a = vertices[i], b = vertices[(i + 1) % vertices.size()];
            area2 += static_cast<long long>(a.x) * b.y - static_cast<long long>(a.y) * b.x;
        }
        if (area2 < 0) std::reverse(vertices.begin(), vertices.end());
    }
    auto smallest = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), smallest, vertices.end());
    return Chunk{std::move(vertices)};
}

namespace {

auto tile_sort_key(const Tile& t) {
    return std::tie(t.chunk.vertices, t.cls, t.a, t.b, t.dashed_sides);
}

long long chunk_area2(const Chunk& c) {
    long long area2 = 0;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        Point a = c.vertices[i], b = c.vertices[(i + 1) % c.vertices.size()];
        area2 += static_cast<long long>(a.x) * b.y - static_cast<long long>(a.y) * b.x;
    }
    return area2;
}

// Strictly-inside test for an atom centroid against a convex CCW polygon.
// Polygon coordinates are 4x the lattice, the centroid comes premultiplied by
// 3 on that scale, so every test is an integer cross product.
bool centroid_strictly_inside(const std::vector<Point>& poly4, long long cx12, long long cy12) {
    const std::size_t k = poly4.size();
    for (std::size_t i = 0; i < k; ++i) {
        Point u = poly4[i], w = poly4[(i + 1) % k];
        long long c = static_cast<long long>(w.x - u.x) * (cy12 - 3LL * u.y) -
                      static_cast<long long>(w.y - u.y) * (cx12 - 3LL * u.x);
        if (c <= 0) return false;
    }
    return true;
}

}  // namespace

void canonicalize_tiling(Tiling& t) {
    std::sort(t.tiles.begin(), t.tiles.end(),
              [](const Tile& a, const Tile& b) { return tile_sort_key(a) < tile_sort_key(b); });
}

std::string tiling_key(const Tiling& t) {
    std::string key = std::to_string(t.rect.width) + "x" + std::to_string(t.rect.height) +
                      (t.color == Color::Black ? "b" : "w");
    for (const Tile& tile : t.tiles) {
        key += "|" + tile_class_name(tile.cls) + ":" + std::to_string(tile.a) + "," +
               std::to_string(tile.b) + ":";
        for (Point p : tile.chunk.vertices) key += point_str(p);
        key += ":";
        for (int d : tile.dashed_sides) key += std::to_string(d) + ",";
    }
    return key;
}

std::string tile_class_name(TileClass c) {
    switch (c) {
        case TileClass::Octagon: return "octagon";
        case TileClass::Hexagon: return "hexagon";
        case TileClass::AxisSquare: return "axis_square";
        case TileClass::TiltedSquare: return "tilted_square";
        case TileClass::Trapezoid: return "trapezoid";
        case TileClass::Triangle: return "triangle";
    }
    throw std::logic_error("unknown tile class");
}

TileClass tile_class_from_name(const std::string& name) {
    if (name == "octagon") return TileClass::Octagon;
    if (name == "hexagon") return TileClass::Hexagon;
    if (name == "axis_square") return TileClass::AxisSquare;
    if (name == "tilted_square") return TileClass::TiltedSquare;
    if (name == "trapezoid") return TileClass::Trapezoid;
    if (name == "triangle") return TileClass::Triangle;
    throw std::invalid_argument("unknown tile class name: " + name);
}

ValidationReport validate_tiling(const Tiling& t) {
    ValidationReport report;
    if (t.rect.width < 1 || t.rect.height < 1) {
        report.fail("rectangle sides must be nonzero");
        return report;
    }

    // Per-tile shape checks, replaying classification with the stored dashed
    // sides as the activity assignment.
    for (std::size_t ti = 0; ti < t.tiles.size(); ++ti) {
        const Tile& tile = t.tiles[ti];
        const int k = static_cast<int>(tile.chunk.vertices.size());
        std::vector<SideActivity> activities(k, SideActivity::Active);
        bool dashed_ok = true;
        for (int d : tile.dashed_sides) {
            if (d < 0 || d >= k) {
                report.fail("tile " + std::to_string(ti) + ": dashed side index " +
                            std::to_string(d) + " out of range");
                dashed_ok = false;
            } else {
                activities[d] = SideActivity::Inactive;
            }
        }
        if (dashed_ok) {
            try {
                Tile expect = classify_core(tile.chunk, t.rect, activities);
                if (expect.cls != tile.cls || expect.a != tile.a || expect.b != tile.b ||
                    expect.dashed_sides != tile.dashed_sides)
                    report.fail("tile " + std::to_string(ti) + ": stored class " +
                                tile_class_name(tile.cls) + " does not match its geometry");
            } catch (const ClassifyError& e) {
                report.fail("tile " + std::to_string(ti) + ": " + e.what());
            }
        }

        for (Point p : tile.chunk.vertices) {
            if (p.x < 0 || p.x > t.rect.width || p.y < 0 || p.y > t.rect.height)
                report.fail("tile " + std::to_string(ti) + ": vertex " + point_str(p) +
                            " outside the rectangle");
            else if (!is_rect_corner(p, t.rect) && color_of(p) != t.color)
                report.fail("tile " + std::to_string(ti) + ": non-corner vertex " + point_str(p) +
                            " has the wrong color");
        }
    }

    // Exact cover: areas must sum to the rectangle and every refined-raster
    // atom must land strictly inside exactly one tile.
    long long total2 = 0;
    for (const Tile& tile : t.tiles) total2 += chunk_area2(tile.chunk);
    if (total2 != 2LL * t.rect.width * t.rect.height)
        report.fail("tile areas sum to " + std::to_string(total2) + "/2, rectangle has area " +
                    std::to_string(static_cast<long long>(t.rect.width) * t.rect.height));

    const int w2 = 2 * t.rect.width, h2 = 2 * t.rect.height;
    std::vector<int> occupancy(static_cast<std::size_t>(w2) * h2 * 4, 0);
    for (const Tile& tile : t.tiles) {
        std::vector<Point> poly4;
        poly4.reserve(tile.chunk.vertices.size());
        int min_x = t.rect.width, max_x = 0, min_y = t.rect.height, max_y = 0;
        for (Point p : tile.chunk.vertices) {
            poly4.push_back({4 * p.x, 4 * p.y});
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
        min_x = std::max(min_x, 0);
        min_y = std::max(min_y, 0);
        max_x = std::min(max_x, t.rect.width);
        max_y = std::min(max_y, t.rect.height);
        for (int cy = 2 * min_y; cy < 2 * max_y; ++cy) {
            for (int cx = 2 * min_x; cx < 2 * max_x; ++cx) {
                // Atom centroids premultiplied by 3 on the 4x scale.
                const long long cents[4][2] = {{6LL * cx + 3, 6LL * cy + 1},
                                               {6LL * cx + 5, 6LL * cy + 3},
                                               {6LL * cx + 3, 6LL * cy + 5},
                                               {6LL * cx + 1, 6LL * cy + 3}};
                for (int a = 0; a < 4; ++a)
                    if (centroid_strictly_inside(poly4, cents[a][0], cents[a][1]))
                        ++occupancy[(static_cast<std::size_t>(cy) * w2 + cx) * 4 + a];
            }
        }
    }
    int uncovered = 0, doubled = 0;
    for (int count : occupancy) {
        if (count == 0) ++uncovered;
        if (count > 1) ++doubled;
    }
    if (uncovered)
        report.fail(std::to_string(uncovered) + " raster atoms not covered by any tile");
    if (doubled)
        report.fail(std::to_string(doubled) + " raster atoms covered by overlapping tiles");

    return report;
}

}  // namespace harmtile
