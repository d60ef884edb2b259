#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "harmtile/harmonic.hpp"

namespace harmtile {

// Rectangle side lengths (width, height) = (m-1, n-1). All geometry in this
// module is exact: coordinates are integers, directions are the 8 compass
// directions, and no floating point appears anywhere.
struct Rect {
    int width = 0;
    int height = 0;
    friend bool operator==(const Rect&, const Rect&) = default;
};

enum class SegmentKind { Axis, Diagonal };

// A unit piece of the splitting: axis-aligned of length 2 or diagonal of
// length sqrt(2), joining two points of the same color. Endpoints are stored
// in lexicographic order so segments compare as unordered pairs.
struct Segment {
    Point a;
    Point b;
    SegmentKind kind;

    Segment(Point p, Point q);

    friend auto operator<=>(const Segment& lhs, const Segment& rhs) {
        return std::tie(lhs.a, lhs.b) <=> std::tie(rhs.a, rhs.b);
    }
    friend bool operator==(const Segment& lhs, const Segment& rhs) {
        return lhs.a == rhs.a && lhs.b == rhs.b;
    }
};

using SegmentSet = std::set<Segment>;

// One closed cell of a splitting: a convex polygon with integer vertices,
// stored counterclockwise with the lexicographically smallest vertex first.
struct Chunk {
    std::vector<Point> vertices;
    friend bool operator==(const Chunk&, const Chunk&) = default;
};

enum class TileClass { Octagon, Hexagon, AxisSquare, TiltedSquare, Trapezoid, Triangle };

std::string tile_class_name(TileClass c);
TileClass tile_class_from_name(const std::string& name);

// A classified chunk. Side i joins vertices[i] to vertices[i+1 mod k].
// Dashed sides are the inactive ones; they always lie on the rectangle
// boundary (the long base of a trapezoid, the legs of a corner triangle).
// params (a, b) are the integer side parameters of the class, 0 when unused.
struct Tile {
    Chunk chunk;
    TileClass cls;
    int a = 0;
    int b = 0;
    std::vector<int> dashed_sides;  // sorted side indices

    friend bool operator==(const Tile&, const Tile&) = default;
};

struct Tiling {
    Rect rect;
    Color color = Color::Black;
    std::vector<Tile> tiles;  // canonically sorted

    friend bool operator==(const Tiling&, const Tiling&) = default;
};

// Thrown by split() when the segment set self-intersects away from shared
// endpoints. On kernel-derived segments this never happens; firing signals a
// non-kernel input upstream.
class SplitError : public std::runtime_error {
public:
    explicit SplitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a chunk fails to match the tile catalog. Chunks cut from
// kernel vectors provably never do, so firing means the input was not one.
class ClassifyError : public std::runtime_error {
public:
    ClassifyError(const std::string& what, std::vector<Point> polygon)
        : std::runtime_error(what), polygon(std::move(polygon)) {}
    std::vector<Point> polygon;
};

// Support of the vector, in scan order.
std::vector<Point> active_points(const PolarizedVector& u);

// The adjacency segments among active points: for every unordered active
// pair sharing an opposite-color neighbor w, a diagonal segment when the pair
// forms a right angle at w, an axis segment when the pair is collinear
// through w and they are w's only active neighbors. Requires a kernel
// element.
SegmentSet active_adjacency(const PolarizedVector& u);

// Cuts the rectangle along the segments and returns the closures of the
// connected components. Works on a 2x-refined raster whose cells are split
// into quadrant triangles, so diagonal cuts stay exact; chunk polygons are
// recovered by boundary tracing and collinear merging.
std::vector<Chunk> split(const SegmentSet& segments, Rect rect);

enum class SideActivity { Active, Inactive, Mixed };

using SideActivityFn = std::function<SideActivity(Point, Point)>;

// Activity predicate backed by a segment set: a side is Active when the
// segments tile it completely, Inactive when none touches it, Mixed
// otherwise (mixed sides never occur in kernel-derived splittings).
SideActivityFn side_activity_from(const SegmentSet& segments);

// Matches a chunk against the tile catalog, extracts its integer parameters
// and dashed sides, and rejects anything outside the catalog (pentagons,
// heptagons, wrong side lengths, dashed sides off the boundary, ...).
Tile classify_chunk(const Chunk& chunk, Rect rect, const SideActivityFn& side_activity);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string what) {
        ok = false;
        violations.push_back(std::move(what));
    }
};

// Structural validation of a tiling: exact cover of the rectangle (area sum
// plus refined-raster occupancy), integral in-bounds vertices, the
// monochromatic vertex rule with the corner exception, dashed sides on the
// boundary, and per-tile class validity.
ValidationReport validate_tiling(const Tiling& t);

// Canonical form helpers shared by construction and serialization.
Chunk canonical_chunk(std::vector<Point> vertices);        // CCW + rotation
void canonicalize_tiling(Tiling& t);                       // sorts tiles
std::string tiling_key(const Tiling& t);                   // total order key

}  // namespace harmtile
