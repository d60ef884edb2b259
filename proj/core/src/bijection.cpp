#include "harmtile/bijection.hpp"

#include <algorithm>
#include <set>

namespace harmtile {

namespace {

std::string point_str(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

Tiling phi(const PolarizedVector& u) {
    if (u.is_zero()) throw std::invalid_argument("phi requires a nonzero kernel element");
    SegmentSet segments = active_adjacency(u);  // rejects non-kernel input

    Rect rect{u.m() - 1, u.n() - 1};
    Tiling t;
    t.rect = rect;
    t.color = u.polarity();

    SideActivityFn activity = side_activity_from(segments);
    for (const Chunk& chunk : split(segments, rect))
        t.tiles.push_back(classify_chunk(chunk, rect, activity));
    canonicalize_tiling(t);
    return t;
}

PolarizedVector psi(const Tiling& t) {
    ValidationReport validation = validate_tiling(t);
    if (!validation.ok)
        throw std::invalid_argument("psi requires a valid tiling: " + validation.violations.front());

    const int m = t.rect.width + 1, n = t.rect.height + 1;
    PolarizedVector u(m, n, t.color);
    for (const Tile& tile : t.tiles) {
        const auto& v = tile.chunk.vertices;
        const int k = static_cast<int>(v.size());
        for (int i = 0; i < k; ++i) {
            if (std::find(tile.dashed_sides.begin(), tile.dashed_sides.end(), i) !=
                tile.dashed_sides.end())
                continue;
            Point a = v[i], b = v[(i + 1) % k];
            int dx = b.x - a.x, dy = b.y - a.y;
            int sx = (dx > 0) - (dx < 0), sy = (dy > 0) - (dy < 0);
            int len = std::max(std::abs(dx), std::abs(dy));
            for (int s = 0; s <= len; ++s) {
                Point p{a.x + s * sx, a.y + s * sy};
                if (color_of(p) == t.color) u.set(p, true);
            }
        }
    }

    PolarizedVector residual = laplacian_residual(u);
    if (!residual.is_zero()) {
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < m; ++x)
                if (residual.get(x, y))
                    throw std::invalid_argument(
                        "vector recovered from the tiling is not harmonic: neighbor sum is odd at " +
                        point_str({x, y}));
    }
    return u;
}

BijectionReport verify_bijection(const GridGraph& g, Color polarity, int dim_cap) {
    std::vector<PolarizedVector> basis = kernel_basis_elimination(g, polarity);
    const int dim = static_cast<int>(basis.size());

    BijectionReport report;
    report.polarity = polarity;
    report.dimension = dim;
    if (dim > dim_cap) {
        KernelDims dims = kernel_dims_closed_form(g.m(), g.n());
        throw CapExceeded(dims.beta, dims.omega, dim_cap);
    }

    std::set<std::string> seen;
    for (unsigned long mask = 1; mask < (1ul << dim); ++mask) {
        PolarizedVector u(g.m(), g.n(), polarity);
        for (int i = 0; i < dim; ++i)
            if (mask & (1ul << i)) u ^= basis[i];
        ++report.vectors_checked;

        Tiling t;
        try {
            t = phi(u);
        } catch (const std::exception& e) {
            report.failures.push_back("phi failed on vector " + std::to_string(mask) + ": " +
                                      e.what());
            continue;
        }
        ValidationReport validation = validate_tiling(t);
        if (!validation.ok) {
            report.failures.push_back("tiling of vector " + std::to_string(mask) +
                                      " invalid: " + validation.violations.front());
            continue;
        }
        if (!seen.insert(tiling_key(t)).second) {
            report.failures.push_back("tiling of vector " + std::to_string(mask) +
                                      " duplicates another tiling");
            continue;
        }
        PolarizedVector back = psi(t);
        if (!(back == u))
            report.failures.push_back("round trip mismatch on vector " + std::to_string(mask));
    }
    report.distinct_tilings = static_cast<long>(seen.size());
    report.ok = report.failures.empty();
    return report;
}

std::string neighborhood_class_name(NeighborhoodClass c) {
    switch (c) {
        case NeighborhoodClass::Trivial: return "trivial";
        case NeighborhoodClass::InteriorRightAngle: return "interior_right_angle";
        case NeighborhoodClass::InteriorFull: return "interior_full";
        case NeighborhoodClass::InteriorCollinear: return "interior_collinear";
        case NeighborhoodClass::BoundaryCollinear: return "boundary_collinear";
        case NeighborhoodClass::BoundaryRightAngle: return "boundary_right_angle";
        case NeighborhoodClass::CornerPair: return "corner_pair";
    }
    throw std::logic_error("unknown neighborhood class");
}

NeighborhoodClass active_neighborhood(const PolarizedVector& u, Point w) {
    GridGraph g(u.m(), u.n());
    if (g.color(w) == u.polarity())
        throw std::invalid_argument("active neighborhood is defined at points of color opposite to "
                                    "the vector's polarity; got " + point_str(w));

    std::vector<Point> nbrs = g.neighbors(w);
    std::vector<Point> active;
    for (Point q : nbrs)
        if (u.get(q)) active.push_back(q);

    if (active.empty()) return NeighborhoodClass::Trivial;

    const bool corner = nbrs.size() == 2;
    const bool boundary = nbrs.size() == 3;
    if (active.size() == 2) {
        int dot = (active[0].x - w.x) * (active[1].x - w.x) +
                  (active[0].y - w.y) * (active[1].y - w.y);
        if (corner) {
            return NeighborhoodClass::CornerPair;  // the only two neighbors, at a right angle
        }
        if (boundary)
            return dot == -1 ? NeighborhoodClass::BoundaryCollinear
                             : NeighborhoodClass::BoundaryRightAngle;
        return dot == -1 ? NeighborhoodClass::InteriorCollinear
                         : NeighborhoodClass::InteriorRightAngle;
    }
    if (active.size() == 4) return NeighborhoodClass::InteriorFull;

    throw std::invalid_argument("active neighborhood at " + point_str(w) + " has " +
                                std::to_string(active.size()) +
                                " active points; not a kernel configuration");
}

}  // namespace harmtile
