#include <algorithm>
#include <map>

#include "harmtile/tiling.hpp"

// Splitting extraction. Coordinates are doubled so that every diagonal
// segment passes through lattice points of the refined grid; each refined
// cell is divided into four quadrant triangles (atoms) so that a diagonal cut
// through a cell stays exact. Faces are flood-filled over atoms, and chunk
// polygons recovered by tracing face boundaries at 4x scale and merging
// collinear runs.

namespace harmtile {

namespace {

std::string point_str(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

long long orient(Point a, Point b, Point c) {
    return static_cast<long long>(b.x - a.x) * (c.y - a.y) -
           static_cast<long long>(b.y - a.y) * (c.x - a.x);
}

bool on_segment(Point p, const Segment& s) {
    if (orient(s.a, s.b, p) != 0) return false;
    return p.x >= std::min(s.a.x, s.b.x) && p.x <= std::max(s.a.x, s.b.x) &&
           p.y >= std::min(s.a.y, s.b.y) && p.y <= std::max(s.a.y, s.b.y);
}

// Two splitting segments may only touch at shared endpoints.
bool segments_conflict(const Segment& s, const Segment& t) {
    long long o1 = orient(s.a, s.b, t.a), o2 = orient(s.a, s.b, t.b);
    long long o3 = orient(t.a, t.b, s.a), o4 = orient(t.a, t.b, s.b);
    if (((o1 > 0) != (o2 > 0)) && o1 != 0 && o2 != 0 && ((o3 > 0) != (o4 > 0)) && o3 != 0 &&
        o4 != 0)
        return true;  // proper crossing
    for (Point p : {t.a, t.b})
        if (on_segment(p, s) && p != s.a && p != s.b) return true;
    for (Point p : {s.a, s.b})
        if (on_segment(p, t) && p != t.a && p != t.b) return true;
    return false;
}

// Atom layout inside a refined cell: quadrant triangles S, E, N, W around the
// center. At 4x scale the cell (cx, cy) has corners at (2cx, 2cy) and
// (2cx+2, 2cy+2) with center (2cx+1, 2cy+1).
enum Quadrant { kS = 0, kE = 1, kN = 2, kW = 3 };

struct Raster {
    int w2 = 0, h2 = 0;
    std::vector<char> hbar;  // horizontal unit edge (x2, y2)-(x2+1, y2): w2 x (h2+1)
    std::vector<char> vbar;  // vertical unit edge (x2, y2)-(x2, y2+1): (w2+1) x h2
    std::vector<char> diag;  // per cell: 0 none, 1 main (BL-TR), 2 anti (TL-BR)

    bool h_blocked(int x2, int y2) const { return hbar[static_cast<std::size_t>(y2) * w2 + x2]; }
    bool v_blocked(int x2, int y2) const {
        return vbar[static_cast<std::size_t>(y2) * (w2 + 1) + x2];
    }
    char cell_diag(int cx, int cy) const { return diag[static_cast<std::size_t>(cy) * w2 + cx]; }

    std::size_t atom(int cx, int cy, int q) const {
        return (static_cast<std::size_t>(cy) * w2 + cx) * 4 + q;
    }
    std::size_t atom_count() const { return static_cast<std::size_t>(w2) * h2 * 4; }

    // Neighbor across edge j (0 = outer cell edge, 1 and 2 = half-diagonals),
    // or npos when blocked or outside.
    std::size_t neighbor(int cx, int cy, int q, int edge) const;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::size_t Raster::neighbor(int cx, int cy, int q, int edge) const {
    const char d = cell_diag(cx, cy);
    switch (q) {
        case kS:
            if (edge == 0)
                return (cy > 0 && !h_blocked(cx, cy)) ? atom(cx, cy - 1, kN) : kNone;
            if (edge == 1) return d == 2 ? kNone : atom(cx, cy, kE);
            return d == 1 ? kNone : atom(cx, cy, kW);
        case kE:
            if (edge == 0)
                return (cx + 1 < w2 && !v_blocked(cx + 1, cy)) ? atom(cx + 1, cy, kW) : kNone;
            if (edge == 1) return d == 1 ? kNone : atom(cx, cy, kN);
            return d == 2 ? kNone : atom(cx, cy, kS);
        case kN:
            if (edge == 0)
                return (cy + 1 < h2 && !h_blocked(cx, cy + 1)) ? atom(cx, cy + 1, kS) : kNone;
            if (edge == 1) return d == 2 ? kNone : atom(cx, cy, kW);
            return d == 1 ? kNone : atom(cx, cy, kE);
        default:
            if (edge == 0) return (cx > 0 && !v_blocked(cx, cy)) ? atom(cx - 1, cy, kE) : kNone;
            if (edge == 1) return d == 1 ? kNone : atom(cx, cy, kS);
            return d == 2 ? kNone : atom(cx, cy, kN);
    }
}

// Directed edges of atom q at 4x scale, counterclockwise so the atom interior
// stays on the left.
void atom_edges(int cx, int cy, int q, Point out[3][2]) {
    const Point bl{2 * cx, 2 * cy}, br{2 * cx + 2, 2 * cy}, tr{2 * cx + 2, 2 * cy + 2},
        tl{2 * cx, 2 * cy + 2}, c{2 * cx + 1, 2 * cy + 1};
    Point a, b;
    switch (q) {
        case kS: a = bl; b = br; break;
        case kE: a = br; b = tr; break;
        case kN: a = tr; b = tl; break;
        default: a = tl; b = bl; break;
    }
    out[0][0] = a;
    out[0][1] = b;
    out[1][0] = b;
    out[1][1] = c;
    out[2][0] = c;
    out[2][1] = a;
}

void set_diag(Raster& r, int cx, int cy, char kind) {
    char& cell = r.diag[static_cast<std::size_t>(cy) * r.w2 + cx];
    if (cell != 0 && cell != kind)
        throw SplitError("crossing diagonal segments through refined cell (" +
                         std::to_string(cx) + "," + std::to_string(cy) + ")");
    cell = kind;
}

Raster rasterize(const SegmentSet& segments, Rect rect) {
    Raster r;
    r.w2 = 2 * rect.width;
    r.h2 = 2 * rect.height;
    r.hbar.assign(static_cast<std::size_t>(r.w2) * (r.h2 + 1), 0);
    r.vbar.assign(static_cast<std::size_t>(r.w2 + 1) * r.h2, 0);
    r.diag.assign(static_cast<std::size_t>(r.w2) * r.h2, 0);

    for (const Segment& s : segments) {
        if (s.a.x < 0 || s.b.x > rect.width || s.a.y < 0 || s.a.y > rect.height || s.b.y < 0 ||
            s.b.y > rect.height)
            throw SplitError("segment " + point_str(s.a) + "-" + point_str(s.b) +
                             " leaves the rectangle");
        if (s.kind == SegmentKind::Axis) {
            if (s.a.y == s.b.y) {
                for (int k = 0; k < 4; ++k) r.hbar[static_cast<std::size_t>(2 * s.a.y) * r.w2 + 2 * s.a.x + k] = 1;
            } else {
                for (int k = 0; k < 4; ++k)
                    r.vbar[static_cast<std::size_t>(2 * s.a.y + k) * (r.w2 + 1) + 2 * s.a.x] = 1;
            }
        } else if (s.b.y > s.a.y) {
            // rising diagonal: main-diagonal cuts
            set_diag(r, 2 * s.a.x, 2 * s.a.y, 1);
            set_diag(r, 2 * s.a.x + 1, 2 * s.a.y + 1, 1);
        } else {
            // falling diagonal: anti-diagonal cuts
            set_diag(r, 2 * s.a.x, 2 * s.a.y - 1, 2);
            set_diag(r, 2 * s.a.x + 1, 2 * s.a.y - 2, 2);
        }
    }
    return r;
}

std::vector<Point> trace_face(const Raster& r, const std::vector<int>& face_of, int face,
                              const std::vector<std::size_t>& members) {
    // Boundary edges keyed by start point; a face of a valid splitting is
    // simply connected, so each start point owns exactly one outgoing edge.
    std::map<Point, Point> next;
    for (std::size_t id : members) {
        int cell = static_cast<int>(id / 4), q = static_cast<int>(id % 4);
        int cx = cell % r.w2, cy = cell / r.w2;
        Point edges[3][2];
        atom_edges(cx, cy, q, edges);
        for (int e = 0; e < 3; ++e) {
            std::size_t nb = r.neighbor(cx, cy, q, e);
            if (nb != kNone && face_of[nb] == face) continue;
            if (!next.emplace(edges[e][0], edges[e][1]).second)
                throw SplitError("face boundary pinches at a vertex; segments do not form a splitting");
        }
    }

    std::vector<Point> loop;
    Point start = next.begin()->first;
    Point cur = start;
    do {
        loop.push_back(cur);
        auto it = next.find(cur);
        if (it == next.end())
            throw SplitError("face boundary is not closed; segments do not form a splitting");
        cur = it->second;
        next.erase(it);
    } while (cur != start);
    if (!next.empty())
        throw SplitError("face has multiple boundary loops; segments do not form a splitting");

    // Merge collinear runs (the trace walks in unit steps).
    std::vector<Point> merged;
    const std::size_t len = loop.size();
    for (std::size_t i = 0; i < len; ++i) {
        Point prev = loop[(i + len - 1) % len], here = loop[i], nxt = loop[(i + 1) % len];
        if (orient(prev, here, nxt) != 0) merged.push_back(here);
    }
    return merged;
}

}  // namespace

std::vector<Chunk> split(const SegmentSet& segments, Rect rect) {
    if (rect.width < 1 || rect.height < 1)
        throw std::invalid_argument("rectangle sides must be nonzero");

    std::vector<Segment> list(segments.begin(), segments.end());
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
            if (segments_conflict(list[i], list[j]))
                throw SplitError("segments " + point_str(list[i].a) + "-" + point_str(list[i].b) +
                                 " and " + point_str(list[j].a) + "-" + point_str(list[j].b) +
                                 " intersect away from shared endpoints");

    Raster r = rasterize(segments, rect);

    std::vector<int> face_of(r.atom_count(), -1);
    int faces = 0;
    std::vector<std::size_t> stack;
    for (std::size_t seed = 0; seed < r.atom_count(); ++seed) {
        if (face_of[seed] != -1) continue;
        int face = faces++;
        face_of[seed] = face;
        stack.assign(1, seed);
        while (!stack.empty()) {
            std::size_t id = stack.back();
            stack.pop_back();
            int cell = static_cast<int>(id / 4), q = static_cast<int>(id % 4);
            int cx = cell % r.w2, cy = cell / r.w2;
            for (int e = 0; e < 3; ++e) {
                std::size_t nb = r.neighbor(cx, cy, q, e);
                if (nb != kNone && face_of[nb] == -1) {
                    face_of[nb] = face;
                    stack.push_back(nb);
                }
            }
        }
    }

    std::vector<std::vector<std::size_t>> members(faces);
    for (std::size_t id = 0; id < r.atom_count(); ++id)
        members[face_of[id]].push_back(id);

    std::vector<Chunk> chunks;
    chunks.reserve(faces);
    for (int f = 0; f < faces; ++f) {
        std::vector<Point> poly4 = trace_face(r, face_of, f, members[f]);
        std::vector<Point> poly;
        poly.reserve(poly4.size());
        for (Point p : poly4) {
            if (p.x % 4 != 0 || p.y % 4 != 0)
                throw SplitError("chunk vertex at non-integral point (" + std::to_string(p.x) +
                                 "/4," + std::to_string(p.y) + "/4)");
            poly.push_back({p.x / 4, p.y / 4});
        }
        chunks.push_back(canonical_chunk(std::move(poly)));
    }
    std::sort(chunks.begin(), chunks.end(),
              [](const Chunk& a, const Chunk& b) { return a.vertices < b.vertices; });
    return chunks;
}

}  // namespace harmtile
