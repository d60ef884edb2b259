// Acceptance suite: one line per criterion, nonzero exit on any failure.
// All arithmetic is exact; the only tolerances are the stated time budgets.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "harmtile/count.hpp"
#include "harmtile/json_io.hpp"

using namespace harmtile;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, double seconds,
            const std::string& detail = "") {
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << name << "  (" << seconds << " s)";
    if (!ok && !detail.empty()) line << "  -- " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

// Geometric identity of a tiling, ignoring the polarity tag; used for
// cross-polarity distinctness.
std::string geometric_key(const Tiling& t) {
    Tiling copy = t;
    copy.color = Color::Black;
    return tiling_key(copy);
}

void criterion_1_enumerate_10x4() {
    Timer timer;
    std::string detail;
    bool ok = true;
    try {
        std::vector<Tiling> tilings = enumerate_tilings(10, 4);
        ok = tilings.size() == 10;
        if (!ok) detail = "expected 10 tilings, got " + std::to_string(tilings.size());

        int white = 0, black = 0;
        std::set<std::string> keys;
        for (const Tiling& t : tilings) {
            (t.color == Color::White ? white : black) += 1;
            if (!validate_tiling(t).ok) {
                ok = false;
                detail = "invalid tiling in enumeration";
            }
            if (!keys.insert(tiling_key(t)).second) {
                ok = false;
                detail = "duplicate tiling";
            }
        }
        if (white != 3 || black != 7) {
            ok = false;
            detail = "expected 3 white + 7 black, got " + std::to_string(white) + " + " +
                     std::to_string(black);
        }
        // Additive closure among the white images: the third is the sum of
        // the first two.
        PolarizedVector sum = psi(tilings[0]);
        sum ^= psi(tilings[1]);
        if (!(psi(tilings[2]) == sum)) {
            ok = false;
            detail = "third white tiling is not the sum of the first two";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double t = timer.seconds();
    if (t >= 1.0) {
        ok = false;
        detail += " (over 1 s budget)";
    }
    report(1, "10x4 enumeration: 10 distinct valid tilings, 3 white + 7 black, additive", ok, t,
           detail);
}

void criterion_2_counts_vs_elimination() {
    Timer timer;
    bool ok = true;
    std::string detail;
    for (int p = 1; p <= 30 && ok; ++p) {
        for (int q = p; q <= 30 && ok; ++q) {
            GridGraph g(p + 1, q + 1);
            gf2::Gf2Matrix bw = g.build_bw();
            gf2::Gf2Matrix wb = g.build_wb();
            BigCount by_nullity = (BigCount(1) << (bw.cols() - gf2::rank(bw))) +
                                  (BigCount(1) << (wb.cols() - gf2::rank(wb))) - 2;
            if (count_tilings(p, q) != by_nullity) {
                ok = false;
                detail = "mismatch at " + std::to_string(p) + "x" + std::to_string(q);
            }
        }
    }
    double t = timer.seconds();
    if (t >= 60.0) {
        ok = false;
        detail += " (over 60 s budget)";
    }
    report(2, "closed-form count equals elimination nullities for all sides <= 30", ok, t, detail);
}

void criterion_3_square_sweep() {
    Timer timer;
    bool ok = true;
    std::string detail;
    for (int c = 1; c <= 64 && ok; ++c) {
        KernelDims dims = square_kernel_dims_elimination(c);
        if (2 * dims.beta != c + c % 2 || 2 * dims.omega != c - c % 2) {
            ok = false;
            detail = "square dimension law fails at c=" + std::to_string(c);
        }
    }
    double t = timer.seconds();
    if (t >= 60.0) {
        ok = false;
        detail += " (over 60 s budget)";
    }
    report(3, "square kernels obey 2*beta = c + (c mod 2), 2*omega = c - (c mod 2) for c <= 64",
           ok, t, detail);
}

void criterion_4_bijection_suite() {
    Timer timer;
    bool ok = true;
    std::string detail;
    for (int p = 1; p <= 12 && ok; ++p) {
        for (int q = p; q <= 12 && ok; ++q) {
            CountBreakdown expected = count_breakdown(p, q);
            if (expected.beta > 10 || expected.omega > 10) continue;
            GridGraph g(p + 1, q + 1);
            std::set<std::string> geometric;
            BigCount total = 0;
            for (Color polarity : {Color::White, Color::Black}) {
                BijectionReport r = verify_bijection(g, polarity, 10);
                if (!r.ok) {
                    ok = false;
                    detail = std::to_string(p) + "x" + std::to_string(q) + ": " +
                             r.failures.front();
                    break;
                }
                total += r.distinct_tilings;
            }
            if (!ok) break;
            if (total != expected.count) {
                ok = false;
                detail = std::to_string(p) + "x" + std::to_string(q) + ": enumerated " +
                         total.str() + " of " + expected.count.str();
            }
            // Cross-polarity distinctness of the geometric tile sets.
            for (const Tiling& t : enumerate_tilings(p, q, 10))
                if (!geometric.insert(geometric_key(t)).second) {
                    ok = false;
                    detail = std::to_string(p) + "x" + std::to_string(q) +
                             ": tilings of both polarities coincide";
                }
        }
    }
    double t = timer.seconds();
    if (t >= 120.0) {
        ok = false;
        detail += " (over 120 s budget)";
    }
    report(4, "round trip psi(phi(u)) == u, distinct valid tilings, total classification, "
              "sides <= 12", ok, t, detail);
}

void criterion_5_symmetry_suite() {
    Timer timer;
    bool ok = true;
    std::string detail;
    for (int p = 1; p <= 30 && ok; ++p) {
        for (int q = p; q <= 30 && ok; ++q) {
            GridGraph g(p + 1, q + 1);
            for (Color polarity : {Color::Black, Color::White}) {
                std::vector<PolarizedVector> vectors = kernel_basis_elimination(g, polarity);
                for (auto& v : kernel_basis_transfer(g, polarity)) vectors.push_back(std::move(v));
                for (auto& v : kernel_basis_structured(g, polarity))
                    vectors.push_back(std::move(v));
                for (const PolarizedVector& v : vectors) {
                    if (!is_harmonic(v)) {
                        ok = false;
                        detail = "nonzero residual at " + std::to_string(p) + "x" +
                                 std::to_string(q);
                        break;
                    }
                    if (!check_symmetries(v).all_ok()) {
                        ok = false;
                        detail = "symmetry violation at " + std::to_string(p) + "x" +
                                 std::to_string(q);
                        break;
                    }
                }
                if (!ok) break;
            }
        }
    }
    report(5, "diagonal, grid-zero and mirror symmetries hold for every basis vector, sides <= 30",
           ok, timer.seconds(), detail);
}

void criterion_6_method_agreement() {
    Timer timer;
    bool ok = true;
    std::string detail;
    for (int p = 1; p <= 30 && ok; ++p) {
        for (int q = p; q <= 30 && ok; ++q) {
            GridGraph g(p + 1, q + 1);
            for (Color polarity : {Color::Black, Color::White}) {
                std::vector<gf2::Gf2Vector> e, tr, st;
                for (const auto& v : kernel_basis_elimination(g, polarity))
                    e.push_back(v.to_compact());
                for (const auto& v : kernel_basis_transfer(g, polarity))
                    tr.push_back(v.to_compact());
                for (const auto& v : kernel_basis_structured(g, polarity))
                    st.push_back(v.to_compact());
                std::size_t len = g.num_for(polarity);
                if (!gf2::same_span(e, tr, len) || !gf2::same_span(e, st, len)) {
                    ok = false;
                    detail = "spans disagree at " + std::to_string(p) + "x" + std::to_string(q);
                    break;
                }
            }
        }
    }
    report(6, "elimination, transfer and structured bases span identical kernels, sides <= 30",
           ok, timer.seconds(), detail);
}

void criterion_7_transfer_at_scale() {
    Timer timer;
    bool ok = true;
    std::string detail;
    try {
        GridGraph g(999, 999);
        KernelDims dims = kernel_dims_transfer(g);
        KernelDims expected = kernel_dims_closed_form(999, 999);
        if (!(dims == expected)) {
            ok = false;
            detail = "transfer dims (" + std::to_string(dims.beta) + "," +
                     std::to_string(dims.omega) + ") vs closed form (" +
                     std::to_string(expected.beta) + "," + std::to_string(expected.omega) + ")";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double t = timer.seconds();
    if (t >= 5.0) {
        ok = false;
        detail += " (over 5 s budget)";
    }
    report(7, "transfer kernel dimensions of the 999x999 graph match the closed form", ok, t,
           detail);
}

void criterion_8_desk_cases() {
    Timer timer;
    bool ok = true;
    std::string detail;
    try {
        if (count_tilings(1, 1) != 2) {
            ok = false;
            detail = "count(1,1) != 2";
        }
        std::vector<Tiling> unit = enumerate_tilings(1, 1);
        // The two diagonal cuts: anti-diagonal (white) and main diagonal
        // (black), each two corner triangles.
        std::set<std::string> keys;
        for (const Tiling& t : unit) {
            if (t.tiles.size() != 2 || t.tiles[0].cls != TileClass::Triangle ||
                t.tiles[1].cls != TileClass::Triangle) {
                ok = false;
                detail = "unit square tiling is not a diagonal cut";
            }
            keys.insert(geometric_key(t));
        }
        if (keys.size() != 2) {
            ok = false;
            detail = "the two unit-square cuts coincide";
        }

        if (count_tilings(1, 2) != 0 || !enumerate_tilings(1, 2).empty()) {
            ok = false;
            detail = "count(1,2) != 0";
        }

        std::vector<Tiling> square22 = enumerate_tilings(2, 2);
        bool found_white = false;
        for (const Tiling& t : square22) {
            if (t.color != Color::White) continue;
            found_white = true;
            int tilted = 0, triangles = 0;
            for (const Tile& tile : t.tiles) {
                tilted += tile.cls == TileClass::TiltedSquare;
                triangles += tile.cls == TileClass::Triangle;
            }
            if (t.tiles.size() != 5 || tilted != 1 || triangles != 4) {
                ok = false;
                detail = "white 2x2 tiling is not tilted square + 4 triangles";
            }
        }
        if (!found_white) {
            ok = false;
            detail = "no white tiling of the 2x2 square";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(8, "desk cases: 1x1 has the two diagonal cuts, 1x2 none, white 2x2 is the tilted square",
           ok, timer.seconds(), detail);
}

}  // namespace

int main() {
    std::cout << "acceptance suite (exact arithmetic; budgets shown per criterion)\n";
    criterion_1_enumerate_10x4();
    criterion_2_counts_vs_elimination();
    criterion_3_square_sweep();
    criterion_4_bijection_suite();
    criterion_5_symmetry_suite();
    criterion_6_method_agreement();
    criterion_7_transfer_at_scale();
    criterion_8_desk_cases();

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
