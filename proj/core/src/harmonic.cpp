#include "harmtile/harmonic.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace harmtile {

namespace {

using gf2::Gf2Vector;
using gf2::Word;
using gf2::kWordBits;

std::string point_str(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

int parity_of(Color c) { return c == Color::Black ? 0 : 1; }

// Count of rows j in 0..n-1 whose column-x point has the given color.
int rows_of_color(int n, int x, Color c) {
    int want = (parity_of(c) + x) % 2;  // j parity
    return want == 0 ? (n + 1) / 2 : n / 2;
}

}  // namespace

void PolarizedVector::set(int x, int y, bool value) {
    if (x < 0 || x >= m_ || y < 0 || y >= n_)
        throw std::out_of_range("point " + point_str({x, y}) + " outside " + std::to_string(m_) +
                                "x" + std::to_string(n_) + " graph");
    if (value && color_of({x, y}) != polarity_)
        throw std::invalid_argument("point " + point_str({x, y}) +
                                    " has the wrong color for this polarity");
    values_.set(static_cast<std::size_t>(y) * m_ + x, value);
}

PolarizedVector& PolarizedVector::operator^=(const PolarizedVector& other) {
    if (m_ != other.m_ || n_ != other.n_ || polarity_ != other.polarity_)
        throw std::invalid_argument("polarized vectors differ in dims or polarity");
    values_ ^= other.values_;
    return *this;
}

gf2::Gf2Vector PolarizedVector::to_compact() const {
    int total = (polarity_ == Color::Black) ? (m_ * n_ + 1) / 2 : m_ * n_ / 2;
    Gf2Vector compact(total);
    int ordinal = 0;
    for (int y = 0; y < n_; ++y) {
        for (int x = 0; x < m_; ++x) {
            if (color_of({x, y}) != polarity_) continue;
            if (get(x, y)) compact.set(ordinal, true);
            ++ordinal;
        }
    }
    return compact;
}

PolarizedVector PolarizedVector::from_compact(int m, int n, Color polarity,
                                              const gf2::Gf2Vector& v) {
    int total = (polarity == Color::Black) ? (m * n + 1) / 2 : m * n / 2;
    if (static_cast<int>(v.len()) != total)
        throw std::invalid_argument("compact vector length " + std::to_string(v.len()) +
                                    " does not match color class size " + std::to_string(total));
    PolarizedVector result(m, n, polarity);
    int ordinal = 0;
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < m; ++x) {
            if (color_of({x, y}) != polarity) continue;
            if (v.get(ordinal)) result.set(x, y, true);
            ++ordinal;
        }
    }
    return result;
}

PolarizedVector laplacian_residual(const PolarizedVector& v) {
    const int m = v.m(), n = v.n();
    PolarizedVector sigma(m, n, opposite(v.polarity()));
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < m; ++x) {
            if (color_of({x, y}) != sigma.polarity()) continue;
            bool s = false;
            if (x + 1 < m) s ^= v.get(x + 1, y);
            if (x - 1 >= 0) s ^= v.get(x - 1, y);
            if (y + 1 < n) s ^= v.get(x, y + 1);
            if (y - 1 >= 0) s ^= v.get(x, y - 1);
            if (s) sigma.set(x, y, true);
        }
    }
    return sigma;
}

KernelDims kernel_dims_closed_form(int m, int n) {
    if (m < 2 || n < 2)
        throw std::invalid_argument("kernel dims need m, n >= 2, got " + std::to_string(m) + "x" +
                                    std::to_string(n));
    int c = std::gcd(m + 1, n + 1) - 1;
    return {(c + c % 2) / 2, (c - c % 2) / 2};
}

namespace {

std::vector<PolarizedVector> lift_basis(int m, int n, Color polarity,
                                        const std::vector<Gf2Vector>& basis) {
    std::vector<PolarizedVector> lifted;
    lifted.reserve(basis.size());
    for (const auto& v : basis) lifted.push_back(PolarizedVector::from_compact(m, n, polarity, v));
    return lifted;
}

std::vector<PolarizedVector> kernel_basis_raw(int m, int n, Color polarity) {
    gf2::Gf2Matrix a = (polarity == Color::Black) ? adjacency_bw(m, n) : adjacency_wb(m, n);
    return lift_basis(m, n, polarity, nullspace_basis(a));
}

}  // namespace

std::vector<PolarizedVector> kernel_basis_elimination(const GridGraph& g, Color polarity) {
    return kernel_basis_raw(g.m(), g.n(), polarity);
}

std::vector<PolarizedVector> square_kernel_basis(int c, Color polarity) {
    if (c < 1) throw std::invalid_argument("square kernel needs c >= 1");
    return kernel_basis_raw(c, c, polarity);
}

KernelDims square_kernel_dims_elimination(int c) {
    if (c < 1) throw std::invalid_argument("square kernel needs c >= 1");
    gf2::Gf2Matrix bw = adjacency_bw(c, c);
    gf2::Gf2Matrix wb = adjacency_wb(c, c);
    return {static_cast<int>(bw.cols() - gf2::rank(bw)),
            static_cast<int>(wb.cols() - gf2::rank(wb))};
}

namespace {

// One transfer step on a packed column of n bits (bit j = row j):
// next[j] = prev[j] + cur[j-1] + cur[j+1].
void column_step(const std::vector<Word>& prev, const std::vector<Word>& cur,
                 std::vector<Word>& next, int n) {
    const std::size_t nw = prev.size();
    for (std::size_t i = 0; i < nw; ++i) {
        Word up = (cur[i] << 1) | (i > 0 ? cur[i - 1] >> (kWordBits - 1) : Word(0));
        Word down = (cur[i] >> 1) | (i + 1 < nw ? cur[i + 1] << (kWordBits - 1) : Word(0));
        next[i] = prev[i] ^ up ^ down;
    }
    if (n % kWordBits) next.back() &= (Word(1) << (n % kWordBits)) - 1;
}

}  // namespace

Propagation propagate_first_column(const gf2::Gf2Vector& seed, const GridGraph& g,
                                   Color polarity) {
    const int m = g.m(), n = g.n();
    if (static_cast<int>(seed.len()) != n)
        throw std::invalid_argument("seed length " + std::to_string(seed.len()) +
                                    " does not match graph height " + std::to_string(n));
    for (int j = 0; j < n; ++j)
        if (seed.get(j) && color_of({0, j}) != polarity)
            throw std::invalid_argument("seed supported off-polarity at row " + std::to_string(j));

    Propagation result{false, PolarizedVector(m, n, polarity), {}};

    const std::size_t nw = gf2::words_for(n);
    std::vector<Word> prev(nw, 0), cur(seed.words()), next(nw, 0);
    cur.resize(nw, 0);

    auto store_column = [&](int x, const std::vector<Word>& col) {
        for (int j = 0; j < n; ++j)
            if ((col[j / kWordBits] >> (j % kWordBits)) & 1u) result.vector.set(x, j, true);
    };
    store_column(0, cur);
    for (int x = 0; x + 1 < m; ++x) {
        column_step(prev, cur, next, n);
        store_column(x + 1, next);
        std::swap(prev, cur);
        std::swap(cur, next);
    }

    // Leftover constraints sit at the opposite-color points of column m-1.
    const auto& v = result.vector;
    for (int j = 0; j < n; ++j) {
        if (color_of({m - 1, j}) == polarity) continue;
        bool s = v.get(m - 2, j);
        if (j - 1 >= 0) s ^= v.get(m - 1, j - 1);
        if (j + 1 < n) s ^= v.get(m - 1, j + 1);
        if (s) result.violated_rows.push_back(j);
    }
    result.consistent = result.violated_rows.empty();
    return result;
}

namespace {

// Propagates all seed unit vectors at once; each row of each column carries a
// mask over the s seed bits. Returns the closure system whose nullspace is
// the admissible seed space.
gf2::Gf2Matrix transfer_closure_matrix(const GridGraph& g, Color polarity, int* seed_count) {
    const int m = g.m(), n = g.n();
    const int s = rows_of_color(n, 0, polarity);
    *seed_count = s;

    const std::size_t ws = gf2::words_for(static_cast<std::size_t>(s));
    std::vector<Word> prev(n * ws, 0), cur(n * ws, 0), next(n * ws, 0);

    int k = 0;
    for (int j = 0; j < n; ++j) {
        if (color_of({0, j}) != polarity) continue;
        cur[j * ws + k / kWordBits] |= Word(1) << (k % kWordBits);
        ++k;
    }

    for (int x = 0; x + 1 < m; ++x) {
        for (int j = 0; j < n; ++j) {
            for (std::size_t w = 0; w < ws; ++w) {
                Word acc = prev[j * ws + w];
                if (j > 0) acc ^= cur[(j - 1) * ws + w];
                if (j + 1 < n) acc ^= cur[(j + 1) * ws + w];
                next[j * ws + w] = acc;
            }
        }
        std::swap(prev, cur);
        std::swap(cur, next);
    }

    // prev is column m-2, cur is column m-1.
    std::vector<Gf2Vector> closure_rows;
    for (int j = 0; j < n; ++j) {
        if (color_of({m - 1, j}) == polarity) continue;
        Gf2Vector row(s);
        for (int bit = 0; bit < s; ++bit) {
            bool b = (prev[j * ws + bit / kWordBits] >> (bit % kWordBits)) & 1u;
            if (j > 0) b ^= (cur[(j - 1) * ws + bit / kWordBits] >> (bit % kWordBits)) & 1u;
            if (j + 1 < n) b ^= (cur[(j + 1) * ws + bit / kWordBits] >> (bit % kWordBits)) & 1u;
            if (b) row.set(bit, true);
        }
        closure_rows.push_back(std::move(row));
    }
    return gf2::Gf2Matrix::from_rows(closure_rows, s);
}

}  // namespace

std::vector<PolarizedVector> kernel_basis_transfer(const GridGraph& g, Color polarity) {
    const int n = g.n();
    int s = 0;
    gf2::Gf2Matrix closure = transfer_closure_matrix(g, polarity, &s);
    std::vector<Gf2Vector> seed_combos = nullspace_basis(closure);

    std::vector<PolarizedVector> basis;
    basis.reserve(seed_combos.size());
    for (const auto& combo : seed_combos) {
        Gf2Vector seed(n);
        int k = 0;
        for (int j = 0; j < n; ++j) {
            if (color_of({0, j}) != polarity) continue;
            if (combo.get(k)) seed.set(j, true);
            ++k;
        }
        Propagation prop = propagate_first_column(seed, g, polarity);
        if (!prop.consistent)
            throw std::logic_error("transfer seed failed closure it was solved to satisfy");
        basis.push_back(std::move(prop.vector));
    }
    return basis;
}

KernelDims kernel_dims_transfer(const GridGraph& g) {
    KernelDims dims;
    int s = 0;
    gf2::Gf2Matrix closure_b = transfer_closure_matrix(g, Color::Black, &s);
    dims.beta = s - static_cast<int>(gf2::rank(closure_b));
    gf2::Gf2Matrix closure_w = transfer_closure_matrix(g, Color::White, &s);
    dims.omega = s - static_cast<int>(gf2::rank(closure_w));
    return dims;
}

std::vector<PolarizedVector> kernel_basis_structured(const GridGraph& g, Color polarity) {
    GridStructure gs = grid_structure(g);
    const int c = gs.c;
    if (c == 0) return {};

    std::vector<PolarizedVector> square_basis = square_kernel_basis(c, polarity);
    std::vector<PolarizedVector> basis;
    basis.reserve(square_basis.size());
    for (const auto& sq : square_basis) {
        PolarizedVector full(g.m(), g.n(), polarity);
        for (const auto& block : gs.squares) {
            // Odd blocks hold the mirror image; parity works out so mirrored
            // values always land on points of the right color.
            for (int ly = 0; ly < c; ++ly) {
                int sy = (block.block_y % 2 == 1) ? c - 1 - ly : ly;
                for (int lx = 0; lx < c; ++lx) {
                    int sx = (block.block_x % 2 == 1) ? c - 1 - lx : lx;
                    if (sq.get(sx, sy)) full.set(block.origin.x + lx, block.origin.y + ly, true);
                }
            }
        }
        basis.push_back(std::move(full));
    }
    return basis;
}

std::vector<Point> SymmetryReport::violations() const {
    std::vector<Point> all = diagonal_violations;
    all.insert(all.end(), grid_violations.begin(), grid_violations.end());
    all.insert(all.end(), mirror_violations.begin(), mirror_violations.end());
    return all;
}

SymmetryReport check_symmetries(const PolarizedVector& v) {
    PolarizedVector residual = laplacian_residual(v);
    if (!residual.is_zero()) {
        for (int y = 0; y < v.n(); ++y)
            for (int x = 0; x < v.m(); ++x)
                if (residual.get(x, y))
                    throw std::invalid_argument(
                        "symmetry checks require a kernel element; residual is nonzero at " +
                        point_str({x, y}));
    }

    const int m = v.m(), n = v.n();
    SymmetryReport report;

    // Diagonal symmetry on the square part shared by (i,j) and (j,i).
    int side = std::min(m, n);
    for (int j = 0; j < side; ++j)
        for (int i = 0; i < j; ++i)
            if (v.get(i, j) != v.get(j, i)) report.diagonal_violations.push_back({i, j});

    GridStructure gs = grid_structure(GridGraph(m, n));
    for (Point p : gs.grid_points)
        if (v.get(p)) report.grid_violations.push_back(p);

    const int c = gs.c;
    if (c > 0) {
        int blocks_x = (m + 1) / (c + 1);
        int blocks_y = (n + 1) / (c + 1);
        // Mirror across each interior vertical grid line...
        for (int bx = 0; bx + 1 < blocks_x; ++bx) {
            int gx = (bx + 1) * (c + 1) - 1;
            for (int by = 0; by < blocks_y; ++by) {
                int y0 = by * (c + 1);
                for (int d = 1; d <= c; ++d)
                    for (int ly = 0; ly < c; ++ly)
                        if (v.get(gx - d, y0 + ly) != v.get(gx + d, y0 + ly))
                            report.mirror_violations.push_back({gx + d, y0 + ly});
            }
        }
        // ...and each interior horizontal one.
        for (int by = 0; by + 1 < blocks_y; ++by) {
            int gy = (by + 1) * (c + 1) - 1;
            for (int bx = 0; bx < blocks_x; ++bx) {
                int x0 = bx * (c + 1);
                for (int d = 1; d <= c; ++d)
                    for (int lx = 0; lx < c; ++lx)
                        if (v.get(x0 + lx, gy - d) != v.get(x0 + lx, gy + d))
                            report.mirror_violations.push_back({x0 + lx, gy + d});
            }
        }
    }

    report.diagonal_ok = report.diagonal_violations.empty();
    report.grid_zero_ok = report.grid_violations.empty();
    report.mirror_ok = report.mirror_violations.empty();
    return report;
}

}  // namespace harmtile
