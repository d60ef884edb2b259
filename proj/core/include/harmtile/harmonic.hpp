#pragma once

#include <vector>

#include "harmtile/gf2.hpp"
#include "harmtile/grid.hpp"

namespace harmtile {

// A GF(2) vector on the m x n graph supported on a single color class,
// addressable by lattice coordinates. Elements of ker BW (black polarity) and
// ker WB (white polarity) are the polarized harmonic functions: at every
// point of the opposite color, the values at its lattice neighbors sum to
// zero mod 2.
class PolarizedVector {
public:
    PolarizedVector(int m, int n, Color polarity)
        : m_(m), n_(n), polarity_(polarity), values_(static_cast<std::size_t>(m) * n) {}

    int m() const { return m_; }
    int n() const { return n_; }
    Color polarity() const { return polarity_; }

    bool get(int x, int y) const { return values_.get(static_cast<std::size_t>(y) * m_ + x); }
    bool get(Point p) const { return get(p.x, p.y); }

    // Setting a point of the opposite color nonzero violates the support
    // invariant and throws.
    void set(int x, int y, bool value);
    void set(Point p, bool value) { set(p.x, p.y, value); }

    bool is_zero() const { return values_.is_zero(); }
    std::size_t active_count() const { return values_.popcount(); }

    PolarizedVector& operator^=(const PolarizedVector& other);

    friend bool operator==(const PolarizedVector& a, const PolarizedVector& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.polarity_ == b.polarity_ &&
               a.values_ == b.values_;
    }

    // Lossless conversion to/from the compact per-color-class coordinates
    // used by the adjacency matrices (scan-order ordinals).
    gf2::Gf2Vector to_compact() const;
    static PolarizedVector from_compact(int m, int n, Color polarity, const gf2::Gf2Vector& v);

private:
    int m_;
    int n_;
    Color polarity_;
    gf2::Gf2Vector values_;
};

// The neighbor-sum residual at every point of the opposite color, with
// out-of-graph terms zero. v is harmonic iff the result is identically zero.
PolarizedVector laplacian_residual(const PolarizedVector& v);

inline bool is_harmonic(const PolarizedVector& v) { return laplacian_residual(v).is_zero(); }

struct KernelDims {
    int beta = 0;   // dim ker BW
    int omega = 0;  // dim ker WB
    friend bool operator==(const KernelDims&, const KernelDims&) = default;
};

// Closed form: with c = gcd(m+1, n+1) - 1, the kernel dimensions are
// beta = (c + (c mod 2)) / 2 and omega = (c - (c mod 2)) / 2.
KernelDims kernel_dims_closed_form(int m, int n);

// Canonical kernel basis via dense elimination on the adjacency matrix.
std::vector<PolarizedVector> kernel_basis_elimination(const GridGraph& g, Color polarity);

// Result of propagating a first-column seed across the graph using the
// harmonic recurrence solved for the east neighbor. On rectangles the
// leftover constraints on the last column may fail; `violated_rows` then
// lists the offending y coordinates.
struct Propagation {
    bool consistent = false;
    PolarizedVector vector;
    std::vector<int> violated_rows;
};

// seed holds one bit per row y of column x = 0 and must be supported on the
// rows whose column-0 point has the requested polarity.
Propagation propagate_first_column(const gf2::Gf2Vector& seed, const GridGraph& g, Color polarity);

// Kernel basis via the first-column transfer method: all seed unit vectors
// are propagated simultaneously in packed words, the closure constraints on
// the last column form a small linear system, and its nullspace gives the
// admissible seeds. Spans the same kernel as elimination without ever
// materializing the adjacency matrix.
std::vector<PolarizedVector> kernel_basis_transfer(const GridGraph& g, Color polarity);

// Dimension-only variant (both polarities) using rolling columns; suitable
// for graphs far beyond elimination range.
KernelDims kernel_dims_transfer(const GridGraph& g);

// Kernel basis assembled from the c x c fundamental-square kernel: zeros on
// the grid lines, and mirrored copies of square kernel elements on each
// fundamental square. Empty when c = 0.
std::vector<PolarizedVector> kernel_basis_structured(const GridGraph& g, Color polarity);

// Kernel basis of the c x c square graph, valid for any c >= 1 (the 1x1
// square is a single black point whose BW matrix is 0 x 1).
std::vector<PolarizedVector> square_kernel_basis(int c, Color polarity);

// Elimination nullities of the c x c square adjacency matrices, c >= 1.
KernelDims square_kernel_dims_elimination(int c);

struct SymmetryReport {
    bool diagonal_ok = false;   // v(i,j) == v(j,i) on the square part
    bool grid_zero_ok = false;  // v vanishes on the grid lines
    bool mirror_ok = false;     // adjacent fundamental squares mirror across grid lines
    std::vector<Point> diagonal_violations;
    std::vector<Point> grid_violations;
    std::vector<Point> mirror_violations;

    bool all_ok() const { return diagonal_ok && grid_zero_ok && mirror_ok; }
    std::vector<Point> violations() const;
};

// Validates the symmetry laws that hold for every kernel element. Refuses
// non-harmonic input (the laws are meaningless there) with
// std::invalid_argument.
SymmetryReport check_symmetries(const PolarizedVector& v);

}  // namespace harmtile
