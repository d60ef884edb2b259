#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Dense bit-packed linear algebra over GF(2). Everything is exact and
// deterministic: elimination always picks the leftmost pivot, and
// nullspace_basis returns the reduced-row-echelon-form basis (one vector
// per free column, free columns in increasing order) so results are stable
// across runs and platforms.

namespace harmtile::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

    static Gf2Vector from_bits(const std::vector<int>& bits);

    std::size_t len() const { return len_; }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }

    void set(std::size_t i, bool value) {
        Word mask = Word(1) << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }

    bool is_zero() const;
    std::size_t popcount() const;

    // Index of the lowest set bit, or len() if the vector is zero.
    std::size_t first_set() const;

    Gf2Vector& operator^=(const Gf2Vector& other);

    friend bool operator==(const Gf2Vector& a, const Gf2Vector& b) {
        return a.len_ == b.len_ && a.words_ == b.words_;
    }

    const std::vector<Word>& words() const { return words_; }

    std::string to_string() const;  // "0101...", index 0 first

private:
    std::size_t len_ = 0;
    std::vector<Word> words_;

    friend class Gf2Matrix;
};

// Coordinate-wise XOR; lengths must agree.
Gf2Vector add(const Gf2Vector& u, const Gf2Vector& v);

class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool value) {
        Word mask = Word(1) << (c % kWordBits);
        if (value)
            data_[r * stride_ + c / kWordBits] |= mask;
        else
            data_[r * stride_ + c / kWordBits] &= ~mask;
    }

    Gf2Vector row(std::size_t r) const;
    void set_row(std::size_t r, const Gf2Vector& v);

    Gf2Matrix transposed() const;

    static Gf2Matrix from_rows(const std::vector<Gf2Vector>& rows, std::size_t cols);

    friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

// result_i = XOR_j M[i][j] * v[j]; throws std::invalid_argument naming both
// dimensions if v.len() != M.cols().
Gf2Vector matvec(const Gf2Matrix& m, const Gf2Vector& v);

// Row rank by forward elimination with leftmost-pivot selection.
std::size_t rank(const Gf2Matrix& m);

// Canonical kernel basis from the reduced row echelon form: one vector per
// free column (increasing), with a 1 in its free column and back-substituted
// entries in the pivot columns. Empty for injective matrices.
std::vector<Gf2Vector> nullspace_basis(const Gf2Matrix& m);

// Incremental row-space, kept in reduced echelon form. Used for span
// membership and span-equality checks.
class RowBasis {
public:
    explicit RowBasis(std::size_t cols) : cols_(cols) {}

    // Inserts v into the span; returns true if it was independent.
    bool insert(Gf2Vector v);

    bool contains(Gf2Vector v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

private:
    std::size_t cols_;
    std::vector<Gf2Vector> rows_;      // echelon rows
    std::vector<std::size_t> pivots_;  // pivot column of each row

    // Reduces v against the stored rows; afterwards v is zero iff it was in
    // the span.
    void reduce(Gf2Vector& v) const;
};

// True iff the two lists of length-`len` vectors span the same subspace.
bool same_span(const std::vector<Gf2Vector>& a, const std::vector<Gf2Vector>& b, std::size_t len);

}  // namespace harmtile::gf2
