#include "harmtile/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace harmtile::gf2 {

Gf2Vector Gf2Vector::from_bits(const std::vector<int>& bits) {
    Gf2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) v.set(i, true);
    return v;
}

bool Gf2Vector::is_zero() const {
    for (Word w : words_)
        if (w) return false;
    return true;
}

std::size_t Gf2Vector::popcount() const {
    std::size_t count = 0;
    for (Word w : words_) count += std::popcount(w);
    return count;
}

std::size_t Gf2Vector::first_set() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
        if (words_[wi]) return wi * kWordBits + std::countr_zero(words_[wi]);
    return len_;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
    if (len_ != other.len_)
        throw std::invalid_argument("gf2 vector length mismatch: " + std::to_string(len_) +
                                    " vs " + std::to_string(other.len_));
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::string Gf2Vector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

Gf2Vector add(const Gf2Vector& u, const Gf2Vector& v) {
    Gf2Vector r = u;
    r ^= v;
    return r;
}

Gf2Vector Gf2Matrix::row(std::size_t r) const {
    Gf2Vector v(cols_);
    for (std::size_t w = 0; w < stride_; ++w) v.words_[w] = data_[r * stride_ + w];
    return v;
}

void Gf2Matrix::set_row(std::size_t r, const Gf2Vector& v) {
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, v.get(c));
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<Gf2Vector>& rows, std::size_t cols) {
    Gf2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].len() != cols)
            throw std::invalid_argument("row length " + std::to_string(rows[r].len()) +
                                        " does not match cols " + std::to_string(cols));
        m.set_row(r, rows[r]);
    }
    return m;
}

Gf2Vector matvec(const Gf2Matrix& m, const Gf2Vector& v) {
    if (v.len() != m.cols())
        throw std::invalid_argument("matvec dimension mismatch: matrix has " +
                                    std::to_string(m.cols()) + " cols, vector has length " +
                                    std::to_string(v.len()));
    Gf2Vector result(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Word acc = 0;
        // Parity of the AND of packed words.
        Gf2Vector row = m.row(r);
        const auto& rw = row.words();
        const auto& vw = v.words();
        for (std::size_t i = 0; i < rw.size(); ++i) acc ^= rw[i] & vw[i];
        if (std::popcount(acc) & 1u) result.set(r, true);
    }
    return result;
}

namespace {

// Reduced row echelon form in place over packed rows; returns pivot columns
// in increasing order. Leftmost-pivot selection keeps the result canonical.
std::vector<std::size_t> rref(std::vector<Gf2Vector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < cols && next_row < rows.size(); ++c) {
        std::size_t pivot_row = rows.size();
        for (std::size_t r = next_row; r < rows.size(); ++r) {
            if (rows[r].get(c)) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row == rows.size()) continue;
        std::swap(rows[next_row], rows[pivot_row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next_row && rows[r].get(c)) rows[r] ^= rows[next_row];
        }
        pivots.push_back(c);
        ++next_row;
    }
    return pivots;
}

std::vector<Gf2Vector> matrix_rows(const Gf2Matrix& m) {
    std::vector<Gf2Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rows;
}

}  // namespace

std::size_t rank(const Gf2Matrix& m) {
    auto rows = matrix_rows(m);
    return rref(rows, m.cols()).size();
}

std::vector<Gf2Vector> nullspace_basis(const Gf2Matrix& m) {
    auto rows = matrix_rows(m);
    auto pivots = rref(rows, m.cols());

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<Gf2Vector> basis;
    basis.reserve(m.cols() - pivots.size());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Gf2Vector v(m.cols());
        v.set(f, true);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (rows[k].get(f)) v.set(pivots[k], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

void RowBasis::reduce(Gf2Vector& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k)
        if (v.get(pivots_[k])) v ^= rows_[k];
}

bool RowBasis::insert(Gf2Vector v) {
    if (v.len() != cols_)
        throw std::invalid_argument("RowBasis length mismatch: " + std::to_string(v.len()) +
                                    " vs " + std::to_string(cols_));
    reduce(v);
    std::size_t pivot = v.first_set();
    if (pivot == v.len()) return false;
    // Keep reduced form: clear this pivot from existing rows.
    for (std::size_t k = 0; k < rows_.size(); ++k)
        if (rows_[k].get(pivot)) rows_[k] ^= v;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool RowBasis::contains(Gf2Vector v) const {
    if (v.len() != cols_)
        throw std::invalid_argument("RowBasis length mismatch: " + std::to_string(v.len()) +
                                    " vs " + std::to_string(cols_));
    reduce(v);
    return v.is_zero();
}

bool same_span(const std::vector<Gf2Vector>& a, const std::vector<Gf2Vector>& b, std::size_t len) {
    RowBasis basis_a(len);
    for (const auto& v : a) basis_a.insert(v);
    RowBasis basis_b(len);
    for (const auto& v : b) basis_b.insert(v);
    if (basis_a.rank() != basis_b.rank()) return false;
    for (const auto& v : a)
        if (!basis_b.contains(v)) return false;
    for (const auto& v : b)
        if (!basis_a.contains(v)) return false;
    return true;
}

}  // namespace harmtile::gf2
