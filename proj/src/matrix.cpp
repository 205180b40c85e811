#include "summand/matrix.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "summand/errors.hpp"
#include "summand/kernels.hpp"

namespace summand {

Matrix Matrix::identity(std::size_t n, Fp fp) {
    Matrix m(n, n, fp);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(
    Fp fp, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c, fp);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw ValidationError("ragged matrix literal");
        std::size_t j = 0;
        for (std::int64_t v : row) m(i, j++) = fp.reduce(v);
        ++i;
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, fp_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::uint32_t Matrix::trace() const {
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        t = fp_.add(t, (*this)(i, i));
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (!same_shape(o) || !(fp_ == o.fp_))
        throw ValidationError("matrix shape/field mismatch in addition");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = fp_.add(a_[i], o.a_[i]);
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (!same_shape(o) || !(fp_ == o.fp_))
        throw ValidationError("matrix shape/field mismatch in subtraction");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = fp_.sub(a_[i], o.a_[i]);
    return *this;
}

Matrix Matrix::scaled(std::uint32_t c) const {
    Matrix m = *this;
    for (std::size_t i = 0; i < m.rows_; ++i)
        kern::scale(m.row(i), m.cols_, c, fp_.p());
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || !(a.fp_ == b.fp_))
        throw ValidationError("matrix shape/field mismatch in product");
    Matrix c(a.rows_, b.cols_, a.fp_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (std::uint32_t f = a(i, k))
                kern::axpy(c.row(i), b.row(k), b.cols_, f, a.fp_.p());
    return c;
}

Matrix Matrix::pow(std::uint64_t e) const {
    if (!is_square()) throw ValidationError("pow of non-square matrix");
    Matrix r = identity(rows_, fp_);
    Matrix base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols() || !(top.field() == bottom.field()))
        throw ValidationError("vstack width/field mismatch");
    Matrix m(top.rows() + bottom.rows(), top.cols(), top.field());
    for (std::size_t i = 0; i < top.rows(); ++i)
        std::copy_n(top.row(i), top.cols(), m.row(i));
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        std::copy_n(bottom.row(i), bottom.cols(), m.row(top.rows() + i));
    return m;
}

RrefResult rref(Matrix m) {
    const Fp fp = m.field();
    const std::uint32_t p = fp.p();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            std::swap_ranges(m.row(r), m.row(r) + m.cols(), m.row(pr));
        if (m(r, c) != 1)
            kern::scale(m.row(r), m.cols(), fp.inv(m(r, c)), p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            if (std::uint32_t f = m(i, c))
                kern::axpy(m.row(i), m.row(r), m.cols(), p - f, p);
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(m), std::move(pivots), r};
}

std::size_t rank_of(const Matrix& m) { return rref(m).rank; }

Matrix row_space(const Matrix& m) {
    RrefResult r = rref(m);
    Matrix basis(r.rank, m.cols(), m.field());
    for (std::size_t i = 0; i < r.rank; ++i)
        std::copy_n(r.mat.row(i), m.cols(), basis.row(i));
    return basis;
}

Matrix left_kernel(const Matrix& m) { return kernel_basis(m.transpose()); }

Matrix kernel_basis(const Matrix& m) {
    const Fp fp = m.field();
    RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;

    Matrix basis(n - r.rank, n, fp);
    std::size_t k = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        basis(k, c) = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            basis(k, r.pivots[i]) = fp.neg(r.mat(i, c));
        ++k;
    }
    return basis;
}

Matrix image_basis(const Matrix& m) { return row_space(m.transpose()); }

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || !(a.field() == b.field()))
        throw ValidationError("solve_linear: a.rows != b.rows");
    RrefResult r = rref(vstack(a.transpose(), b.transpose()).transpose());
    // pivots landing in the b block mean the system is inconsistent
    for (std::size_t c : r.pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols(), a.field());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(r.pivots[i], j) = r.mat(i, a.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    // m x = I is solvable iff m has full rank, and then x is two-sided
    return solve_linear(m, Matrix::identity(m.rows(), m.field()));
}

bool is_invertible(const Matrix& m) {
    return m.is_square() && rank_of(m) == m.rows();
}

bool is_nilpotent(const Matrix& m) {
    if (!m.is_square()) throw ValidationError("is_nilpotent: non-square");
    if (m.rows() == 0) return true;
    Matrix s = m;
    std::size_t covered = 1;
    while (covered < m.rows()) {
        if (s.is_zero()) return true;
        s = s * s;
        covered *= 2;
    }
    return s.is_zero();
}

bool in_row_space(const Matrix& rref_basis, std::span<const std::uint32_t> v) {
    const Fp fp = rref_basis.field();
    const std::uint32_t p = fp.p();
    std::vector<std::uint32_t> w(v.begin(), v.end());
    for (std::size_t i = 0; i < rref_basis.rows(); ++i) {
        const std::uint32_t* row = rref_basis.row(i);
        std::size_t pc = 0;
        while (pc < rref_basis.cols() && row[pc] == 0) ++pc;
        if (pc == rref_basis.cols()) continue;
        if (std::uint32_t f = w[pc])
            kern::axpy(w.data(), row, w.size(), p - f, p);
    }
    return std::all_of(w.begin(), w.end(),
                       [](std::uint32_t x) { return x == 0; });
}

bool row_space_contained(const Matrix& rref_sub, const Matrix& rref_super) {
    for (std::size_t i = 0; i < rref_sub.rows(); ++i)
        if (!in_row_space(rref_super, rref_sub.row_span(i))) return false;
    return true;
}

}  // namespace summand
