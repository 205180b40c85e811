#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "summand/fp.hpp"

namespace summand {

// Dense row-major matrix over F_p. All entries are reduced residues sharing
// the matrix's modulus; every operation is exact.
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols, Fp fp)
        : rows_(rows), cols_(cols), fp_(fp), a_(rows * cols, 0) {}

    static Matrix identity(std::size_t n, Fp fp);
    // Entries are reduced mod p on construction; rows must be rectangular.
    static Matrix from_rows(
        Fp fp, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Fp& field() const { return fp_; }
    std::uint32_t p() const { return fp_.p(); }

    std::uint32_t& operator()(std::size_t i, std::size_t j) {
        return a_[i * cols_ + j];
    }
    std::uint32_t operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    std::uint32_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const std::uint32_t* row(std::size_t i) const {
        return a_.data() + i * cols_;
    }
    std::span<const std::uint32_t> row_span(std::size_t i) const {
        return {row(i), cols_};
    }
    const std::vector<std::uint32_t>& data() const { return a_; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool same_shape(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_;
    }

    Matrix transpose() const;
    std::uint32_t trace() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix scaled(std::uint32_t c) const;

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.fp_ == b.fp_ &&
               a.a_ == b.a_;
    }

    // m^e for square m, e >= 0
    Matrix pow(std::uint64_t e) const;

  private:
    std::size_t rows_, cols_;
    Fp fp_;
    std::vector<std::uint32_t> a_;
};

Matrix vstack(const Matrix& top, const Matrix& bottom);

struct RrefResult {
    Matrix mat;                       // the unique reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    std::size_t rank;
};

RrefResult rref(Matrix m);
std::size_t rank_of(const Matrix& m);

// Basis of {v : m v^T = 0}, one vector per row, canonical (free variables in
// increasing column order, each set to 1 in turn).
Matrix kernel_basis(const Matrix& m);

// Basis of the column space of m (row space of m^T), one vector per row.
Matrix image_basis(const Matrix& m);

// Canonical solution x of a x = b with free variables set to zero, or
// nullopt when the system is inconsistent. Shapes: a is r x c, b is r x k.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

// true iff m^n = 0 for an n x n matrix; checked by log-many squarings.
bool is_nilpotent(const Matrix& m);

// Row-convention helpers used throughout the module layer, where a morphism
// is a matrix acting on row vectors v -> v*A.

// RREF basis of the row space (rank rows).
Matrix row_space(const Matrix& m);
// Basis of {v : v m = 0} as rows.
Matrix left_kernel(const Matrix& m);

// basis must be in RREF. Reduces v against it; empty remainder == membership.
bool in_row_space(const Matrix& rref_basis, std::span<const std::uint32_t> v);
bool row_space_contained(const Matrix& rref_sub, const Matrix& rref_super);

}  // namespace summand
