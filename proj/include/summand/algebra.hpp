#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "summand/matrix.hpp"
#include "summand/poly.hpp"

namespace summand {

// Finite-dimensional associative unital algebra over F_p, presented by
// structure constants c[i][j][k] with b_i b_j = sum_k c[i][j][k] b_k.
// Elements are coordinate row vectors. Construction validates associativity
// and the unit laws; dimension 0 is allowed as the degenerate endomorphism
// algebra of the zero module.
class Algebra {
  public:
    Algebra(Fp fp, std::size_t dim, std::vector<std::uint32_t> table,
            std::vector<std::uint32_t> one);

    const Fp& field() const { return fp_; }
    std::uint32_t p() const { return fp_.p(); }
    std::size_t dim() const { return dim_; }
    const std::vector<std::uint32_t>& one() const { return one_; }

    std::uint32_t structure(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    // the vector b_i * b_j
    std::span<const std::uint32_t> product_row(std::size_t i,
                                               std::size_t j) const {
        return {c_.data() + (i * dim_ + j) * dim_, dim_};
    }

    std::vector<std::uint32_t> multiply(std::span<const std::uint32_t> x,
                                        std::span<const std::uint32_t> y) const;

    // v -> v * x and v -> x * v as matrices on coordinate row vectors
    Matrix right_mult(std::span<const std::uint32_t> x) const;
    Matrix left_mult(std::span<const std::uint32_t> x) const;
    const Matrix& right_mult_basis(std::size_t j) const { return rmul_[j]; }

    std::vector<std::uint32_t> element_pow(std::span<const std::uint32_t> x,
                                           std::uint64_t e) const;
    bool is_invertible_element(std::span<const std::uint32_t> x) const;
    bool is_commutative() const;
    // least-degree monic f with f(x) = 0
    Poly element_min_poly(std::span<const std::uint32_t> x) const;
    // f(x) for an element x
    std::vector<std::uint32_t> eval_poly(const Poly& f,
                                         std::span<const std::uint32_t> x) const;

  private:
    Fp fp_;
    std::size_t dim_;
    std::vector<std::uint32_t> c_;
    std::vector<std::uint32_t> one_;
    std::vector<Matrix> rmul_;
};

struct RadicalIdeal {
    Matrix basis;                  // RREF rows spanning J inside the algebra
    std::size_t nilpotency_index;  // least m with J^m = 0 (1 when J = 0)
};

// Jacobson radical via the trace bilinear form of the regular representation,
// exact for p > dim; throws ModulusError otherwise.
RadicalIdeal jacobson_radical(const Algebra& a);

struct SemisimpleQuotient {
    Algebra quotient;
    Matrix projection;  // dim x q: coordinates of the class of each basis elem
    Matrix section;     // q x dim: complement representatives, a right inverse
    RadicalIdeal radical;
};

SemisimpleQuotient semisimple_quotient(const Algebra& a);

struct LocalCertificate {
    bool local = false;
    // "frobenius_fixed_dim_1" | "idempotent" | "noncommuting_pair"
    std::string kind;
    // nontrivial idempotent of the algebra itself (kind == "idempotent")
    std::optional<std::vector<std::uint32_t>> idempotent;
    // elements of the algebra that do not commute modulo the radical
    std::optional<std::pair<std::vector<std::uint32_t>,
                            std::vector<std::uint32_t>>> noncommuting;
};

// Local <=> A/J is a division ring. Noncommutative quotients are never
// division rings here (finite), commutative ones are fields exactly when the
// Frobenius fixed space is one-dimensional.
LocalCertificate is_local(const Algebra& a);

struct IdempotentSplit {
    bool local = false;                      // no split exists
    std::vector<std::uint32_t> idempotent;   // e with e^2 = e, e not in {0,1}
    LocalCertificate certificate;            // filled when local
};

// Finds a nontrivial idempotent or certifies locality. Deterministic through
// the center of A/J; Las Vegas (seeded, 64 retries) when A/J is a simple
// matrix ring. Lifting along J is cubic Newton iteration.
IdempotentSplit primitive_idempotent_split(const Algebra& a,
                                           std::uint64_t seed = 0);

Algebra opposite_algebra(const Algebra& a);

struct QuiverArrow {
    std::string source, target, label;
};

// Monomial relations only: each relation is a composable sequence of arrow
// labels (written in traversal order) of length >= 2, set to zero.
struct QuiverPresentation {
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
    std::vector<std::vector<std::string>> relations;
};

struct QuiverAlgebra {
    Algebra algebra;
    std::vector<std::string> basis_labels;  // trivial paths first
};

// Path algebra of q modulo the monomial relations. Rejects presentations
// with an infinite surviving-path basis.
QuiverAlgebra algebra_from_quiver(const QuiverPresentation& q, Fp fp);

}  // namespace summand
