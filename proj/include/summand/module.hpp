#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "summand/algebra.hpp"
#include "summand/matrix.hpp"

namespace summand {

// Right module over an Algebra, given by one action matrix per algebra basis
// element. Vectors are rows; the action of b is v -> v * action(b), so
// action(b_i) action(b_j) = sum_k c[i][j][k] action(b_k) and action(1) = id.
// Both laws are checked at construction. The zero module (dim 0) is a
// first-class value.
class Module {
  public:
    Module(std::shared_ptr<const Algebra> algebra, std::vector<Matrix> action);

    static Module zero(std::shared_ptr<const Algebra> algebra);

    const Algebra& algebra() const { return *algebra_; }
    const std::shared_ptr<const Algebra>& algebra_ptr() const {
        return algebra_;
    }
    std::size_t dim() const { return dim_; }
    const Fp& field() const { return algebra_->field(); }
    std::uint32_t p() const { return algebra_->p(); }

    const Matrix& action(std::size_t j) const { return action_[j]; }
    const std::vector<Matrix>& actions() const { return action_; }
    // rho(x) for an element x of the algebra in coordinates
    Matrix action_of(std::span<const std::uint32_t> coords) const;

  private:
    std::shared_ptr<const Algebra> algebra_;
    std::size_t dim_;
    std::vector<Matrix> action_;
};

bool same_algebra(const Algebra& a, const Algebra& b);

// the algebra acting on itself from the right
Module regular_module(std::shared_ptr<const Algebra> a);

// phi respects every action matrix: rho_m(b) A = A rho_n(b)
bool is_intertwiner(const Module& m, const Module& n, const Matrix& a);

// Basis of Hom(m, n) as intertwiner matrices, the kernel of the stacked
// linear system over all algebra basis elements. Canonical order.
class HomSpace {
  public:
    HomSpace(Module source, Module target, std::vector<Matrix> basis)
        : source_(std::move(source)),
          target_(std::move(target)),
          basis_(std::move(basis)) {}

    const Module& source() const { return source_; }
    const Module& target() const { return target_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Matrix>& basis() const { return basis_; }

    Matrix to_matrix(std::span<const std::uint32_t> coords) const;
    // coordinates of an intertwiner in this basis, if it lies in the span
    std::optional<std::vector<std::uint32_t>> coords_of(const Matrix& t) const;

  private:
    Module source_, target_;
    std::vector<Matrix> basis_;
};

HomSpace hom_space(const Module& m, const Module& n);

// End(m) repackaged as an abstract Algebra. The ring product gamma * delta
// is composition "delta first", which in row convention is the matrix
// product T_delta T_gamma; this is exactly what makes Hom(m, -) a right
// End(m)-module by precomposition.
struct EndAlgebra {
    std::shared_ptr<const Algebra> algebra;
    std::vector<Matrix> basis;  // intertwiner matrices, basis[i] <-> b_i

    std::size_t dim() const { return basis.size(); }
    Matrix to_matrix(std::span<const std::uint32_t> coords) const;
    std::optional<std::vector<std::uint32_t>> coords_of(const Matrix& t) const;
};

EndAlgebra end_algebra(const Module& m);

struct DirectSum {
    Module sum;
    std::vector<Matrix> iotas;  // dim_i x dim_sum
    std::vector<Matrix> pis;    // dim_sum x dim_i
};

// Block-diagonal sum with inclusion/projection witnesses satisfying
// sum_i iota_i pi_i = id and pi_i iota_i = id exactly.
DirectSum direct_sum(std::shared_ptr<const Algebra> algebra,
                     std::span<const Module> parts);

// rad m = m J(algebra), returned as a canonical RREF row basis.
Matrix radical_of_module(const Module& m);
Matrix radical_of_module(const Module& m, const RadicalIdeal& rad);

struct QuotientModule {
    Module quotient;
    Matrix projection;  // dim_m x dim_q, surjective, kernel = submodule
};

// Quotient by an action-stable row space; rejects unstable inputs naming a
// violating (row, basis element) pair.
QuotientModule quotient_module(const Module& m, const Matrix& submodule);

struct SubmoduleModule {
    Module sub;
    Matrix inclusion;  // dim_sub x dim_m
};

// The submodule spanned by the given rows (must be action-stable).
SubmoduleModule submodule_module(const Module& m, const Matrix& rows);

struct SplitSummand {
    Module summand;
    Matrix iota;  // dim_s x dim_m
    Matrix pi;    // dim_m x dim_s
};

// Splits an idempotent intertwiner: iota pi = e and pi iota = id_summand.
SplitSummand split_idempotent(const Module& m, const Matrix& e);

// Hom(x, -) into right End(x)-modules; fully faithful on add(x).
struct Projectivization {
    Module x;
    EndAlgebra gamma;

    // F m = Hom(x, m) with the precomposition action
    Module apply(const Module& m) const;
};

Projectivization projectivize(const Module& x);

}  // namespace summand
