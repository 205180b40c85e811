#include "summand/module.hpp"

#include <algorithm>
#include <string>

#include "summand/errors.hpp"
#include "summand/kernels.hpp"

namespace summand {

bool same_algebra(const Algebra& a, const Algebra& b) {
    if (&a == &b) return true;
    if (a.dim() != b.dim() || a.p() != b.p() || a.one() != b.one())
        return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            auto ra = a.product_row(i, j);
            auto rb = b.product_row(i, j);
            if (!std::equal(ra.begin(), ra.end(), rb.begin())) return false;
        }
    return true;
}

Module::Module(std::shared_ptr<const Algebra> algebra,
               std::vector<Matrix> action)
    : algebra_(std::move(algebra)), action_(std::move(action)) {
    const Algebra& a = *algebra_;
    if (action_.size() != a.dim())
        throw ValidationError("module needs one action matrix per basis element");
    dim_ = action_.empty() ? 0 : action_[0].rows();
    for (const auto& m : action_)
        if (m.rows() != dim_ || m.cols() != dim_ || !(m.field() == a.field()))
            throw ValidationError("action matrices must be square, equal-sized, same field");
    if (a.dim() == 0) {
        if (dim_ != 0)
            throw ValidationError("only the zero module exists over the zero algebra");
        return;
    }

    // rho(1) = id
    Matrix rho_one = action_of(a.one());
    if (!(rho_one == Matrix::identity(dim_, a.field())))
        throw ValidationError("action of the unit is not the identity");

    // rho(b_i) rho(b_j) = sum_k c[i][j][k] rho(b_k)
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Matrix lhs = action_[i] * action_[j];
            Matrix rhs(dim_, dim_, a.field());
            auto coeffs = a.product_row(i, j);
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (coeffs[k])
                    for (std::size_t r = 0; r < dim_; ++r)
                        kern::axpy(rhs.row(r), action_[k].row(r), dim_,
                                   coeffs[k], a.p());
            if (!(lhs == rhs))
                throw ValidationError(
                    "action is incompatible with the structure constants at (b" +
                    std::to_string(i) + ", b" + std::to_string(j) + ")");
        }
}

Module Module::zero(std::shared_ptr<const Algebra> algebra) {
    std::vector<Matrix> action(algebra->dim(),
                               Matrix(0, 0, algebra->field()));
    return Module(std::move(algebra), std::move(action));
}

Matrix Module::action_of(std::span<const std::uint32_t> coords) const {
    Matrix r(dim_, dim_, field());
    for (std::size_t j = 0; j < algebra_->dim(); ++j)
        if (coords[j])
            for (std::size_t i = 0; i < dim_; ++i)
                kern::axpy(r.row(i), action_[j].row(i), dim_, coords[j], p());
    return r;
}

Module regular_module(std::shared_ptr<const Algebra> a) {
    std::vector<Matrix> action;
    action.reserve(a->dim());
    for (std::size_t j = 0; j < a->dim(); ++j)
        action.push_back(a->right_mult_basis(j));
    return Module(std::move(a), std::move(action));
}

bool is_intertwiner(const Module& m, const Module& n, const Matrix& a) {
    if (a.rows() != m.dim() || a.cols() != n.dim()) return false;
    for (std::size_t j = 0; j < m.algebra().dim(); ++j)
        if (!(m.action(j) * a == a * n.action(j))) return false;
    return true;
}

HomSpace hom_space(const Module& m, const Module& n) {
    if (!same_algebra(m.algebra(), n.algebra()))
        throw ValidationError("hom_space: modules over different algebras");
    const Fp fp = m.field();
    const std::size_t dm = m.dim(), dn = n.dim();
    const std::size_t na = m.algebra().dim();
    const std::size_t unknowns = dm * dn;

    // one block of dm*dn equations per algebra basis element:
    // sum_r rho_m(b)[i][r] T[r][j] - sum_s T[i][s] rho_n(b)[s][j] = 0
    Matrix k(na * unknowns, unknowns, fp);
    for (std::size_t b = 0; b < na; ++b) {
        const Matrix& am = m.action(b);
        const Matrix& an = n.action(b);
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dn; ++j) {
                std::size_t eq = (b * dm + i) * dn + j;
                for (std::size_t r = 0; r < dm; ++r)
                    k(eq, r * dn + j) = fp.add(k(eq, r * dn + j), am(i, r));
                for (std::size_t s = 0; s < dn; ++s)
                    k(eq, i * dn + s) =
                        fp.sub(k(eq, i * dn + s), an(s, j));
            }
    }

    Matrix solutions = kernel_basis(k);
    std::vector<Matrix> basis;
    basis.reserve(solutions.rows());
    for (std::size_t v = 0; v < solutions.rows(); ++v) {
        Matrix t(dm, dn, fp);
        for (std::size_t i = 0; i < dm; ++i)
            std::copy_n(solutions.row(v) + i * dn, dn, t.row(i));
        basis.push_back(std::move(t));
    }
    return HomSpace(m, n, std::move(basis));
}

namespace {

Matrix flatten_rows(const std::vector<Matrix>& mats, std::size_t width, Fp fp) {
    Matrix flat(mats.size(), width, fp);
    for (std::size_t i = 0; i < mats.size(); ++i)
        std::copy_n(mats[i].data().data(), width, flat.row(i));
    return flat;
}

std::optional<std::vector<std::uint32_t>> coords_in_flat_basis(
    const std::vector<Matrix>& basis, const Matrix& t, Fp fp) {
    const std::size_t width = t.rows() * t.cols();
    if (basis.empty())
        return t.is_zero() ? std::optional<std::vector<std::uint32_t>>(
                                 std::vector<std::uint32_t>{})
                           : std::nullopt;
    Matrix flat = flatten_rows(basis, width, fp);
    Matrix rhs(width, 1, fp);
    for (std::size_t i = 0; i < width; ++i) rhs(i, 0) = t.data()[i];
    auto x = solve_linear(flat.transpose(), rhs);
    if (!x) return std::nullopt;
    std::vector<std::uint32_t> coords(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) coords[i] = (*x)(i, 0);
    return coords;
}

}  // namespace

Matrix HomSpace::to_matrix(std::span<const std::uint32_t> coords) const {
    Matrix t(source_.dim(), target_.dim(), source_.field());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (coords[i])
            for (std::size_t r = 0; r < t.rows(); ++r)
                kern::axpy(t.row(r), basis_[i].row(r), t.cols(), coords[i],
                           t.p());
    return t;
}

std::optional<std::vector<std::uint32_t>> HomSpace::coords_of(
    const Matrix& t) const {
    return coords_in_flat_basis(basis_, t, source_.field());
}

Matrix EndAlgebra::to_matrix(std::span<const std::uint32_t> coords) const {
    if (basis.empty()) return Matrix(0, 0, algebra->field());
    Matrix t(basis[0].rows(), basis[0].cols(), algebra->field());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coords[i])
            for (std::size_t r = 0; r < t.rows(); ++r)
                kern::axpy(t.row(r), basis[i].row(r), t.cols(), coords[i],
                           t.p());
    return t;
}

std::optional<std::vector<std::uint32_t>> EndAlgebra::coords_of(
    const Matrix& t) const {
    return coords_in_flat_basis(basis, t, algebra->field());
}

EndAlgebra end_algebra(const Module& m) {
    const Fp fp = m.field();
    HomSpace hom = hom_space(m, m);
    const std::size_t h = hom.dim();

    // gamma_i * gamma_j acts as "gamma_j first": matrix T_j T_i
    std::vector<std::uint32_t> table(h * h * h, 0);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            Matrix prod = hom.basis()[j] * hom.basis()[i];
            auto coords = hom.coords_of(prod);
            if (!coords)
                throw InternalError("endomorphism product left the hom space");
            std::copy(coords->begin(), coords->end(),
                      table.begin() + (i * h + j) * h);
        }
    std::vector<std::uint32_t> one;
    if (m.dim() == 0) {
        one.assign(h, 0);
    } else {
        auto id_coords = hom.coords_of(Matrix::identity(m.dim(), fp));
        if (!id_coords)
            throw InternalError("identity is not in its own endomorphism ring");
        one = std::move(*id_coords);
    }

    EndAlgebra out;
    out.algebra = std::make_shared<Algebra>(fp, h, std::move(table),
                                            std::move(one));
    out.basis = hom.basis();
    return out;
}

DirectSum direct_sum(std::shared_ptr<const Algebra> algebra,
                     std::span<const Module> parts) {
    const Fp fp = algebra->field();
    std::size_t total = 0;
    for (const auto& part : parts) {
        if (!same_algebra(part.algebra(), *algebra))
            throw ValidationError("direct_sum: mixed algebras");
        total += part.dim();
    }

    std::vector<Matrix> action;
    action.reserve(algebra->dim());
    for (std::size_t j = 0; j < algebra->dim(); ++j) {
        Matrix blocks(total, total, fp);
        std::size_t off = 0;
        for (const auto& part : parts) {
            const Matrix& a = part.action(j);
            for (std::size_t r = 0; r < part.dim(); ++r)
                std::copy_n(a.row(r), part.dim(), blocks.row(off + r) + off);
            off += part.dim();
        }
        action.push_back(std::move(blocks));
    }
    Module sum(algebra, std::move(action));

    std::vector<Matrix> iotas, pis;
    std::size_t off = 0;
    for (const auto& part : parts) {
        Matrix iota(part.dim(), total, fp);
        Matrix pi(total, part.dim(), fp);
        for (std::size_t r = 0; r < part.dim(); ++r) {
            iota(r, off + r) = 1;
            pi(off + r, r) = 1;
        }
        iotas.push_back(std::move(iota));
        pis.push_back(std::move(pi));
        off += part.dim();
    }
    return DirectSum{std::move(sum), std::move(iotas), std::move(pis)};
}

Matrix radical_of_module(const Module& m, const RadicalIdeal& rad) {
    const Fp fp = m.field();
    Matrix stacked(rad.basis.rows() * m.dim(), m.dim(), fp);
    for (std::size_t r = 0; r < rad.basis.rows(); ++r) {
        Matrix rho = m.action_of(rad.basis.row_span(r));
        for (std::size_t i = 0; i < m.dim(); ++i)
            std::copy_n(rho.row(i), m.dim(), stacked.row(r * m.dim() + i));
    }
    return row_space(stacked);
}

Matrix radical_of_module(const Module& m) {
    return radical_of_module(m, jacobson_radical(m.algebra()));
}

namespace {

std::vector<std::size_t> pivot_columns(const Matrix& rref_basis) {
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < rref_basis.rows(); ++i) {
        std::size_t c = 0;
        while (c < rref_basis.cols() && rref_basis(i, c) == 0) ++c;
        pivots.push_back(c);
    }
    return pivots;
}

}  // namespace

QuotientModule quotient_module(const Module& m, const Matrix& submodule) {
    const Fp fp = m.field();
    const std::size_t d = m.dim();
    if (submodule.cols() != d)
        throw ValidationError("quotient_module: basis width mismatch");
    Matrix u = row_space(submodule);

    // stability check with a named witness on failure
    for (std::size_t r = 0; r < u.rows(); ++r)
        for (std::size_t j = 0; j < m.algebra().dim(); ++j) {
            Matrix moved(1, d, fp);
            for (std::size_t c = 0; c < d; ++c)
                if (u(r, c))
                    kern::axpy(moved.row(0), m.action(j).row(c), d, u(r, c),
                               fp.p());
            if (!in_row_space(u, moved.row_span(0)))
                throw ValidationError(
                    "subspace is not a submodule: row " + std::to_string(r) +
                    " escapes under basis element b" + std::to_string(j));
        }

    auto pivots = pivot_columns(u);
    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> complement;
    for (std::size_t c = 0; c < d; ++c)
        if (!is_pivot[c]) complement.push_back(c);
    const std::size_t q = complement.size();

    Matrix projection(d, q, fp);
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<std::uint32_t> v(d, 0);
        v[k] = 1;
        for (std::size_t i = 0; i < u.rows(); ++i)
            if (std::uint32_t f = v[pivots[i]])
                kern::axpy(v.data(), u.row(i), d, fp.p() - f, fp.p());
        for (std::size_t t = 0; t < q; ++t) projection(k, t) = v[complement[t]];
    }
    Matrix lift(q, d, fp);
    for (std::size_t t = 0; t < q; ++t) lift(t, complement[t]) = 1;

    std::vector<Matrix> action;
    action.reserve(m.algebra().dim());
    for (std::size_t j = 0; j < m.algebra().dim(); ++j)
        action.push_back(lift * m.action(j) * projection);
    Module quotient(m.algebra_ptr(), std::move(action));
    return QuotientModule{std::move(quotient), std::move(projection)};
}

SubmoduleModule submodule_module(const Module& m, const Matrix& rows) {
    const Fp fp = m.field();
    const std::size_t d = m.dim();
    Matrix b = row_space(rows);
    auto pivots = pivot_columns(b);

    // coordinate extractor: for w in the row space, coords = w[pivots]
    Matrix extract(d, b.rows(), fp);
    for (std::size_t t = 0; t < b.rows(); ++t) extract(pivots[t], t) = 1;

    std::vector<Matrix> action;
    action.reserve(m.algebra().dim());
    for (std::size_t j = 0; j < m.algebra().dim(); ++j) {
        Matrix moved = b * m.action(j);
        for (std::size_t r = 0; r < moved.rows(); ++r)
            if (!in_row_space(b, moved.row_span(r)))
                throw ValidationError(
                    "subspace is not a submodule: row " + std::to_string(r) +
                    " escapes under basis element b" + std::to_string(j));
        action.push_back(moved * extract);
    }
    Module sub(m.algebra_ptr(), std::move(action));
    return SubmoduleModule{std::move(sub), std::move(b)};
}

SplitSummand split_idempotent(const Module& m, const Matrix& e) {
    if (!is_intertwiner(m, m, e))
        throw ValidationError("split_idempotent: not an endomorphism");
    if (!(e * e == e))
        throw ValidationError("split_idempotent: not idempotent");
    const Fp fp = m.field();

    Matrix b = row_space(e);  // rows of the image; e fixes them
    auto pivots = pivot_columns(b);
    Matrix pi(m.dim(), b.rows(), fp);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t t = 0; t < b.rows(); ++t) pi(i, t) = e(i, pivots[t]);

    std::vector<Matrix> action;
    action.reserve(m.algebra().dim());
    for (std::size_t j = 0; j < m.algebra().dim(); ++j)
        action.push_back(b * m.action(j) * pi);
    Module summand(m.algebra_ptr(), std::move(action));
    return SplitSummand{std::move(summand), std::move(b), std::move(pi)};
}

Module Projectivization::apply(const Module& m) const {
    const Fp fp = m.field();
    HomSpace hom = hom_space(x, m);
    const std::size_t h = hom.dim();
    std::vector<Matrix> action;
    action.reserve(gamma.dim());
    for (std::size_t g = 0; g < gamma.dim(); ++g) {
        Matrix rho(h, h, fp);
        for (std::size_t a = 0; a < h; ++a) {
            Matrix precomposed = gamma.basis[g] * hom.basis()[a];
            auto coords = hom.coords_of(precomposed);
            if (!coords)
                throw InternalError("precomposition left the hom space");
            std::copy(coords->begin(), coords->end(), rho.row(a));
        }
        action.push_back(std::move(rho));
    }
    return Module(gamma.algebra, std::move(action));
}

Projectivization projectivize(const Module& x) {
    return Projectivization{x, end_algebra(x)};
}

}  // namespace summand
