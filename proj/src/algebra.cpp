#include "summand/algebra.hpp"

#include <algorithm>
#include <map>

#include "summand/errors.hpp"
#include "summand/kernels.hpp"
#include "summand/rng.hpp"

namespace summand {

Algebra::Algebra(Fp fp, std::size_t dim, std::vector<std::uint32_t> table,
                 std::vector<std::uint32_t> one)
    : fp_(fp), dim_(dim), c_(std::move(table)), one_(std::move(one)) {
    if (c_.size() != dim_ * dim_ * dim_)
        throw ValidationError("structure constant table has wrong size");
    if (one_.size() != dim_)
        throw ValidationError("unit vector has wrong size");
    for (auto& v : c_)
        if (v >= fp_.p()) v %= fp_.p();
    for (auto& v : one_)
        if (v >= fp_.p()) v %= fp_.p();

    rmul_.reserve(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Matrix r(dim_, dim_, fp_);
        for (std::size_t i = 0; i < dim_; ++i)
            std::copy_n(product_row(i, j).data(), dim_, r.row(i));
        rmul_.push_back(std::move(r));
    }

    // associativity: R_j R_k = sum_m c[j][k][m] R_m encodes
    // (b_i b_j) b_k = b_i (b_j b_k) for all i
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
            Matrix lhs = rmul_[j] * rmul_[k];
            Matrix rhs(dim_, dim_, fp_);
            for (std::size_t m = 0; m < dim_; ++m)
                if (std::uint32_t cm = structure(j, k, m))
                    for (std::size_t r = 0; r < dim_; ++r)
                        kern::axpy(rhs.row(r), rmul_[m].row(r), dim_, cm,
                                   fp_.p());
            if (!(lhs == rhs)) {
                std::size_t bad_i = 0;
                for (std::size_t i = 0; i < dim_; ++i)
                    for (std::size_t t = 0; t < dim_; ++t)
                        if (lhs(i, t) != rhs(i, t)) bad_i = i;
                throw ValidationError(
                    "non-associative table: (b" + std::to_string(bad_i) +
                    " b" + std::to_string(j) + ") b" + std::to_string(k) +
                    " != b" + std::to_string(bad_i) + " (b" +
                    std::to_string(j) + " b" + std::to_string(k) + ")");
            }
        }

    // unit laws
    for (std::size_t j = 0; j < dim_; ++j) {
        std::vector<std::uint32_t> ej(dim_, 0);
        ej[j] = 1;
        if (multiply(one_, ej) != ej || multiply(ej, one_) != ej)
            throw ValidationError("unit law fails on basis element b" +
                                  std::to_string(j));
    }
}

std::vector<std::uint32_t> Algebra::multiply(
    std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const {
    std::vector<std::uint32_t> z(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            std::uint32_t f = fp_.mul(x[i], y[j]);
            kern::axpy(z.data(), product_row(i, j).data(), dim_, f, fp_.p());
        }
    }
    return z;
}

Matrix Algebra::right_mult(std::span<const std::uint32_t> x) const {
    Matrix r(dim_, dim_, fp_);
    for (std::size_t j = 0; j < dim_; ++j)
        if (x[j])
            for (std::size_t i = 0; i < dim_; ++i)
                kern::axpy(r.row(i), rmul_[j].row(i), dim_, x[j], fp_.p());
    return r;
}

Matrix Algebra::left_mult(std::span<const std::uint32_t> x) const {
    // row j of L_x is the vector x * b_j
    Matrix l(dim_, dim_, fp_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (x[i])
            for (std::size_t j = 0; j < dim_; ++j)
                kern::axpy(l.row(j), product_row(i, j).data(), dim_, x[i],
                           fp_.p());
    return l;
}

std::vector<std::uint32_t> Algebra::element_pow(
    std::span<const std::uint32_t> x, std::uint64_t e) const {
    std::vector<std::uint32_t> r = one_;
    std::vector<std::uint32_t> b(x.begin(), x.end());
    while (e) {
        if (e & 1) r = multiply(r, b);
        b = multiply(b, b);
        e >>= 1;
    }
    return r;
}

bool Algebra::is_invertible_element(std::span<const std::uint32_t> x) const {
    return rank_of(right_mult(x)) == dim_;
}

bool Algebra::is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            auto pij = product_row(i, j);
            auto pji = product_row(j, i);
            if (!std::equal(pij.begin(), pij.end(), pji.begin()))
                return false;
        }
    return true;
}

Poly Algebra::element_min_poly(std::span<const std::uint32_t> x) const {
    if (dim_ == 0) return Poly::one(fp_);
    // annihilator of 1 under right multiplication by x, i.e. the monic
    // generator of {f : f(x) = 0}
    return vector_annihilator(right_mult(x), one_);
}

std::vector<std::uint32_t> Algebra::eval_poly(
    const Poly& f, std::span<const std::uint32_t> x) const {
    std::vector<std::uint32_t> r(dim_, 0);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        r = multiply(r, x);
        std::uint32_t ci = f.coeff(i);
        if (ci) kern::axpy(r.data(), one_.data(), dim_, ci, fp_.p());
    }
    return r;
}

RadicalIdeal jacobson_radical(const Algebra& a) {
    const Fp fp = a.field();
    const std::size_t n = a.dim();
    // Kernel K of the trace form (x, y) -> tr(R_{xy}). J is always contained
    // in K (nilpotents are traceless), and K is a two-sided ideal; so K = J
    // exactly when K is nilpotent, which the loop below certifies. For
    // p > dim the form is known to be exact and the check cannot fail.
    std::vector<std::uint32_t> basis_traces(n);
    for (std::size_t m = 0; m < n; ++m)
        basis_traces[m] = a.right_mult_basis(m).trace();
    Matrix gram(n, n, fp);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint32_t t = 0;
            auto prod = a.product_row(i, j);
            for (std::size_t m = 0; m < n; ++m)
                if (prod[m]) t = fp.add(t, fp.mul(prod[m], basis_traces[m]));
            gram(i, j) = t;
        }
    Matrix basis = row_space(left_kernel(gram));

    // nilpotency index by iterated products
    std::size_t index = 1;
    Matrix power = basis;
    while (power.rows() > 0) {
        if (index > n + 1) {
            if (fp.p() <= n)
                throw ModulusError(
                    "modulus too small for radical computation: the trace "
                    "form kernel is not nilpotent over p = " +
                    std::to_string(fp.p()));
            throw InternalError("radical is not nilpotent despite p > dim");
        }
        Matrix next(power.rows() * basis.rows(), n, fp);
        std::size_t r = 0;
        for (std::size_t i = 0; i < power.rows(); ++i)
            for (std::size_t j = 0; j < basis.rows(); ++j) {
                auto prod = a.multiply(power.row_span(i), basis.row_span(j));
                std::copy(prod.begin(), prod.end(), next.row(r++));
            }
        power = row_space(next);
        ++index;
    }
    return RadicalIdeal{std::move(basis), index};
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

SemisimpleQuotient semisimple_quotient(const Algebra& a) {
    const Fp fp = a.field();
    const std::size_t n = a.dim();
    RadicalIdeal rad = jacobson_radical(a);
    const std::size_t q = n - rad.basis.rows();

    auto pivots = pivot_columns(rad.basis);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> complement;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) complement.push_back(c);

    // projection: reduce e_k modulo J, keep the non-pivot coordinates
    Matrix projection(n, q, fp);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::uint32_t> v(n, 0);
        v[k] = 1;
        for (std::size_t i = 0; i < rad.basis.rows(); ++i)
            if (std::uint32_t f = v[pivots[i]])
                kern::axpy(v.data(), rad.basis.row(i), n, fp.p() - f, fp.p());
        for (std::size_t t = 0; t < q; ++t) projection(k, t) = v[complement[t]];
    }
    Matrix section(q, n, fp);
    for (std::size_t t = 0; t < q; ++t) section(t, complement[t]) = 1;

    // quotient structure constants through representatives
    std::vector<std::uint32_t> table(q * q * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            auto prod = a.multiply(section.row_span(i), section.row_span(j));
            for (std::size_t t = 0; t < q; ++t) {
                std::uint32_t s = 0;
                for (std::size_t k = 0; k < n; ++k)
                    if (prod[k])
                        s = fp.add(s, fp.mul(prod[k], projection(k, t)));
                table[(i * q + j) * q + t] = s;
            }
        }
    std::vector<std::uint32_t> one_q(q, 0);
    for (std::size_t t = 0; t < q; ++t) {
        std::uint32_t s = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (a.one()[k]) s = fp.add(s, fp.mul(a.one()[k], projection(k, t)));
        one_q[t] = s;
    }

    Algebra quotient(fp, q, std::move(table), std::move(one_q));
    return SemisimpleQuotient{std::move(quotient), std::move(projection),
                              std::move(section), std::move(rad)};
}

namespace {

// matrix of x -> x^p - x on a commutative algebra; the Frobenius map is
// F_p-linear in characteristic p
Matrix frobenius_minus_id(const Algebra& b) {
    const Fp fp = b.field();
    const std::size_t n = b.dim();
    Matrix f(n, n, fp);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> e(n, 0);
        e[i] = 1;
        auto power = b.element_pow(e, fp.p());
        std::copy(power.begin(), power.end(), f.row(i));
        f(i, i) = fp.sub(f(i, i), 1);
    }
    return f;
}

// Lagrange idempotent from an element w whose minimal polynomial splits into
// distinct linear factors, at least two of them
std::vector<std::uint32_t> lagrange_idempotent(
    const Algebra& b, std::span<const std::uint32_t> w, const Poly& minpoly) {
    const Fp fp = b.field();
    auto roots = factor_poly(minpoly);
    if (roots.factors.size() < 2)
        throw InternalError("expected a split minimal polynomial");
    // ell(x) = prod_{i>=2} (x - r_i) / (r_1 - r_i), evaluated at w
    std::uint32_t r1 = fp.neg(roots.factors[0].factor.coeff(0));
    Poly ell = Poly::one(fp);
    for (std::size_t i = 1; i < roots.factors.size(); ++i) {
        std::uint32_t ri = fp.neg(roots.factors[i].factor.coeff(0));
        ell = ell * Poly(fp, {fp.neg(ri), 1});
        ell = ell.scaled(fp.inv(fp.sub(r1, ri)));
    }
    return b.eval_poly(ell, w);
}

bool is_idempotent_element(const Algebra& a, std::span<const std::uint32_t> e) {
    auto sq = a.multiply(e, e);
    return std::equal(sq.begin(), sq.end(), e.begin());
}

bool is_trivial_idempotent(const Algebra& a, std::span<const std::uint32_t> e) {
    bool zero = std::all_of(e.begin(), e.end(),
                            [](std::uint32_t v) { return v == 0; });
    return zero || std::equal(e.begin(), e.end(), a.one().begin());
}

std::size_t ceil_log2(std::size_t v) {
    std::size_t r = 0;
    while ((std::size_t{1} << r) < v) ++r;
    return r;
}

// cubic Newton lifting of an idempotent of A/J to an idempotent of A; the
// defect x^2 - x squares into deeper radical powers each round
std::vector<std::uint32_t> lift_idempotent(const Algebra& a,
                                           std::vector<std::uint32_t> x,
                                           std::size_t nilpotency_index) {
    const Fp fp = a.field();
    const std::size_t cap =
        ceil_log2(std::max<std::size_t>(nilpotency_index, 1)) + 1;
    for (std::size_t it = 0; it <= cap; ++it) {
        if (is_idempotent_element(a, x)) return x;
        if (it == cap) break;
        // x <- 3x^2 - 2x^3
        auto x2 = a.multiply(x, x);
        auto x3 = a.multiply(x2, x);
        std::vector<std::uint32_t> next(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            next[i] = fp.sub(fp.mul(3 % fp.p(), x2[i]),
                             fp.mul(2 % fp.p(), x3[i]));
        x = std::move(next);
    }
    throw InternalError("idempotent lifting exceeded its iteration cap");
}

// first basis row not proportional to 1
std::vector<std::uint32_t> non_scalar_row(const Algebra& b,
                                          const Matrix& basis) {
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        Matrix two(2, b.dim(), b.field());
        std::copy(b.one().begin(), b.one().end(), two.row(0));
        std::copy_n(basis.row(i), b.dim(), two.row(1));
        if (rank_of(two) == 2)
            return {basis.row(i), basis.row(i) + b.dim()};
    }
    throw InternalError("fixed space of dim >= 2 spanned by the unit");
}

}  // namespace

LocalCertificate is_local(const Algebra& a) {
    if (a.dim() == 0)
        throw ValidationError("is_local: zero algebra has no unit");
    SemisimpleQuotient ss = semisimple_quotient(a);
    const Algebra& b = ss.quotient;

    if (!b.is_commutative()) {
        // finite division rings are commutative, so this cannot be local;
        // certify with a pair that fails to commute modulo J
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = i + 1; j < b.dim(); ++j) {
                auto pij = b.product_row(i, j);
                auto pji = b.product_row(j, i);
                if (!std::equal(pij.begin(), pij.end(), pji.begin())) {
                    LocalCertificate cert;
                    cert.local = false;
                    cert.kind = "noncommuting_pair";
                    std::vector<std::uint32_t> x(ss.section.row(i),
                                                 ss.section.row(i) + a.dim());
                    std::vector<std::uint32_t> y(ss.section.row(j),
                                                 ss.section.row(j) + a.dim());
                    cert.noncommuting = {std::move(x), std::move(y)};
                    return cert;
                }
            }
        throw InternalError("noncommutative quotient with commuting basis");
    }

    Matrix fixed = row_space(left_kernel(frobenius_minus_id(b)));
    if (fixed.rows() == 1) {
        LocalCertificate cert;
        cert.local = true;
        cert.kind = "frobenius_fixed_dim_1";
        return cert;
    }

    // commutative quotient with several simple factors: produce an explicit
    // idempotent of A as the certificate
    auto w = non_scalar_row(b, fixed);
    auto e_b = lagrange_idempotent(b, w, b.element_min_poly(w));
    std::vector<std::uint32_t> rep(a.dim(), 0);
    for (std::size_t t = 0; t < b.dim(); ++t)
        if (e_b[t])
            kern::axpy(rep.data(), ss.section.row(t), a.dim(), e_b[t], a.p());
    auto e = lift_idempotent(a, std::move(rep), ss.radical.nilpotency_index);

    LocalCertificate cert;
    cert.local = false;
    cert.kind = "idempotent";
    cert.idempotent = std::move(e);
    return cert;
}

IdempotentSplit primitive_idempotent_split(const Algebra& a,
                                           std::uint64_t seed) {
    if (a.dim() == 0)
        throw ValidationError("primitive_idempotent_split: zero algebra");
    SemisimpleQuotient ss = semisimple_quotient(a);
    const Algebra& b = ss.quotient;
    const Fp fp = a.field();

    auto lift_from_quotient = [&](std::span<const std::uint32_t> e_b) {
        std::vector<std::uint32_t> rep(a.dim(), 0);
        for (std::size_t t = 0; t < b.dim(); ++t)
            if (e_b[t])
                kern::axpy(rep.data(), ss.section.row(t), a.dim(), e_b[t],
                           a.p());
        auto e = lift_idempotent(a, std::move(rep),
                                 ss.radical.nilpotency_index);
        if (is_trivial_idempotent(a, e))
            throw InternalError("lift of a nontrivial idempotent is trivial");
        IdempotentSplit out;
        out.local = false;
        out.idempotent = std::move(e);
        return out;
    };

    // center of B: x with x b_j = b_j x for every j
    const std::size_t nb = b.dim();
    Matrix stacked(nb, nb * nb, fp);
    for (std::size_t j = 0; j < nb; ++j) {
        std::vector<std::uint32_t> ej(nb, 0);
        ej[j] = 1;
        Matrix diff = b.right_mult(ej) - b.left_mult(ej);
        for (std::size_t r = 0; r < nb; ++r)
            std::copy_n(diff.row(r), nb, stacked.row(r) + j * nb);
    }
    Matrix center = row_space(left_kernel(stacked));

    // Frobenius fixed space of the center; its dimension counts the simple
    // factors of B
    Matrix frob_fixed(0, nb, fp);
    {
        auto pivots = pivot_columns(center);
        Matrix fz(center.rows(), center.rows(), fp);
        for (std::size_t i = 0; i < center.rows(); ++i) {
            auto power = b.element_pow(center.row_span(i), fp.p());
            // center is closed under powers; coordinates via its pivots
            for (std::size_t t = 0; t < center.rows(); ++t)
                fz(i, t) = power[pivots[t]];
            fz(i, i) = fp.sub(fz(i, i), 1);
        }
        Matrix w_coords = left_kernel(fz);
        Matrix w(w_coords.rows(), nb, fp);
        for (std::size_t i = 0; i < w_coords.rows(); ++i)
            for (std::size_t t = 0; t < center.rows(); ++t)
                if (w_coords(i, t))
                    kern::axpy(w.row(i), center.row(t), nb, w_coords(i, t),
                               fp.p());
        frob_fixed = row_space(w);
    }

    if (frob_fixed.rows() >= 2) {
        // deterministic central split
        auto w = non_scalar_row(b, frob_fixed);
        auto e_b = lagrange_idempotent(b, w, b.element_min_poly(w));
        return lift_from_quotient(e_b);
    }

    if (b.is_commutative()) {
        // single simple factor and commutative: B is a field, A is local
        IdempotentSplit out;
        out.local = true;
        out.certificate.local = true;
        out.certificate.kind = "frobenius_fixed_dim_1";
        return out;
    }

    // B is a single matrix ring: sample elements until the minimal
    // polynomial has two coprime parts, then split by CRT
    Rng rng(derive_seed(seed, 0x1d3));
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::uint32_t> u(nb);
        for (auto& v : u) v = static_cast<std::uint32_t>(rng.below(fp.p()));
        Poly g = b.element_min_poly(u);
        if (g.degree() < 2) continue;
        auto fac = factor_poly(g, derive_seed(seed, 0x9000 + attempt));
        if (fac.factors.size() < 2) continue;
        Poly h1 = Poly::one(fp);
        for (std::size_t i = 0; i < fac.factors[0].multiplicity; ++i)
            h1 = h1 * fac.factors[0].factor;
        Poly h2 = (g / h1).monic();
        if (h2.degree() < 1) continue;
        auto ext = egcd(h1, h2);
        if (!ext.g.is_one()) continue;
        // e = (t h2)(u) is 1 mod h1 and 0 mod h2
        auto e_b = b.eval_poly((ext.t * h2) % g, u);
        if (!is_idempotent_element(b, e_b) || is_trivial_idempotent(b, e_b))
            throw InternalError("CRT split produced a bad idempotent");
        return lift_from_quotient(e_b);
    }
    throw RetryError(
        "no splitting element found in 64 seeded samples of the quotient");
}

Algebra opposite_algebra(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<std::uint32_t> table(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                table[(i * n + j) * n + k] = a.structure(j, i, k);
    return Algebra(a.field(), n, std::move(table), a.one());
}

namespace {

using Path = std::vector<std::size_t>;  // arrow indices in traversal order

bool contains_relation(const Path& p, const std::vector<Path>& relations) {
    for (const auto& rel : relations) {
        if (rel.size() > p.size()) continue;
        for (std::size_t start = 0; start + rel.size() <= p.size(); ++start)
            if (std::equal(rel.begin(), rel.end(), p.begin() + start))
                return true;
    }
    return false;
}

}  // namespace

QuiverAlgebra algebra_from_quiver(const QuiverPresentation& q, Fp fp) {
    const std::size_t nv = q.vertices.size();
    if (nv == 0) throw ValidationError("quiver needs at least one vertex");
    std::map<std::string, std::size_t> vertex_index;
    for (std::size_t v = 0; v < nv; ++v) {
        if (!vertex_index.emplace(q.vertices[v], v).second)
            throw ValidationError("duplicate vertex id: " + q.vertices[v]);
    }
    std::map<std::string, std::size_t> arrow_index;
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        const auto& ar = q.arrows[i];
        if (!vertex_index.count(ar.source) || !vertex_index.count(ar.target))
            throw ValidationError("arrow " + ar.label +
                                  " references an unknown vertex");
        if (!arrow_index.emplace(ar.label, i).second)
            throw ValidationError("duplicate arrow label: " + ar.label);
    }

    std::vector<Path> relations;
    std::size_t relation_span = 0;
    for (const auto& rel : q.relations) {
        if (rel.size() < 2)
            throw ValidationError("relations must be paths of length >= 2");
        Path path;
        for (const auto& label : rel) {
            auto it = arrow_index.find(label);
            if (it == arrow_index.end())
                throw ValidationError("relation uses unknown arrow: " + label);
            path.push_back(it->second);
        }
        for (std::size_t s = 0; s + 1 < path.size(); ++s)
            if (q.arrows[path[s]].target != q.arrows[path[s + 1]].source)
                throw ValidationError("relation path is not composable");
        relation_span += path.size() - 1;
        relations.push_back(std::move(path));
    }

    // Surviving paths are the words over arrows avoiding every relation as a
    // factor. The avoidance automaton has at most nv + relation_span states,
    // so any survivor longer than that pumps to infinitely many survivors.
    const std::size_t bound = nv + relation_span;
    std::vector<Path> nontrivial;
    std::vector<Path> frontier;
    for (std::size_t i = 0; i < q.arrows.size(); ++i)
        if (!contains_relation({i}, relations)) frontier.push_back({i});
    std::size_t length = 1;
    while (!frontier.empty()) {
        if (length > bound)
            throw ValidationError(
                "quiver algebra is infinite-dimensional: a path of length " +
                std::to_string(length) + " survives the relations");
        std::vector<Path> next;
        for (auto& p : frontier) {
            for (std::size_t i = 0; i < q.arrows.size(); ++i) {
                if (q.arrows[p.back()].target != q.arrows[i].source) continue;
                Path ext = p;
                ext.push_back(i);
                if (!contains_relation(ext, relations))
                    next.push_back(std::move(ext));
            }
            nontrivial.push_back(std::move(p));
            if (nontrivial.size() + next.size() > 20000)
                throw ValidationError("quiver algebra too large");
        }
        frontier = std::move(next);
        ++length;
    }
    std::sort(nontrivial.begin(), nontrivial.end(),
              [](const Path& a, const Path& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });

    const std::size_t dim = nv + nontrivial.size();
    std::map<Path, std::size_t> path_index;
    for (std::size_t i = 0; i < nontrivial.size(); ++i)
        path_index.emplace(nontrivial[i], nv + i);

    auto source_of = [&](std::size_t basis) {
        return basis < nv
                   ? basis
                   : vertex_index.at(
                         q.arrows[nontrivial[basis - nv].front()].source);
    };
    auto target_of = [&](std::size_t basis) {
        return basis < nv
                   ? basis
                   : vertex_index.at(
                         q.arrows[nontrivial[basis - nv].back()].target);
    };

    std::vector<std::uint32_t> table(dim * dim * dim, 0);
    auto set_product = [&](std::size_t i, std::size_t j, std::size_t k) {
        table[(i * dim + j) * dim + k] = 1;
    };
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (target_of(i) != source_of(j)) continue;  // product is zero
            if (i < nv && j < nv) {
                set_product(i, j, i);  // e_v e_v = e_v
            } else if (i < nv) {
                set_product(i, j, j);  // e_v p = p when p starts at v
            } else if (j < nv) {
                set_product(i, j, i);  // p e_w = p when p ends at w
            } else {
                Path concat = nontrivial[i - nv];
                const Path& tail = nontrivial[j - nv];
                concat.insert(concat.end(), tail.begin(), tail.end());
                auto it = path_index.find(concat);
                if (it != path_index.end()) set_product(i, j, it->second);
                // absent means a relation sits inside: product is zero
            }
        }

    std::vector<std::uint32_t> one(dim, 0);
    for (std::size_t v = 0; v < nv; ++v) one[v] = 1;

    std::vector<std::string> labels;
    for (std::size_t v = 0; v < nv; ++v)
        labels.push_back("e(" + q.vertices[v] + ")");
    for (const auto& p : nontrivial) {
        std::string s;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) s += "*";
            s += q.arrows[p[i]].label;
        }
        labels.push_back(std::move(s));
    }

    return QuiverAlgebra{Algebra(fp, dim, std::move(table), std::move(one)),
                         std::move(labels)};
}

}  // namespace summand
