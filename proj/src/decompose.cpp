#include "summand/decompose.hpp"

#include <algorithm>

#include "summand/errors.hpp"
#include "summand/kernels.hpp"
#include "summand/poly.hpp"
#include "summand/rng.hpp"

namespace summand {

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

// module carried by an action-stable row space, with the action transported
// through the given projection (pi restricted to the rows is the inverse of
// the inclusion)
Module carried_module(const Module& m, const Matrix& rows, const Matrix& pi) {
    std::vector<Matrix> action;
    action.reserve(m.algebra().dim());
    for (std::size_t j = 0; j < m.algebra().dim(); ++j)
        action.push_back(rows * m.action(j) * pi);
    return Module(m.algebra_ptr(), std::move(action));
}

}  // namespace

FittingSplit fitting_split(const Module& m, const Matrix& phi) {
    if (!is_intertwiner(m, m, phi))
        throw ValidationError("fitting_split: not an endomorphism");
    const Fp fp = m.field();
    const std::size_t d = m.dim();

    std::size_t r = 1;
    Matrix phi_r = phi;
    while (rank_of(phi_r) != rank_of(phi_r * phi_r)) {
        phi_r = phi_r * phi;
        ++r;
        if (r > d + 1) throw InternalError("fitting exponent exceeded dim");
    }

    Matrix b = row_space(phi_r);
    auto piv_b = pivot_columns(b);
    const std::size_t r1 = b.rows();

    // restriction of phi^r to its image, in the basis b
    Matrix moved = b * phi_r;
    Matrix restriction(r1, r1, fp);
    for (std::size_t i = 0; i < r1; ++i)
        for (std::size_t t = 0; t < r1; ++t)
            restriction(i, t) = moved(i, piv_b[t]);
    auto psi = inverse(restriction);
    if (!psi)
        throw InternalError("phi^r is not invertible on its stabilized image");

    // pi_1 = psi phi^r as a map into image coordinates
    Matrix coords(d, r1, fp);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t t = 0; t < r1; ++t) coords(i, t) = phi_r(i, piv_b[t]);
    Matrix pi1 = coords * *psi;

    Matrix k = row_space(left_kernel(phi_r));
    auto piv_k = pivot_columns(k);
    // pi_2 = id - iota_1 pi_1 followed by kernel coordinates
    Matrix residual = Matrix::identity(d, fp) - pi1 * b;
    Matrix pi2(d, k.rows(), fp);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t t = 0; t < k.rows(); ++t)
            pi2(i, t) = residual(i, piv_k[t]);

    if (!(b * pi1 == Matrix::identity(r1, fp)) ||
        !(k * pi2 == Matrix::identity(k.rows(), fp)) ||
        !(pi1 * b + pi2 * k == Matrix::identity(d, fp)))
        throw InternalError("fitting witnesses failed their identities");

    return FittingSplit{r,
                        SplitSummand{carried_module(m, b, pi1), b, pi1},
                        SplitSummand{carried_module(m, k, pi2), k, pi2}};
}

std::vector<SplitSummand> primary_split(const Module& m, const Matrix& phi) {
    if (!is_intertwiner(m, m, phi))
        throw ValidationError("primary_split: not an endomorphism");
    const Fp fp = m.field();
    const std::size_t d = m.dim();

    Poly mp = minimal_polynomial(phi);
    auto fac = factor_poly(mp);
    if (fac.factors.size() <= 1) {
        SplitSummand whole{m, Matrix::identity(d, fp),
                           Matrix::identity(d, fp)};
        return {std::move(whole)};
    }

    std::vector<SplitSummand> parts;
    std::size_t total = 0;
    Matrix identity_sum(d, d, fp);
    for (const auto& [factor, mult] : fac.factors) {
        Poly primary = Poly::one(fp);
        for (std::size_t i = 0; i < mult; ++i) primary = primary * factor;
        Poly cofactor = (mp / primary).monic();
        // idempotent polynomial: 1 mod primary, 0 mod cofactor
        auto ext = egcd(primary, cofactor);
        if (!ext.g.is_one())
            throw InternalError("primary components are not coprime");
        Poly idem = (ext.t * cofactor) % mp;
        Matrix e = idem.eval_matrix(phi);

        Matrix k = row_space(left_kernel(primary.eval_matrix(phi)));
        auto piv = pivot_columns(k);
        Matrix pi(d, k.rows(), fp);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t t = 0; t < k.rows(); ++t)
                pi(i, t) = e(i, piv[t]);
        if (!(k * pi == Matrix::identity(k.rows(), fp)))
            throw InternalError("primary witness failed pi iota = id");
        identity_sum += pi * k;
        total += k.rows();
        parts.push_back(SplitSummand{carried_module(m, k, pi), k, pi});
    }
    if (total != d || !(identity_sum == Matrix::identity(d, fp)))
        throw InternalError("primary split witnesses do not sum to identity");
    return parts;
}

std::vector<std::uint32_t> module_fingerprint(const Module& m) {
    const Fp fp = m.field();
    Matrix stacked(m.algebra().dim() * m.dim(), m.dim(), fp);
    for (std::size_t j = 0; j < m.algebra().dim(); ++j)
        for (std::size_t i = 0; i < m.dim(); ++i)
            std::copy_n(m.action(j).row(i), m.dim(),
                        stacked.row(j * m.dim() + i));
    return rref(std::move(stacked)).mat.data();
}

std::optional<Matrix> indecomposable_isomorphism(const Module& m,
                                                 const Module& n) {
    if (!same_algebra(m.algebra(), n.algebra()))
        throw ValidationError("isomorphism test across different algebras");
    if (m.dim() != n.dim()) return std::nullopt;
    if (m.dim() == 0) return Matrix(0, 0, m.field());
    HomSpace forward = hom_space(m, n);
    HomSpace backward = hom_space(n, m);
    for (const auto& f : forward.basis())
        for (const auto& g : backward.basis())
            if (is_invertible(f * g)) {
                // f is a split mono between equal dimensions, hence iso
                if (!is_invertible(f))
                    throw InternalError("split mono of equal dims not invertible");
                return f;
            }
    return std::nullopt;
}

namespace {

struct Leaf {
    SplitSummand part;  // witnesses into the decomposition root
    LocalCertificate certificate;
};

// recursive splitting; branch indices keep child seeds schedule-independent
void decompose_rec(const SplitSummand& node, std::uint64_t seed,
                   std::vector<Leaf>& out) {
    const Module& m = node.summand;
    if (m.dim() == 0) return;

    EndAlgebra end = end_algebra(m);
    IdempotentSplit split;
    try {
        split = primitive_idempotent_split(*end.algebra,
                                           derive_seed(seed, 0));
    } catch (const RetryError&) {
        // fallback: primary-split random endomorphisms
        Rng rng(derive_seed(seed, 1));
        bool done = false;
        for (int attempt = 0; attempt < 64 && !done; ++attempt) {
            std::vector<std::uint32_t> coords(end.dim());
            for (auto& c : coords)
                c = static_cast<std::uint32_t>(rng.below(m.p()));
            Matrix phi = end.to_matrix(coords);
            auto parts = primary_split(m, phi);
            if (parts.size() <= 1) continue;
            for (const auto& part : parts)
                if (part.summand.dim() >= m.dim())
                    throw InternalError(
                        "primary split failed to reduce the dimension");
            for (std::size_t i = 0; i < parts.size(); ++i) {
                SplitSummand child{
                    parts[i].summand,
                    parts[i].iota * node.iota,
                    node.pi * parts[i].pi,
                };
                decompose_rec(child, derive_seed(seed, 2 + i), out);
            }
            done = true;
        }
        if (!done) throw;
        return;
    }

    if (split.local) {
        out.push_back(Leaf{node, split.certificate});
        return;
    }

    Matrix e = end.to_matrix(split.idempotent);
    Matrix complement = Matrix::identity(m.dim(), m.field()) - e;
    SplitSummand s1 = split_idempotent(m, e);
    SplitSummand s2 = split_idempotent(m, complement);
    if (s1.summand.dim() == 0 || s2.summand.dim() == 0)
        throw InternalError("nontrivial idempotent produced a trivial split");

    SplitSummand c1{s1.summand, s1.iota * node.iota, node.pi * s1.pi};
    SplitSummand c2{s2.summand, s2.iota * node.iota, node.pi * s2.pi};
    decompose_rec(c1, derive_seed(seed, 2), out);
    decompose_rec(c2, derive_seed(seed, 3), out);
}

}  // namespace

Decomposition krull_schmidt(const Module& m, std::uint64_t seed) {
    const Fp fp = m.field();
    const std::size_t d = m.dim();

    SplitSummand root{m, Matrix::identity(d, fp), Matrix::identity(d, fp)};
    std::vector<Leaf> leaves;
    decompose_rec(root, seed, leaves);

    // Group leaves into isomorphism classes; the first leaf of a class in
    // recursion order is its representative. Witnesses of later copies are
    // conjugated through the matching isomorphism so that every stored
    // (iota, pi) pair runs between the representative and the parent.
    std::vector<SummandClass> classes;
    for (auto& leaf : leaves) {
        bool placed = false;
        for (auto& cls : classes) {
            if (cls.representative.dim() != leaf.part.summand.dim()) continue;
            auto w = indecomposable_isomorphism(cls.representative,
                                                leaf.part.summand);
            if (!w) continue;
            auto w_inv = inverse(*w);
            if (!w_inv)
                throw InternalError("summand isomorphism is not invertible");
            cls.multiplicity += 1;
            cls.witnesses.emplace_back(*w * leaf.part.iota,
                                       leaf.part.pi * *w_inv);
            placed = true;
            break;
        }
        if (!placed)
            classes.push_back(SummandClass{
                leaf.part.summand,
                1,
                {{leaf.part.iota, leaf.part.pi}},
                leaf.certificate});
    }

    std::sort(classes.begin(), classes.end(),
              [](const SummandClass& a, const SummandClass& b) {
                  if (a.representative.dim() != b.representative.dim())
                      return a.representative.dim() < b.representative.dim();
                  return module_fingerprint(a.representative) <
                         module_fingerprint(b.representative);
              });

    // self-check of the direct-sum identities, representative-based
    Matrix total(d, d, fp);
    for (const auto& cls : classes)
        for (const auto& [iota, pi] : cls.witnesses) {
            if (!(iota * pi ==
                  Matrix::identity(cls.representative.dim(), fp)))
                throw InternalError("summand witness failed pi iota = id");
            if (!is_intertwiner(cls.representative, m, iota))
                throw InternalError("summand witness is not a morphism");
            total += pi * iota;
        }
    if (!(total == Matrix::identity(d, fp)))
        throw InternalError("summand witnesses do not sum to the identity");

    return Decomposition{m, std::move(classes)};
}

std::optional<Matrix> isomorphism(const Module& m, const Module& n) {
    if (!same_algebra(m.algebra(), n.algebra()))
        throw ValidationError("isomorphism test across different algebras");
    if (m.dim() != n.dim()) return std::nullopt;
    if (m.dim() == 0) return Matrix(0, 0, m.field());

    Decomposition dm = krull_schmidt(m, 0);
    Decomposition dn = krull_schmidt(n, 0);
    if (dm.classes.size() != dn.classes.size()) return std::nullopt;

    const Fp fp = m.field();
    Matrix t(m.dim(), n.dim(), fp);
    std::vector<bool> used(dn.classes.size(), false);
    for (const auto& cm : dm.classes) {
        bool matched = false;
        for (std::size_t j = 0; j < dn.classes.size(); ++j) {
            if (used[j]) continue;
            const auto& cn = dn.classes[j];
            if (cn.multiplicity != cm.multiplicity ||
                cn.representative.dim() != cm.representative.dim())
                continue;
            auto w = indecomposable_isomorphism(cm.representative,
                                                cn.representative);
            if (!w) continue;
            used[j] = true;
            matched = true;
            // route copy k of cm through w into copy k of cn
            for (std::size_t k = 0; k < cm.multiplicity; ++k) {
                // each copy is isomorphic to the representative via its
                // witnesses; conjugate w accordingly
                const auto& [iota_m, pi_m] = cm.witnesses[k];
                const auto& [iota_n, pi_n] = cn.witnesses[k];
                // m -> rep_m -> rep_n -> n
                t += pi_m * *w * iota_n;
            }
            break;
        }
        if (!matched) return std::nullopt;
    }
    if (!is_intertwiner(m, n, t) || !is_invertible(t))
        throw InternalError("assembled isomorphism failed verification");
    return t;
}

bool is_isomorphic(const Module& m, const Module& n) {
    return isomorphism(m, n).has_value();
}

MatchResult match_decompositions(const Decomposition& d1,
                                 const Decomposition& d2) {
    MatchResult result;
    if (d1.parent.dim() != d2.parent.dim()) {
        result.failure = "parents have different dimensions (" +
                         std::to_string(d1.parent.dim()) + " vs " +
                         std::to_string(d2.parent.dim()) + ")";
        return result;
    }
    if (d1.total_summands() != d2.total_summands()) {
        result.failure = "different numbers of indecomposable summands (" +
                         std::to_string(d1.total_summands()) + " vs " +
                         std::to_string(d2.total_summands()) + ")";
        return result;
    }

    // flattened instance offsets
    std::vector<std::size_t> offsets2;
    std::size_t off = 0;
    for (const auto& c : d2.classes) {
        offsets2.push_back(off);
        off += c.multiplicity;
    }

    std::vector<std::size_t> perm;
    std::vector<bool> used(d2.classes.size(), false);
    for (const auto& c1 : d1.classes) {
        bool matched = false;
        for (std::size_t j = 0; j < d2.classes.size(); ++j) {
            if (used[j]) continue;
            const auto& c2 = d2.classes[j];
            if (c2.representative.dim() != c1.representative.dim()) continue;
            if (!indecomposable_isomorphism(c1.representative,
                                            c2.representative))
                continue;
            if (c2.multiplicity != c1.multiplicity) {
                result.failure =
                    "isomorphic summands with different multiplicities (" +
                    std::to_string(c1.multiplicity) + " vs " +
                    std::to_string(c2.multiplicity) + ")";
                return result;
            }
            used[j] = true;
            matched = true;
            for (std::size_t k = 0; k < c1.multiplicity; ++k)
                perm.push_back(offsets2[j] + k);
            break;
        }
        if (!matched) {
            result.failure =
                "a summand class of dimension " +
                std::to_string(c1.representative.dim()) +
                " has no isomorphic partner";
            return result;
        }
    }
    result.matched = true;
    result.permutation = std::move(perm);
    return result;
}

}  // namespace summand
