#include "summand/projcover.hpp"

#include <algorithm>

#include "summand/errors.hpp"
#include "summand/kernels.hpp"
#include "summand/rng.hpp"

namespace summand {

std::vector<ProjectiveIndecomposable> projective_indecomposables(
    std::shared_ptr<const Algebra> a, std::uint64_t seed) {
    Module reg = regular_module(a);
    Decomposition dec = krull_schmidt(reg, seed);
    std::vector<ProjectiveIndecomposable> pims;
    pims.reserve(dec.classes.size());
    for (std::size_t i = 0; i < dec.classes.size(); ++i) {
        auto& cls = dec.classes[i];
        pims.push_back(ProjectiveIndecomposable{
            std::move(cls.representative), cls.multiplicity,
            std::move(cls.certificate), "P" + std::to_string(i + 1)});
    }
    return pims;
}

std::vector<Module> simple_modules(
    const std::vector<ProjectiveIndecomposable>& pims) {
    std::vector<Module> simples;
    simples.reserve(pims.size());
    for (const auto& pim : pims) {
        Matrix rad = radical_of_module(pim.module);
        simples.push_back(quotient_module(pim.module, rad).quotient);
    }
    return simples;
}

bool is_projective(const Module& m,
                   const std::vector<ProjectiveIndecomposable>& pims,
                   std::uint64_t seed) {
    if (m.dim() == 0) return true;
    Decomposition dec = krull_schmidt(m, seed);
    for (const auto& cls : dec.classes) {
        bool found = false;
        for (const auto& pim : pims)
            if (pim.module.dim() == cls.representative.dim() &&
                indecomposable_isomorphism(pim.module, cls.representative)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

namespace {

// solve sum_h x_h (H_h * through) = target inside a hom space
std::optional<Matrix> lift_through(const HomSpace& hom, const Matrix& through,
                                   const Matrix& target) {
    const Fp fp = target.field();
    const std::size_t w = target.rows() * target.cols();
    Matrix columns(w, hom.dim(), fp);
    for (std::size_t h = 0; h < hom.dim(); ++h) {
        Matrix image = hom.basis()[h] * through;
        for (std::size_t i = 0; i < w; ++i) columns(i, h) = image.data()[i];
    }
    Matrix rhs(w, 1, fp);
    for (std::size_t i = 0; i < w; ++i) rhs(i, 0) = target.data()[i];
    auto x = solve_linear(columns, rhs);
    if (!x) return std::nullopt;
    std::vector<std::uint32_t> coords(hom.dim());
    for (std::size_t h = 0; h < hom.dim(); ++h) coords[h] = (*x)(h, 0);
    return hom.to_matrix(coords);
}

}  // namespace

CoverResult projective_cover(const Module& m, std::uint64_t seed) {
    const Fp fp = m.field();
    auto algebra = m.algebra_ptr();
    RadicalIdeal rad_a = jacobson_radical(*algebra);

    Matrix rad_m = radical_of_module(m, rad_a);
    QuotientModule top = quotient_module(m, rad_m);

    Decomposition top_dec = krull_schmidt(top.quotient, derive_seed(seed, 1));
    auto pims = projective_indecomposables(algebra, derive_seed(seed, 2));
    auto simples = simple_modules(pims);

    // per top summand instance: the matching projective and the composite
    // P_i -> S_i -> top
    std::vector<Module> parts;
    std::vector<Matrix> part_to_top;
    std::vector<std::pair<std::string, std::size_t>> usage;
    for (const auto& cls : top_dec.classes) {
        std::size_t pim_idx = pims.size();
        std::optional<Matrix> to_simple;  // class rep -> simple
        for (std::size_t i = 0; i < pims.size(); ++i) {
            if (simples[i].dim() != cls.representative.dim()) continue;
            if (auto w = indecomposable_isomorphism(cls.representative,
                                                    simples[i])) {
                pim_idx = i;
                to_simple = std::move(w);
                break;
            }
        }
        if (pim_idx == pims.size())
            throw InternalError("top summand matches no simple module");
        usage.emplace_back(pims[pim_idx].label, cls.multiplicity);

        // top projection of the projective: P -> S
        Matrix rad_p = radical_of_module(pims[pim_idx].module, rad_a);
        Matrix p_to_s = quotient_module(pims[pim_idx].module, rad_p).projection;
        auto simple_to_rep = inverse(*to_simple);
        if (!simple_to_rep)
            throw InternalError("summand isomorphism is not invertible");

        for (const auto& [iota, pi] : cls.witnesses) {
            (void)pi;
            parts.push_back(pims[pim_idx].module);
            // P -> S -> rep -> top
            part_to_top.push_back(p_to_s * *simple_to_rep * iota);
        }
    }

    DirectSum cover = direct_sum(algebra, parts);
    Matrix tau(cover.sum.dim(), top.quotient.dim(), fp);
    for (std::size_t k = 0; k < parts.size(); ++k)
        tau += cover.pis[k] * part_to_top[k];

    // lift tau through the essential quotient m -> top
    HomSpace hom = hom_space(cover.sum, m);
    auto epi = lift_through(hom, top.projection, tau);
    if (!epi)
        throw InternalError(
            "projective cover could not be lifted through the quotient");
    if (rank_of(*epi) != m.dim())
        throw InternalError("lifted cover map is not surjective");

    Matrix kernel = left_kernel(*epi);
    Matrix rad_cover = radical_of_module(cover.sum, rad_a);
    bool essential = row_space_contained(kernel, rad_cover);
    if (!essential)
        throw InternalError("cover kernel escapes the radical");

    return CoverResult{m, std::move(cover.sum), std::move(*epi),
                       std::move(kernel), essential, std::move(usage)};
}

bool is_essential_epi(const Matrix& phi, const Module& source,
                      const Module& target) {
    if (!is_intertwiner(source, target, phi))
        throw ValidationError("is_essential_epi: not a morphism");
    if (rank_of(phi) != target.dim())
        throw ValidationError("is_essential_epi: not surjective");
    Matrix kernel = left_kernel(phi);
    return row_space_contained(kernel, radical_of_module(source));
}

Matrix cover_uniqueness_check(const CoverResult& c1, const CoverResult& c2) {
    if (!same_algebra(c1.target.algebra(), c2.target.algebra()) ||
        c1.target.dim() != c2.target.dim() ||
        !std::equal(c1.target.actions().begin(), c1.target.actions().end(),
                    c2.target.actions().begin()))
        throw ValidationError(
            "cover_uniqueness_check: covers of different targets");

    HomSpace hom = hom_space(c1.cover, c2.cover);
    auto alpha = lift_through(hom, c2.epi, c1.epi);
    if (!alpha)
        throw InternalError("cover comparison map does not exist");
    if (!is_invertible(*alpha))
        throw InternalError("cover comparison map is not invertible");
    return *alpha;
}

bool RadHomSpace::contains(const Matrix& phi) const {
    auto coords = hom_.coords_of(phi);
    if (!coords) return false;
    if (coord_basis_.rows() == 0)
        return std::all_of(coords->begin(), coords->end(),
                           [](std::uint32_t v) { return v == 0; });
    return in_row_space(coord_basis_, *coords);
}

RadHomSpace rad_hom(const Module& x, const Module& y) {
    const Fp fp = x.field();
    HomSpace fwd = hom_space(x, y);
    HomSpace bwd = hom_space(y, x);
    EndAlgebra end_y = end_algebra(y);
    RadicalIdeal j = jacobson_radical(*end_y.algebra);

    // membership filter: v in span(J) iff v (I - S R) = 0 for the RREF rows R
    const std::size_t e = end_y.dim();
    Matrix filter = Matrix::identity(e, fp);
    {
        std::vector<std::size_t> pivots;
        for (std::size_t i = 0; i < j.basis.rows(); ++i) {
            std::size_t c = 0;
            while (c < e && j.basis(i, c) == 0) ++c;
            pivots.push_back(c);
        }
        Matrix selector(e, j.basis.rows(), fp);
        for (std::size_t t = 0; t < pivots.size(); ++t)
            selector(pivots[t], t) = 1;
        filter -= selector * j.basis;
    }

    // rows: coefficient vectors c with sum_i c_i coords(phi_i psi_j) in J
    // for every j
    const std::size_t h = fwd.dim(), s = bwd.dim();
    Matrix constraint(h, s * e, fp);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t jj = 0; jj < s; ++jj) {
            Matrix comp = bwd.basis()[jj] * fwd.basis()[i];  // phi after psi
            auto coords = end_y.coords_of(comp);
            if (!coords)
                throw InternalError("composite left the endomorphism ring");
            Matrix row(1, e, fp);
            std::copy(coords->begin(), coords->end(), row.row(0));
            Matrix filtered = row * filter;
            std::copy_n(filtered.row(0), e, constraint.row(i) + jj * e);
        }

    Matrix coord_basis = s == 0 ? Matrix::identity(h, fp)
                                : row_space(left_kernel(constraint));
    std::vector<Matrix> basis;
    basis.reserve(coord_basis.rows());
    for (std::size_t r = 0; r < coord_basis.rows(); ++r)
        basis.push_back(fwd.to_matrix(coord_basis.row_span(r)));
    return RadHomSpace(std::move(fwd), std::move(coord_basis),
                       std::move(basis));
}

ProjRadCheck projrad_equivalence_check(const Matrix& phi, const Module& x,
                                       const Module& y) {
    if (!is_intertwiner(x, y, phi))
        throw ValidationError("projrad_equivalence_check: not a morphism");
    Matrix image = row_space(phi);
    Matrix rad_y = radical_of_module(y);
    bool im_in_rad = row_space_contained(image, rad_y);
    bool in_radhom = rad_hom(x, y).contains(phi);
    return ProjRadCheck{im_in_rad, in_radhom};
}

PresentationCheck is_minimal_presentation(const Module& p1, const Module& p0,
                                          const Matrix& phi, const Matrix& psi,
                                          const Module& m) {
    if (!is_intertwiner(p1, p0, phi) || !is_intertwiner(p0, m, psi))
        throw ValidationError("is_minimal_presentation: maps are not morphisms");
    if (rank_of(psi) != m.dim())
        throw ValidationError("is_minimal_presentation: psi is not surjective");
    Matrix im_phi = row_space(phi);
    Matrix ker_psi = row_space(left_kernel(psi));
    if (!(im_phi == ker_psi))
        throw ValidationError(
            "is_minimal_presentation: not exact, rank(Im phi) = " +
            std::to_string(im_phi.rows()) + " vs dim(Ker psi) = " +
            std::to_string(ker_psi.rows()));

    PresentationCheck out;
    out.cover = is_essential_epi(psi, p0, m);
    out.radical_map = rad_hom(p1, p0).contains(phi);
    return out;
}

}  // namespace summand
