#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "summand/decompose.hpp"
#include "summand/module.hpp"

namespace summand {

struct ProjectiveIndecomposable {
    Module module;
    std::size_t multiplicity;  // in the regular module
    LocalCertificate certificate;
    std::string label;  // "P1", "P2", ... in canonical order
};

// Indecomposable direct summands of the regular right module; every one of
// them is projective with a local endomorphism ring.
std::vector<ProjectiveIndecomposable> projective_indecomposables(
    std::shared_ptr<const Algebra> a, std::uint64_t seed = 0);

// Tops of the projective indecomposables, in the same order; pairwise
// non-isomorphic and exhaustive.
std::vector<Module> simple_modules(
    const std::vector<ProjectiveIndecomposable>& pims);

// m is projective iff every summand class matches a projective
// indecomposable.
bool is_projective(const Module& m,
                   const std::vector<ProjectiveIndecomposable>& pims,
                   std::uint64_t seed = 0);

struct CoverResult {
    Module target;
    Module cover;
    Matrix epi;     // dim_cover x dim_target, surjective intertwiner
    Matrix kernel;  // RREF row basis of Ker epi
    bool essential; // kernel lies inside rad(cover); always true by theory
    // how the cover decomposes: (pim label, dim, count)
    std::vector<std::pair<std::string, std::size_t>> pim_usage;
};

// Projective cover built as in the semi-perfect story: decompose the top
// into simples, sum the matching projective indecomposables, lift through
// the quotient map. The lift exists because the cover is projective.
CoverResult projective_cover(const Module& m, std::uint64_t seed = 0);

// phi must be a surjective intertwiner; essential iff Ker phi lies in
// rad(source) (an iff for finitely generated sources).
bool is_essential_epi(const Matrix& phi, const Module& source,
                      const Module& target);

// The comparison isomorphism alpha with epi1 = epi2 after alpha; its
// existence and invertibility are guaranteed, failure is an engine bug.
Matrix cover_uniqueness_check(const CoverResult& c1, const CoverResult& c2);

// Rad(X,Y) = {phi : phi psi lies in J(End Y) for every psi : Y -> X},
// solved exactly as a linear condition inside Hom(X,Y).
class RadHomSpace {
  public:
    RadHomSpace(HomSpace hom, Matrix coord_basis, std::vector<Matrix> basis)
        : hom_(std::move(hom)),
          coord_basis_(std::move(coord_basis)),
          basis_(std::move(basis)) {}

    const HomSpace& hom() const { return hom_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Matrix>& basis() const { return basis_; }
    // coordinates of the basis inside hom(), one row per basis element
    const Matrix& coord_basis() const { return coord_basis_; }

    bool contains(const Matrix& phi) const;

  private:
    HomSpace hom_;
    Matrix coord_basis_;  // RREF rows in hom coordinates
    std::vector<Matrix> basis_;
};

RadHomSpace rad_hom(const Module& x, const Module& y);

struct ProjRadCheck {
    bool im_in_rad;   // Im phi inside rad y
    bool in_radhom;   // phi inside Rad(x, y)
};

// Both memberships computed independently; they agree when y is projective,
// and im_in_rad implies in_radhom always.
ProjRadCheck projrad_equivalence_check(const Matrix& phi, const Module& x,
                                       const Module& y);

struct PresentationCheck {
    bool cover;        // psi is essential
    bool radical_map;  // phi lies in Rad(p1, p0)
};

// p1 -phi-> p0 -psi-> m with Im phi = Ker psi and psi surjective (both
// verified); the two booleans coincide for projective presentations.
PresentationCheck is_minimal_presentation(const Module& p1, const Module& p0,
                                          const Matrix& phi, const Matrix& psi,
                                          const Module& m);

}  // namespace summand
