#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "summand/module.hpp"

namespace summand {

struct FittingSplit {
    std::size_t exponent;     // least r with rank(phi^r) = rank(phi^2r)
    SplitSummand image_part;  // Im phi^r
    SplitSummand kernel_part; // Ker phi^r
};

// m = Im phi^r (+) Ker phi^r for phi in End(m), witnesses built from the
// partial inverse of phi^r on its image.
FittingSplit fitting_split(const Module& m, const Matrix& phi);

// Splits m along the primary factors of the minimal polynomial of phi:
// one summand Ker f_i(phi)^{e_i} per irreducible factor f_i. A single
// primary factor returns m unchanged (identity witnesses).
std::vector<SplitSummand> primary_split(const Module& m, const Matrix& phi);

struct SummandClass {
    Module representative;
    std::size_t multiplicity = 0;
    // one (iota, pi) pair into the parent per copy
    std::vector<std::pair<Matrix, Matrix>> witnesses;
    LocalCertificate certificate;  // locality of End(representative)
};

struct Decomposition {
    Module parent;
    std::vector<SummandClass> classes;  // canonically sorted, pairwise non-iso

    std::size_t total_summands() const {
        std::size_t n = 0;
        for (const auto& c : classes) n += c.multiplicity;
        return n;
    }
};

// Full decomposition into indecomposables with local endomorphism rings.
// Deterministic given the seed; recursion branches derive child seeds, so
// results do not depend on evaluation order. Throws ModulusError when some
// intermediate endomorphism algebra has dim >= p, RetryError when the
// Las Vegas splitting paths are exhausted.
Decomposition krull_schmidt(const Module& m, std::uint64_t seed = 0);

// Isomorphism test for modules whose endomorphism rings are local: some
// basis pair product psi_j . phi_i is invertible iff m = n, and then phi_i
// itself is an isomorphism.
std::optional<Matrix> indecomposable_isomorphism(const Module& m,
                                                 const Module& n);

// General isomorphism test: decomposes both sides (seed 0) and matches
// summand classes. Returns a verified invertible intertwiner when true.
std::optional<Matrix> isomorphism(const Module& m, const Module& n);
bool is_isomorphic(const Module& m, const Module& n);

struct MatchResult {
    bool matched = false;
    // flattened instance i of d1 -> flattened instance of d2
    std::vector<std::size_t> permutation;
    std::string failure;
};

// Permutation matching of two decompositions, isomorphism-checked pair by
// pair; a failure report on mismatched parents or multiplicities.
MatchResult match_decompositions(const Decomposition& d1,
                                 const Decomposition& d2);

// Deterministic sort fingerprint: dimension, then the flattened RREF of the
// stacked action matrices.
std::vector<std::uint32_t> module_fingerprint(const Module& m);

}  // namespace summand
