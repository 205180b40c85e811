#pragma once

// Small algebras shared across test suites.

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "summand/algebra.hpp"
#include "summand/module.hpp"

namespace fixtures {

using namespace summand;

inline std::shared_ptr<const Algebra> make_algebra(
    Fp fp, std::size_t dim, std::vector<std::uint32_t> table,
    std::vector<std::uint32_t> one) {
    return std::make_shared<Algebra>(fp, dim, std::move(table), std::move(one));
}

// F_p itself
inline std::shared_ptr<const Algebra> field_algebra(std::uint32_t p) {
    return make_algebra(Fp(p), 1, {1}, {1});
}

// F_p[x]/(x^2), basis {1, x}
inline std::shared_ptr<const Algebra> dual_numbers(std::uint32_t p) {
    std::vector<std::uint32_t> c(8, 0);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
        c[(i * 2 + j) * 2 + k] = 1;
    };
    set(0, 0, 0);  // 1*1 = 1
    set(0, 1, 1);  // 1*x = x
    set(1, 0, 1);  // x*1 = x
    return make_algebra(Fp(p), 2, std::move(c), {1, 0});
}

// F_p x F_p, basis of orthogonal idempotents {e1, e2}
inline std::shared_ptr<const Algebra> product_field(std::uint32_t p) {
    std::vector<std::uint32_t> c(8, 0);
    c[(0 * 2 + 0) * 2 + 0] = 1;
    c[(1 * 2 + 1) * 2 + 1] = 1;
    return make_algebra(Fp(p), 2, std::move(c), {1, 1});
}

// upper triangular 2x2 matrices, basis {e11, e22, e12}
inline std::shared_ptr<const Algebra> upper_triangular2(std::uint32_t p) {
    std::vector<std::uint32_t> c(27, 0);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
        c[(i * 3 + j) * 3 + k] = 1;
    };
    set(0, 0, 0);  // e11 e11 = e11
    set(1, 1, 1);  // e22 e22 = e22
    set(0, 2, 2);  // e11 e12 = e12
    set(2, 1, 2);  // e12 e22 = e12
    return make_algebra(Fp(p), 3, std::move(c), {1, 1, 0});
}

// full 2x2 matrix algebra, basis {e11, e12, e21, e22}
inline std::shared_ptr<const Algebra> mat2(std::uint32_t p) {
    std::vector<std::uint32_t> c(64, 0);
    auto idx = [](std::size_t a, std::size_t b) { return a * 2 + b; };
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t d = 0; d < 2; ++d)
                c[(idx(a, b) * 4 + idx(b, d)) * 4 + idx(a, d)] = 1;
    return make_algebra(Fp(p), 4, std::move(c), {1, 0, 0, 1});
}

// F_p[x,y]/(x^2, y^2), basis {1, x, y, xy}
inline std::shared_ptr<const Algebra> kxy(std::uint32_t p) {
    std::vector<std::uint32_t> c(64, 0);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
        c[(i * 4 + j) * 4 + k] = 1;
    };
    for (std::size_t j = 0; j < 4; ++j) {
        set(0, j, j);               // 1 * b = b
        if (j != 0) set(j, 0, j);   // b * 1 = b
    }
    set(1, 2, 3);  // x y = xy
    set(2, 1, 3);  // y x = xy
    return make_algebra(Fp(p), 4, std::move(c), {1, 0, 0, 0});
}

inline QuiverPresentation a2_quiver() {
    return QuiverPresentation{
        {"1", "2"}, {QuiverArrow{"1", "2", "a"}}, {}};
}

// 1 -> 2 -> 3 with the length-two path killed
inline QuiverPresentation a3_relation_quiver() {
    return QuiverPresentation{
        {"1", "2", "3"},
        {QuiverArrow{"1", "2", "a"}, QuiverArrow{"2", "3", "b"}},
        {{"a", "b"}}};
}

// linear chain with n vertices, no relations
inline QuiverPresentation an_quiver(std::size_t n) {
    QuiverPresentation q;
    for (std::size_t v = 1; v <= n; ++v)
        q.vertices.push_back(std::to_string(v));
    for (std::size_t v = 1; v < n; ++v)
        q.arrows.push_back(QuiverArrow{std::to_string(v),
                                       std::to_string(v + 1),
                                       "a" + std::to_string(v)});
    return q;
}

inline std::shared_ptr<const Algebra> a2_path_algebra(std::uint32_t p) {
    return std::make_shared<Algebra>(
        algebra_from_quiver(a2_quiver(), Fp(p)).algebra);
}

// the trivial 1-dim algebra acting on F_p^n: every vector space is a module
inline Module vector_space_module(std::uint32_t p, std::size_t n) {
    auto a = field_algebra(p);
    std::vector<Matrix> action{Matrix::identity(n, Fp(p))};
    return Module(std::move(a), std::move(action));
}

// group algebra F_p[G] for a group given by its multiplication table
inline std::shared_ptr<const Algebra> group_algebra(
    std::uint32_t p, const std::vector<std::vector<std::size_t>>& mult,
    std::size_t identity) {
    const std::size_t n = mult.size();
    std::vector<std::uint32_t> c(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c[(i * n + j) * n + mult[i][j]] = 1;
    std::vector<std::uint32_t> one(n, 0);
    one[identity] = 1;
    return make_algebra(Fp(p), n, std::move(c), std::move(one));
}

// cyclic group of order three
inline std::shared_ptr<const Algebra> c3_group_algebra(std::uint32_t p) {
    return group_algebra(p, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0);
}

// symmetric group S3 as permutations of {0,1,2}, composed left to right
inline std::shared_ptr<const Algebra> s3_group_algebra(std::uint32_t p) {
    std::vector<std::array<std::size_t, 3>> elems = {
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    auto index_of = [&](const std::array<std::size_t, 3>& perm) {
        for (std::size_t k = 0; k < elems.size(); ++k)
            if (elems[k] == perm) return k;
        throw std::logic_error("not a permutation of 3 points");
    };
    std::vector<std::vector<std::size_t>> mult(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<std::size_t, 3> prod;
            for (std::size_t x = 0; x < 3; ++x) prod[x] = elems[j][elems[i][x]];
            mult[i][j] = index_of(prod);
        }
    return group_algebra(p, mult, 0);
}

// M2(F_p)[t]/(t^2): a matrix ring with a square-zero radical on top, basis
// {e11, e12, e21, e22, t e11, t e12, t e21, t e22}
inline std::shared_ptr<const Algebra> mat2_dual(std::uint32_t p) {
    auto idx = [](std::size_t a, std::size_t b) { return a * 2 + b; };
    std::vector<std::uint32_t> c(8 * 8 * 8, 0);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t d = 0; d < 2; ++d) {
                std::size_t i = idx(a, b), j = idx(b, d), k = idx(a, d);
                c[(i * 8 + j) * 8 + k] = 1;              // e e
                c[((i + 4) * 8 + j) * 8 + (k + 4)] = 1;  // (te) e = t(ee)
                c[(i * 8 + (j + 4)) * 8 + (k + 4)] = 1;  // e (te) = t(ee)
            }
    return make_algebra(Fp(p), 8, std::move(c), {1, 0, 0, 1, 0, 0, 0, 0});
}

}  // namespace fixtures
