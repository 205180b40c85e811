#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "summand/errors.hpp"
#include "summand/module.hpp"

using namespace summand;

namespace {

// the two indecomposable projectives of the A2 path algebra, as submodules
// of the regular module: big = e1*Lambda = {e(1), a}, small = e2*Lambda
struct A2Fixture {
    std::shared_ptr<const Algebra> algebra;
    Module regular, p_big, p_small, s_big, s_small;

    explicit A2Fixture(std::uint32_t p)
        : algebra(fixtures::a2_path_algebra(p)),
          regular(regular_module(algebra)),
          p_big(submodule_module(
                    regular, Matrix::from_rows(Fp(p), {{1, 0, 0}, {0, 0, 1}}))
                    .sub),
          p_small(submodule_module(regular,
                                   Matrix::from_rows(Fp(p), {{0, 1, 0}}))
                      .sub),
          s_big(quotient_module(p_big, radical_of_module(p_big)).quotient),
          s_small(p_small) {}
};

}  // namespace

TEST_CASE("module construction validates") {
    auto a = fixtures::a2_path_algebra(5);
    // wrong count
    CHECK_THROWS_AS(Module(a, {Matrix::identity(2, Fp(5))}), ValidationError);
    // action of the unit must be the identity
    {
        std::vector<Matrix> act(3, Matrix(2, 2, Fp(5)));
        CHECK_THROWS_AS(Module(a, std::move(act)), ValidationError);
    }
    // incompatible with structure constants: e(1) idempotent fails
    {
        std::vector<Matrix> act;
        act.push_back(Matrix::from_rows(Fp(5), {{0, 1}, {0, 0}}));  // e1
        act.push_back(Matrix::identity(2, Fp(5)) -
                      Matrix::from_rows(Fp(5), {{0, 1}, {0, 0}}));  // e2
        act.push_back(Matrix(2, 2, Fp(5)));                         // a
        CHECK_THROWS_AS(Module(a, std::move(act)), ValidationError);
    }
    CHECK(Module::zero(a).dim() == 0);
}

TEST_CASE("hom spaces over A2") {
    A2Fixture f(5);
    CHECK(hom_space(f.p_big, f.p_big).dim() == 1);
    CHECK(hom_space(f.p_small, f.p_small).dim() == 1);
    // one direction carries the radical embedding, the other is zero
    CHECK(hom_space(f.p_small, f.p_big).dim() == 1);
    CHECK(hom_space(f.p_big, f.p_small).dim() == 0);
    // distinct simples have no morphisms between them
    CHECK(hom_space(f.s_big, f.s_small).dim() == 0);
    CHECK(hom_space(f.s_small, f.s_big).dim() == 0);
    // hom into the zero module is empty
    CHECK(hom_space(f.p_big, Module::zero(f.algebra)).dim() == 0);

    // every basis element is an intertwiner
    HomSpace h = hom_space(f.p_small, f.p_big);
    for (const auto& t : h.basis())
        CHECK(is_intertwiner(f.p_small, f.p_big, t));

    auto other = fixtures::vector_space_module(5, 2);
    CHECK_THROWS_AS(hom_space(f.p_big, other), ValidationError);
}

TEST_CASE("hom additivity over direct sums") {
    A2Fixture f(7);
    std::vector<Module> parts = {f.p_big, f.p_small};
    Module sum = direct_sum(f.algebra, parts).sum;
    for (const Module* n : {&f.p_big, &f.p_small, &f.s_big}) {
        CHECK(hom_space(sum, *n).dim() ==
              hom_space(f.p_big, *n).dim() + hom_space(f.p_small, *n).dim());
        CHECK(hom_space(*n, sum).dim() ==
              hom_space(*n, f.p_big).dim() + hom_space(*n, f.p_small).dim());
    }
}

TEST_CASE("endomorphism algebras") {
    A2Fixture f(5);
    // simple module: End = F_p
    EndAlgebra end_s = end_algebra(f.s_big);
    CHECK(end_s.dim() == 1);
    CHECK(is_local(*end_s.algebra).local);

    // m + m for a 1-dim module over the trivial algebra: 2x2 matrices
    auto triv = fixtures::field_algebra(5);
    Module line = fixtures::vector_space_module(5, 1);
    std::vector<Module> two = {line, line};
    Module mm = direct_sum(triv, two).sum;
    EndAlgebra end_mm = end_algebra(mm);
    CHECK(end_mm.dim() == 4);
    CHECK(!end_mm.algebra->is_commutative());
    CHECK(jacobson_radical(*end_mm.algebra).basis.rows() == 0);
    CHECK(!is_local(*end_mm.algebra).local);

    // zero module: the degenerate zero-dimensional algebra
    EndAlgebra end_zero = end_algebra(Module::zero(f.algebra));
    CHECK(end_zero.dim() == 0);

    // multiplication matches composition: (g1 g2) acts like "g2 first"
    EndAlgebra end_reg = end_algebra(f.regular);
    for (std::size_t i = 0; i < end_reg.dim(); ++i)
        for (std::size_t j = 0; j < end_reg.dim(); ++j) {
            std::vector<std::uint32_t> ei(end_reg.dim(), 0), ej(end_reg.dim(), 0);
            ei[i] = 1;
            ej[j] = 1;
            auto prod = end_reg.algebra->multiply(ei, ej);
            CHECK(end_reg.to_matrix(prod) ==
                  end_reg.basis[j] * end_reg.basis[i]);
        }
}

TEST_CASE("direct sums carry exact witnesses") {
    A2Fixture f(5);
    std::vector<Module> parts = {f.p_big, f.p_small, f.s_big};
    DirectSum ds = direct_sum(f.algebra, parts);
    CHECK(ds.sum.dim() == 4);

    Matrix total(ds.sum.dim(), ds.sum.dim(), Fp(5));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        CHECK(ds.iotas[i] * ds.pis[i] ==
              Matrix::identity(parts[i].dim(), Fp(5)));
        CHECK(is_intertwiner(parts[i], ds.sum, ds.iotas[i]));
        CHECK(is_intertwiner(ds.sum, parts[i], ds.pis[i]));
        total += ds.pis[i] * ds.iotas[i];
    }
    CHECK(total == Matrix::identity(ds.sum.dim(), Fp(5)));

    // empty sum is the zero module
    CHECK(direct_sum(f.algebra, std::span<const Module>{}).sum.dim() == 0);

    // singleton sum is the module itself with identity witnesses
    std::vector<Module> one = {f.p_big};
    DirectSum single = direct_sum(f.algebra, one);
    CHECK(single.sum.dim() == f.p_big.dim());
    CHECK(single.iotas[0] == Matrix::identity(2, Fp(5)));
}

TEST_CASE("module radicals") {
    A2Fixture f(5);
    // semisimple module: zero radical
    CHECK(radical_of_module(f.s_big).rows() == 0);
    CHECK(radical_of_module(f.s_small).rows() == 0);
    // the big projective has the arrow image as its radical
    CHECK(radical_of_module(f.p_big).rows() == 1);
    // regular module: rad = J
    CHECK(radical_of_module(f.regular).rows() == 1);

    // over kxy: Y = rad Lambda has rad Y = span{xy}, dim 1
    auto kxy = fixtures::kxy(5);
    Module reg = regular_module(kxy);
    Module y = submodule_module(
                   reg, Matrix::from_rows(
                            Fp(5), {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}))
                   .sub;
    CHECK(y.dim() == 3);
    Matrix rad_y = radical_of_module(y);
    REQUIRE(rad_y.rows() == 1);
    // in the coordinates of y = {x, y, xy}, the radical is the xy line
    CHECK(rad_y(0, 0) == 0);
    CHECK(rad_y(0, 1) == 0);
    CHECK(rad_y(0, 2) == 1);
}

TEST_CASE("nakayama across the fixture corpus") {
    A2Fixture f(5);
    auto kxy = fixtures::kxy(5);
    std::vector<Module> corpus = {f.regular, f.p_big, f.p_small, f.s_big,
                                  regular_module(kxy),
                                  Module::zero(f.algebra)};
    for (const auto& m : corpus) {
        Matrix rad = radical_of_module(m);
        // m J = m only for m = 0
        CHECK((rad.rows() == m.dim()) == (m.dim() == 0));
        // rad(m / rad m) = 0
        Module top = quotient_module(m, rad).quotient;
        CHECK(radical_of_module(top).rows() == 0);
    }
}

TEST_CASE("quotient modules") {
    A2Fixture f(5);
    // quotient by zero: isomorphic copy
    {
        QuotientModule q = quotient_module(f.p_big, Matrix(0, 2, Fp(5)));
        CHECK(q.quotient.dim() == 2);
        CHECK(is_invertible(q.projection));
    }
    // quotient by everything: zero module
    {
        QuotientModule q =
            quotient_module(f.p_big, Matrix::identity(2, Fp(5)));
        CHECK(q.quotient.dim() == 0);
    }
    // top of the big projective is the big simple
    {
        QuotientModule top =
            quotient_module(f.p_big, radical_of_module(f.p_big));
        CHECK(top.quotient.dim() == 1);
        CHECK(hom_space(top.quotient, f.s_big).dim() == 1);
        // projection is a surjective intertwiner with kernel = rad
        CHECK(is_intertwiner(f.p_big, top.quotient, top.projection));
        CHECK(rank_of(top.projection) == 1);
    }
    // non-stable subspace is rejected with a named witness
    {
        CHECK_THROWS_WITH_AS(
            quotient_module(f.regular,
                            Matrix::from_rows(Fp(5), {{1, 0, 0}})),
            doctest::Contains("not a submodule"), ValidationError);
    }
}

TEST_CASE("split idempotents") {
    A2Fixture f(5);
    // identity splits off the whole module
    {
        SplitSummand s = split_idempotent(f.p_big, Matrix::identity(2, Fp(5)));
        CHECK(s.summand.dim() == 2);
        CHECK(s.iota * s.pi == Matrix::identity(2, Fp(5)));
    }
    // zero splits off the zero module
    {
        SplitSummand s = split_idempotent(f.p_big, Matrix(2, 2, Fp(5)));
        CHECK(s.summand.dim() == 0);
    }
    // the worked 2x2 idempotent over the trivial algebra
    {
        Module plane = fixtures::vector_space_module(5, 2);
        Matrix e = Matrix::from_rows(Fp(5), {{1, 1}, {0, 0}});
        SplitSummand s = split_idempotent(plane, e);
        CHECK(s.summand.dim() == 1);
        CHECK(s.pi * s.iota == e);
        CHECK(s.iota * s.pi == Matrix::identity(1, Fp(5)));
    }
    // non-idempotents and non-intertwiners are rejected
    {
        Module plane = fixtures::vector_space_module(5, 2);
        CHECK_THROWS_AS(
            split_idempotent(plane, Matrix::from_rows(Fp(5), {{1, 1}, {0, 2}})),
            ValidationError);
        Matrix not_morphism = Matrix::from_rows(Fp(5), {{0, 0, 1}});
        CHECK_THROWS_AS(split_idempotent(f.p_big, not_morphism),
                        ValidationError);
    }
}

TEST_CASE("split witnesses recover the idempotent on the regular module") {
    A2Fixture f(7);
    // left multiplication by e(1) is an idempotent endomorphism of the
    // regular right module (right multiplications are not intertwiners)
    std::vector<std::uint32_t> e1 = {1, 0, 0};
    Matrix e = f.algebra->left_mult(e1);
    SplitSummand s = split_idempotent(f.regular, e);
    CHECK(s.summand.dim() == 2);
    CHECK(s.pi * s.iota == e);
    CHECK(s.iota * s.pi == Matrix::identity(2, Fp(7)));
    CHECK(is_intertwiner(s.summand, f.regular, s.iota));
    CHECK(is_intertwiner(f.regular, s.summand, s.pi));
}

TEST_CASE("projectivization preserves hom dimensions") {
    A2Fixture f(5);
    Projectivization proj = projectivize(f.regular);
    CHECK(proj.gamma.dim() == 3);

    // F x is the regular gamma-module
    Module fx = proj.apply(f.regular);
    CHECK(fx.dim() == proj.gamma.dim());
    CHECK(hom_space(fx, fx).dim() ==
          hom_space(f.regular, f.regular).dim());

    const Module* pool[] = {&f.p_big, &f.p_small, &f.regular};
    for (const Module* m : pool)
        for (const Module* n : pool) {
            Module fm = proj.apply(*m);
            Module fn = proj.apply(*n);
            CHECK(hom_space(*m, *n).dim() == hom_space(fm, fn).dim());
        }

    // the zero module goes to the zero gamma-module
    CHECK(proj.apply(Module::zero(f.algebra)).dim() == 0);
}
