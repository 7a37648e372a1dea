#include <doctest.h>

#include "eqsimp/abelian.hpp"
#include "eqsimp/config.hpp"
#include "eqsimp/zmat.hpp"

using namespace eqsimp;

namespace {

ZMat mat(int rows, int cols, std::vector<long> entries) {
    ZMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = entries[static_cast<size_t>(i) * cols + j];
    return m;
}

}  // namespace

TEST_CASE("smith normal form factors the matrix") {
    auto a = mat(2, 2, {2, 0, 0, 3});
    auto s = smith_normal_form(a);
    CHECK(s.rank == 2);
    CHECK(s.diag == ZVec{1, 6});
    CHECK(s.u * s.d * s.v == a);
    CHECK(s.u * s.u_inv == ZMat::identity(2));
    CHECK(s.v_inv * s.v == ZMat::identity(2));

    auto b = mat(2, 2, {2, 4, 6, 8});
    auto sb = smith_normal_form(b);
    CHECK(sb.diag == ZVec{2, 4});
    CHECK(sb.u * sb.d * sb.v == b);

    auto z = smith_normal_form(ZMat(0, 0));
    CHECK(z.rank == 0);
    CHECK(kernel_basis(z).cols() == 0);
}

TEST_CASE("kernel and image bases") {
    auto a = mat(1, 2, {2, 3});
    auto s = smith_normal_form(a);
    auto k = kernel_basis(s);
    CHECK(k.cols() == 1);
    CHECK((a * k).is_zero());
    auto im = image_basis(s);
    CHECK(im.cols() == 1);
    // the column span of [2 3] is all of Z
    auto g = im.at(0, 0);
    CHECK((g == 1 || g == -1));
}

TEST_CASE("integer linear solve") {
    auto a = mat(1, 1, {2});
    auto s = smith_normal_form(a);
    auto x = solve_linear(s, ZVec{4});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK_FALSE(solve_linear(s, ZVec{3}).has_value());
}

TEST_CASE("matrix arithmetic") {
    auto a = mat(2, 2, {1, 2, 3, 4});
    auto b = mat(2, 2, {0, 1, 1, 0});
    CHECK(a * b == mat(2, 2, {2, 1, 4, 3}));
    CHECK(a + b - b == a);
    CHECK(a.transpose() == mat(2, 2, {1, 3, 2, 4}));
    CHECK(ZMat::hcat(a, b).cols() == 4);
    CHECK(a.apply(ZVec{1, 1}) == ZVec{3, 7});
    CHECK_FALSE(a.is_zero());
    CHECK(ZMat(3, 2).is_zero());
}

TEST_CASE("cokernels in invariant factor form") {
    auto q = cokernel(mat(2, 2, {2, 0, 0, 3}));
    CHECK(q.group().rank == 0);
    CHECK(q.group().torsion == ZVec{6});
    auto free_part = cokernel(ZMat(2, 0));
    CHECK(free_part.group().rank == 2);
    CHECK(free_part.group().torsion.empty());
}

TEST_CASE("subquotients project and lift") {
    // L spanned by (1,0) and (0,2) inside Z^2, M spanned by (0,4)
    auto num = mat(2, 2, {1, 0, 0, 2});
    auto den = mat(2, 1, {0, 4});
    Subquotient sq(2, num, den);
    CHECK(sq.group().rank == 1);
    CHECK(sq.group().torsion == ZVec{2});
    CHECK(sq.contains(ZVec{0, 2}));
    CHECK(sq.contains(ZVec{3, 0}));
    CHECK_FALSE(sq.contains(ZVec{0, 1}));
    auto cls = sq.project(ZVec{0, 2});
    auto rep = sq.lift(cls);
    CHECK(sq.contains(rep));
    CHECK(sq.project(rep) == cls);
    // (0,4) is killed
    CHECK(sq.group().is_zero_elem(sq.project(ZVec{0, 4})));
}

TEST_CASE("abelian group arithmetic and element enumeration") {
    FinGenAb z4{0, {4}};
    CHECK(z4.finite());
    CHECK(z4.order() == 4);
    CHECK(z4.elements(1000).size() == 4);
    CHECK(z4.add(ZVec{3}, ZVec{2}) == ZVec{1});
    CHECK(z4.neg(ZVec{1}) == ZVec{3});
    CHECK(z4.scale(3, ZVec{3}) == ZVec{1});
    CHECK(z4.reduce(ZVec{-1}) == ZVec{3});
    CHECK(z4.str() == "Z/4");

    CHECK(FinGenAb{0, {2, 2}}.str() == "Z/2 + Z/2");
    CHECK(FinGenAb{0, {}}.str() == "0");
    CHECK(FinGenAb{1, {}}.str() == "Z");
    CHECK(FinGenAb{2, {3}}.str() == "Z/3 + Z^2");
    CHECK_FALSE(FinGenAb{1, {}}.finite());
    CHECK_THROWS_AS(FinGenAb{1, {}}.order(), invalid_input);
    CHECK(FinGenAb{0, {2}}.same_shape(FinGenAb{0, {2}}));
    CHECK_FALSE(FinGenAb{0, {2}}.same_shape(FinGenAb{0, {4}}));
}

TEST_CASE("modules over finite groups") {
    auto c2 = cyclic_group(2);
    auto m = GModule::cyclic_with_units(c2, 3, {1, 2});
    CHECK(m.act(1, ZVec{1}) == ZVec{2});
    CHECK(m.act(0, ZVec{1}) == ZVec{1});
    CHECK(m.glen().order() == 2);
    // 0 is not a unit mod 3
    CHECK_THROWS_AS(GModule::cyclic_with_units(c2, 3, {1, 0}), invalid_input);
    // acting by the zero matrix breaks the composition law
    ZMat zero(1, 1);
    CHECK_THROWS_AS(GModule(c2, FinGenAb{0, {3}}, {ZMat::identity(1), zero}), invalid_input);

    auto sign = GModule::sign(c2, {1, -1});
    CHECK(sign.mod().rank == 1);
    CHECK(sign.act(1, ZVec{5}) == ZVec{-5});

    ZMat one = ZMat::identity(1);
    ZMat three = mat(1, 1, {3});
    CHECK(same_module_map(FinGenAb{0, {2}}, FinGenAb{0, {2}}, one, three));
    CHECK_FALSE(same_module_map(FinGenAb{0, {2}}, FinGenAb{0, {2}}, one, mat(1, 1, {0})));
}
