#include <doctest.h>

#include <vector>

#include "eqsimp/config.hpp"
#include "eqsimp/equivariant.hpp"
#include "eqsimp/fp_group.hpp"
#include "eqsimp/homalg.hpp"

using namespace eqsimp;

static const std::int64_t B = 1000000;

TEST_CASE("translation spaces are free and contractible") {
    auto z2 = cyclic_group(2);
    auto eg2 = eg_space(z2, 2, B);
    CHECK(eg2.space().count(0) == 2);
    CHECK(eg2.space().count(1) == 4);
    CHECK(eg2.space().count(2) == 8);
    CHECK(is_free_action(eg2).free);
    CHECK(pi0(eg2.space()).count == 1);

    auto z3 = cyclic_group(3);
    auto eg3 = eg_space(z3, 3, B);
    CHECK(eg3.space().count(1) == 9);
    auto h = space_homology(eg3.space());
    CHECK(h[0].rank == 1);
    CHECK(h[1].rank == 0);
    CHECK(h[1].torsion.empty());
    CHECK(h[2].rank == 0);
    CHECK(h[2].torsion.empty());
}

TEST_CASE("tuple coordinates of the translation space") {
    for (int i = 0; i < 27; ++i) {
        auto tup = eg_tuple(3, 2, i);
        CHECK(tup.size() == 3);
        CHECK(eg_index(3, tup) == i);
    }
}

TEST_CASE("classifying spaces have one cell per chain") {
    auto z2 = cyclic_group(2);
    auto bg2 = bg_space(z2, 3, B);
    CHECK(bg2.count(0) == 1);
    for (int n = 1; n <= 3; ++n) {
        int nd = 0;
        for (int i = 0; i < bg2.count(n); ++i)
            if (!bg2.degenerate(n, i)) ++nd;
        CHECK(nd == 1);
    }
    auto nz2 = nerve(one_object_groupoid(z2), 3, B);
    CHECK(find_simplicial_iso(bg2, nz2, B).has_value());
}

TEST_CASE("orbit spaces of the translation action") {
    auto z2 = cyclic_group(2);
    auto q = quotient_space(eg_space(z2, 2, B));
    CHECK(q.space.count(0) == 1);
    CHECK(q.space.count(1) == 2);
}

TEST_CASE("homology of standard spaces") {
    auto d2 = standard_simplex(2, 3);
    auto h = space_homology(d2);
    CHECK(h[0].rank == 1);
    CHECK(h[0].torsion.empty());
    CHECK(h[1].rank == 0);
    CHECK(h[2].rank == 0);

    auto hc = space_homology(circle(3));
    CHECK(hc[0].rank == 1);
    CHECK(hc[1].rank == 1);
    CHECK(hc[1].torsion.empty());
}

TEST_CASE("abelian classifying objects") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    GModule m = GModule::trivial(z2, FinGenAb{0, {2}});
    auto em = em_gspace(m, 1, 3, B);
    auto nz2 = nerve(one_object_groupoid(z2), 3, B);
    CHECK(find_simplicial_iso(em.space(), nz2, B).has_value());

    GModule m32 = GModule::trivial(z3, FinGenAb{0, {3}});
    auto em2 = em_gspace(m32, 2, 3, B);
    CHECK(em2.space().count(0) == 1);
    CHECK(em2.space().count(1) == 1);
    CHECK(em2.space().count(2) == 3);
    auto hk = space_homology(em2.space());
    CHECK(hk[0].rank == 1);
    CHECK(hk[1].rank == 0);
    CHECK(hk[1].torsion.empty());
    CHECK(hk[2].rank == 0);
    CHECK(hk[2].torsion == ZVec{3});
    CHECK(check_kan(em2.space(), 2, B).ok);
}

TEST_CASE("fixed points and freeness witnesses") {
    auto z2 = cyclic_group(2);
    auto x = trivial_gspace(z2, standard_simplex(2, 3));
    auto fp = fixed_points(x, {0, 1});
    CHECK(fp.space.count(0) == 3);

    auto rep = is_free_action(x);
    CHECK_FALSE(rep.free);
    CHECK(rep.witness_g != 0);
    CHECK(x.act(rep.witness_g, rep.witness_level, rep.witness_simplex) == rep.witness_simplex);
}

TEST_CASE("stagewise approximation of the translation space") {
    auto z2 = cyclic_group(2);
    auto eg2 = eg_space(z2, 2, B);
    auto p = postnikov_gspace(eg2, 0, B);
    CHECK(p.space().count(0) == 2);
    CHECK(p.space().count(1) == 4);
}

TEST_CASE("group actions on spaces are validated") {
    auto z2 = cyclic_group(2);
    auto two = skeleton_extend(disjoint_union(standard_simplex(0, 0), standard_simplex(0, 0)), 1);
    std::vector<std::vector<std::vector<int>>> act(2);
    act[0] = {{0, 1}, {0, 1}};
    act[1] = {{1, 0}, {0, 1}};  // swaps vertices but not their degeneracies
    CHECK_THROWS_AS(GSpace(z2, two, act), invalid_input);
    act[1] = {{1, 0}, {1, 0}};
    GSpace ok(z2, two, act);
    CHECK(ok.act(1, 0, 0) == 1);
}

TEST_CASE("path groups of quotients by free actions") {
    auto s3 = symmetric_group(3);
    auto eg = eg_space(s3, 3, B);
    auto r = pi1_of_contractible_quotient(eg, 0, 50, B);
    CHECK(r.kernel_elems == std::vector<int>{s3.identity()});
    CHECK(r.quotient_pi1.group.order() == 6);
    CHECK(find_isomorphism(r.g_mod_k.group, s3).has_value());
    std::vector<int> seen(6, 0);
    for (int v : r.phi) seen[v] = 1;
    for (int b : seen) CHECK(b == 1);
}

TEST_CASE("extensions from actions on classifying spaces") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    auto n3 = nerve(one_object_groupoid(z3), 3, B);
    auto x = trivial_gspace(z2, n3);
    auto e = pi1_extension(x, 0, 50, B);
    CHECK(e.total.order() == 6);
    CHECK(e.kernel.order() == 3);
    CHECK(e.quotient.order() == 2);
    validate_extension(e);
}

TEST_CASE("extension constructors check their maps") {
    auto z2 = cyclic_group(2);
    auto z4 = cyclic_group(4);
    auto e = make_extension(z4, z2, z2, {0, 2}, {0, 1, 0, 1});
    validate_extension(e);
    // projection must be surjective
    CHECK_THROWS_AS(make_extension(z4, z2, z2, {0, 2}, {0, 0, 0, 0}), invalid_input);
    // the projection kernel must be exactly the included subgroup
    auto v4 = direct_product(z2, z2);
    CHECK_THROWS_AS(make_extension(v4, z2, z2, {0, 1}, {0, 1, 0, 1}), invalid_input);
}
