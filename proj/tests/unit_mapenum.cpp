#include <doctest.h>

#include <set>
#include <vector>

#include "eqsimp/mapenum.hpp"

using namespace eqsimp;

static const std::int64_t B = 10000000;

static SimplicialSet two_points(int dim_bound) {
    SimplicialData d;
    d.dim_bound = 0;
    d.counts = {2};
    d.faces = {{{}, {}}};
    d.degen = {{{}, {}}};
    return skeleton_extend(SimplicialSet(d), dim_bound);
}

TEST_CASE("map enumeration between small spaces") {
    auto pt = standard_simplex(0, 1);
    auto d1 = standard_simplex(1, 1);
    CHECK(simplicial_maps(pt, d1, 1, B).size() == 2);
    // every enumerated map is simplicial
    for (const auto& f : simplicial_maps(d1, d1, 1, B)) CHECK(is_simplicial_map(d1, d1, f, 1));
}

TEST_CASE("skeleton extension is left adjoint to truncation") {
    SimplicialData d;
    d.dim_bound = 0;
    d.counts = {2};
    d.faces = {{{}, {}}};
    d.degen = {{{}, {}}};
    SimplicialSet s(d);
    auto sk = skeleton_extend(s, 2);
    auto x = standard_simplex(1, 2);
    auto lhs = simplicial_maps(sk, x, 2, B);
    auto rhs = simplicial_maps(s, truncate(x, 0), 0, B);
    CHECK(lhs.size() == 4);
    CHECK(rhs.size() == 4);
    // restriction to level zero matches the maps bijectively
    std::set<std::vector<int>> seen;
    for (const auto& f : lhs) seen.insert(f.values[0]);
    CHECK(seen.size() == lhs.size());
}

TEST_CASE("coskeleton extension is right adjoint to truncation") {
    auto d2 = standard_simplex(2, 2);
    auto t = two_points(0);
    auto lhs = simplicial_maps(truncate(d2, 0), t, 0, B);
    auto cosk = coskeleton_extend(t, 2, B);
    auto rhs = simplicial_maps(d2, cosk, 2, B);
    CHECK(lhs.size() == 8);
    CHECK(rhs.size() == 8);
}

TEST_CASE("homotopy classes through cylinders") {
    auto z2 = cyclic_group(2);
    auto bg2 = bg_space(z2, 2, B);
    auto pt = standard_simplex(0, 2);
    CHECK(homotopy_classes(pt, bg2, 2, B).reps.size() == 1);
    // loops up to homotopy match the fundamental group
    CHECK(homotopy_classes(circle(2), bg2, 2, B).reps.size() == 2);
    // everything into a point is constant
    CHECK(homotopy_classes(standard_simplex(2, 2), pt, 2, B).reps.size() == 1);
}

TEST_CASE("equivariant maps out of the translation space") {
    auto z2 = cyclic_group(2);
    auto bg2 = bg_space(z2, 2, B);
    auto eg = eg_space(z2, 2, B);
    auto x = trivial_gspace(z2, bg2);
    auto cl = equivariant_homotopy_classes(eg, x, 2, B);
    CHECK(cl.reps.size() == 2);
    for (const auto& f : cl.maps) CHECK(is_simplicial_map(eg.space(), bg2, f, 2));
}

TEST_CASE("a free swap admits no equivariant map from the translation space") {
    auto z2 = cyclic_group(2);
    auto x = two_points(1);
    std::vector<std::vector<std::vector<int>>> act(2);
    for (int a = 0; a < 2; ++a) {
        act[a].resize(2);
        for (int n = 0; n <= 1; ++n)
            act[a][n] = (a == 0) ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
    }
    GSpace gx(z2, x, act);
    auto eg = eg_space(z2, 1, B);
    CHECK(equivariant_maps(eg, gx, 1, B).empty());
    // level zero alone cannot see the obstruction
    CHECK(equivariant_maps(truncate_gspace(eg, 0), truncate_gspace(gx, 0), 0, B).size() == 2);
}
