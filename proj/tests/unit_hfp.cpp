#include <doctest.h>

#include <vector>

#include "eqsimp/config.hpp"
#include "eqsimp/equivariant.hpp"
#include "eqsimp/hfp.hpp"
#include "eqsimp/homalg.hpp"
#include "eqsimp/mapenum.hpp"

using namespace eqsimp;

static const std::int64_t B = 2000000;

TEST_CASE("section classes of extensions") {
    auto z2 = cyclic_group(2);
    auto z4 = cyclic_group(4);
    auto v4 = direct_product(z2, z2);

    // the nonsplit order-four extension has no sections
    auto e4 = make_extension(z4, z2, z2, {0, 2}, {0, 1, 0, 1});
    auto s4 = section_classes(e4, B);
    CHECK(s4.sections.empty());
    CHECK(s4.reps.empty());

    // the split extension has two, in two classes
    auto ev = make_extension(v4, z2, z2, {0, 2}, {0, 1, 0, 1});
    auto sv = section_classes(ev, B);
    CHECK(sv.sections.size() == 2);
    CHECK(sv.reps.size() == 2);

    // trivial kernel: the unique section
    auto et = make_extension(z2, trivial_group(), z2, {0}, {0, 1});
    CHECK(section_classes(et, B).reps.size() == 1);
}

TEST_CASE("coskeletal detection") {
    auto z2 = cyclic_group(2);
    auto bg2 = bg_space(z2, 3, B);
    CHECK(is_coskeletal_above(bg2, 2, B));
    GModule m3 = GModule::cyclic_with_units(z2, 3, {1, 2});
    auto k32 = em_gspace(m3, 2, 3, B);
    CHECK_FALSE(is_coskeletal_above(k32.space(), 2, B));
    CHECK(is_coskeletal_above(k32.space(), 3, B));
}

TEST_CASE("abelianized presentations") {
    auto a6 = abelian_presentation(cyclic_group(6));
    CHECK(a6.pres.group().rank == 0);
    CHECK(a6.pres.group().order() == 6);
    auto av = abelian_presentation(direct_product(cyclic_group(2), cyclic_group(2)));
    CHECK(av.pres.group().torsion.size() == 2);
}

TEST_CASE("fixed point classes over a classifying space with trivial action") {
    auto z2 = cyclic_group(2);
    auto bg2 = bg_space(z2, 3, B);
    auto x = trivial_gspace(z2, bg2);

    auto mc = hfp_bruteforce(x, 3, B);
    CHECK(mc.reps.size() == 2);

    auto p2 = pi2_coskeletal(x, B);
    auto rep = hfp_postnikov(x, p2, 50, B);
    CHECK(rep.total == 2);
    CHECK(rep.invariant_components.size() == 1);
    CHECK(rep.cells.size() == 2);
    for (const auto& cell : rep.cells) {
        CHECK(cell.obstruction.extended);
        CHECK(cell.classes.size() == 1);
    }

    auto pg = e2_page(x, rep.brute.maps[rep.brute.reps[0]], p2, 2, 3, 50, B);
    CHECK(pg.entry[0][0].set_size == 1);
    CHECK(pg.entry[1][0].set_size == 2);
    CHECK(pg.entry[1][1].set_size == 2);
    CHECK(pg.entry[1][2].set_size == 2);
    CHECK(pg.entry[2][0].is_group);
    CHECK(pg.entry[2][0].set_size == 1);
    CHECK_FALSE(pg.entry[1][3].in_region);
    CHECK(pg.entry[0][1].in_region);
    CHECK_FALSE(pg.entry[0][1].computed);
}

TEST_CASE("an inverted coefficient in degree two leaves one class") {
    auto z2 = cyclic_group(2);
    GModule m3 = GModule::cyclic_with_units(z2, 3, {1, 2});
    auto k32 = em_gspace(m3, 2, 3, B);
    auto mc = hfp_bruteforce(k32, 3, B);
    CHECK(mc.reps.size() == 1);
    auto p2 = pi2_of_em(k32, m3);
    auto rep = hfp_postnikov(k32, p2, 50, B);
    CHECK(rep.total == 1);
    CHECK(rep.cells.size() == 1);
    CHECK(rep.cells[0].classes.size() == 1);
    auto pg = e2_page(k32, rep.brute.maps[rep.brute.reps[0]], p2, 2, 3, 50, B);
    CHECK(pg.entry[1][0].set_size == 1);
    CHECK(pg.entry[2][0].set_size == 1);
    CHECK(pg.entry[2][1].set_size == 1);
    CHECK(pg.entry[2][2].set_size == 1);
}

TEST_CASE("degree two classes act on the fixed point set") {
    auto z2 = cyclic_group(2);
    GModule m2 = GModule::trivial(z2, FinGenAb{0, {2}});
    auto k22 = em_gspace(m2, 2, 3, B);
    auto mc = hfp_bruteforce(k22, 3, B);
    CHECK(mc.reps.size() == 2);
    auto p2 = pi2_of_em(k22, m2);
    auto rep = hfp_postnikov(k22, p2, 50, B);
    CHECK(rep.total == 2);
    CHECK(rep.cells.size() == 1);
    CHECK(rep.cells[0].classes.size() == 2);

    // adding a nonzero degree-two class moves between the two classes
    auto h2 = group_cohomology(m2, 2);
    CHECK(h2.group().torsion == ZVec{2});
    ZVec flat = h2.lift(ZVec{1});
    std::vector<ZVec> c2(4);
    for (int b = 0; b < 4; ++b) c2[b] = ZVec{flat[b]};
    auto eg = eg_space(z2, 3, B);
    const SimplicialMap& f0 = rep.brute.maps[rep.brute.reps[0]];
    auto tw = add_cocycle_to_map(eg, k22, p2, f0, c2, B);
    int found = -1;
    for (size_t i = 0; i < rep.brute.maps.size(); ++i)
        if (rep.brute.maps[i] == tw) found = static_cast<int>(i);
    REQUIRE(found >= 0);
    CHECK(rep.brute.class_of[found] != rep.brute.class_of[rep.brute.reps[0]]);

    // the zero cochain keeps the class
    std::vector<ZVec> zc(4, ZVec{0});
    auto tz = add_cocycle_to_map(eg, k22, p2, f0, zc, B);
    int fz = -1;
    for (size_t i = 0; i < rep.brute.maps.size(); ++i)
        if (rep.brute.maps[i] == tz) fz = static_cast<int>(i);
    REQUIRE(fz >= 0);
    CHECK(rep.brute.class_of[fz] == rep.brute.class_of[rep.brute.reps[0]]);
}

TEST_CASE("a free target has no fixed points at all") {
    auto z2 = cyclic_group(2);
    auto two = disjoint_union(standard_simplex(0, 3), standard_simplex(0, 3));
    std::vector<std::vector<std::vector<int>>> act(2);
    for (int g = 0; g < 2; ++g) {
        act[g].resize(4);
        for (int n = 0; n <= 3; ++n) {
            act[g][n].resize(two.count(n));
            for (int i = 0; i < two.count(n); ++i)
                act[g][n][i] = g == 0 ? i : (i == 0 ? 1 : 0);
        }
    }
    GSpace x(z2, two, act);
    auto mc = hfp_bruteforce(x, 3, B);
    CHECK(mc.maps.empty());
    CHECK(mc.reps.empty());
    auto p2 = pi2_coskeletal(x, B);
    auto rep = hfp_postnikov(x, p2, 50, B);
    CHECK(rep.total == 0);
    CHECK(rep.invariant_components.empty());
    CHECK(rep.cells.empty());
}

TEST_CASE("a point target has exactly one class") {
    auto z2 = cyclic_group(2);
    auto pt = trivial_gspace(z2, standard_simplex(0, 3));
    auto mc = hfp_bruteforce(pt, 3, B);
    CHECK(mc.reps.size() == 1);
    auto p2 = pi2_coskeletal(pt, B);
    auto rep = hfp_postnikov(pt, p2, 50, B);
    CHECK(rep.total == 1);
    CHECK(rep.cells.size() == 1);
    auto pg = e2_page(pt, rep.brute.maps[rep.brute.reps[0]], p2, 2, 2, 50, B);
    CHECK(pg.entry[0][0].set_size == 1);
    CHECK(pg.entry[1][0].set_size == 1);
    CHECK(pg.entry[1][1].set_size == 1);
    CHECK(pg.entry[2][2].set_size == 1);
}

TEST_CASE("degree two metadata from sphere classes") {
    auto z2 = cyclic_group(2);
    GModule m3 = GModule::cyclic_with_units(z2, 3, {1, 2});
    auto k32 = em_gspace(m3, 2, 3, B);
    auto hw = pi2_by_hurewicz(k32, 50, B);
    CHECK(hw.module.mod().rank == 0);
    CHECK(hw.module.mod().order() == 3);
    auto rep = hfp_postnikov(k32, hw, 50, B);
    CHECK(rep.total == 1);
}

TEST_CASE("product targets multiply their class counts") {
    auto z2 = cyclic_group(2);
    GModule m2 = GModule::trivial(z2, FinGenAb{0, {2}});
    GModule m3 = GModule::cyclic_with_units(z2, 3, {1, 2});
    auto a = em_gspace(m2, 2, 3, B);
    auto b = em_gspace(m3, 2, 3, B);
    auto ab = product_gspace(a, b, 3, B);
    auto pa = pi2_of_em(a, m2);
    auto pb = pi2_of_em(b, m3);
    auto pp = pi2_of_product(ab, a, b, pa, pb);
    CHECK(pp.module.mod().order() == 6);
    auto rep = hfp_postnikov(ab, pp, 50, B);
    CHECK(rep.total == 2);
}

TEST_CASE("level bounds of the brute force search are enforced") {
    auto z2 = cyclic_group(2);
    auto pt = trivial_gspace(z2, standard_simplex(0, 3));
    CHECK_THROWS_AS(hfp_bruteforce(pt, 0, B), invalid_input);
    CHECK_THROWS_AS(hfp_bruteforce(pt, 4, B), invalid_input);
}
