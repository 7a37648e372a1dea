#include <doctest.h>

#include "eqsimp/abelian.hpp"
#include "eqsimp/config.hpp"
#include "eqsimp/homalg.hpp"

using namespace eqsimp;

namespace {

ZMat mat1(long v) {
    ZMat m(1, 1);
    m.at(0, 0) = v;
    return m;
}

}  // namespace

TEST_CASE("group cohomology of cyclic groups") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);

    GModule m = GModule::trivial(z2, FinGenAb{0, {2}});
    auto h1 = group_cohomology(m, 1);
    CHECK(h1.group().rank == 0);
    CHECK(h1.group().torsion == ZVec{2});

    GModule zmod = GModule::trivial(z3, FinGenAb{1, {}});
    CHECK(group_cohomology(zmod, 2).group().torsion == ZVec{3});
    auto h1z = group_cohomology(zmod, 1);
    CHECK(h1z.group().rank == 0);
    CHECK(h1z.group().torsion.empty());

    // inversion kills every positive degree over an order-two group
    GModule m3 = GModule::cyclic_with_units(z2, 3, {1, 2});
    CHECK(group_cohomology(m3, 1).group().order() == 1);
    CHECK(group_cohomology(m3, 0).group().order() == 1);
    CHECK(group_cohomology(m3, 2).group().order() == 1);
}

TEST_CASE("fixed point groups of abelian classifying objects") {
    auto z2 = cyclic_group(2);
    GModule m = GModule::trivial(z2, FinGenAb{0, {2}});
    auto h1 = em_fixed_points(m, 1);
    CHECK(h1.rank == 0);
    CHECK(h1.torsion == ZVec{2});
    CHECK(em_fixed_points(m, 0).torsion == ZVec{2});

    GModule minv = GModule::cyclic_with_units(z2, 3, {1, 2});
    CHECK(em_fixed_points(minv, 2).torsion.empty());
    CHECK(em_fixed_points(minv, 0).torsion.empty());
}

TEST_CASE("chain complex homology") {
    FinGenAb Z{1, {}};
    auto c = make_chain_complex(0, {Z, Z}, {ZMat(1, 0), mat1(2)});
    auto h0 = homology_at(c, 0);
    CHECK(h0.group().rank == 0);
    CHECK(h0.group().torsion == ZVec{2});
    CHECK(homology_at(c, 1).group().order() == 1);
    auto all = chain_homology(c);
    CHECK(all.size() == 2);
    CHECK(all[0].torsion == ZVec{2});

    // mismatched shapes are rejected
    CHECK_THROWS_AS(make_chain_complex(0, {Z, Z}, {ZMat(1, 0)}), invalid_input);
    // a differential that fails to square to zero is rejected
    FinGenAb z2m{0, {2}};
    CHECK_THROWS_AS(
        make_chain_complex(0, {z2m, z2m, z2m}, {ZMat(1, 0), mat1(1), mat1(1)}),
        invalid_input);
}

TEST_CASE("normalization round trip preserves homology") {
    FinGenAb Z{1, {}};
    auto c = make_chain_complex(0, {Z, Z}, {ZMat(1, 0), mat1(2)});
    auto sab = dold_kan_overline(c, 3);
    auto back = moore_underline(sab);
    auto hb0 = homology_at(back, 0);
    CHECK(hb0.group().rank == 0);
    CHECK(hb0.group().torsion == ZVec{2});
    CHECK(homology_at(back, 1).group().order() == 1);
    CHECK(homology_at(back, 2).group().order() == 1);
}

TEST_CASE("equivariant complexes validate their differentials") {
    auto z2 = cyclic_group(2);
    GModule m2 = GModule::trivial(z2, FinGenAb{0, {2}});
    GModule zero = GModule::trivial(z2, FinGenAb{0, {}});
    auto gc = make_gcomplex(z2, 0, {m2, zero, m2}, {ZMat(), ZMat(1, 0), ZMat(0, 1)});
    CHECK(gc.lo == 0);
    CHECK(gc.hi() == 2);
    // the square of the differential must vanish
    CHECK_THROWS_AS(
        make_gcomplex(z2, 0, {m2, m2, m2}, {ZMat(), mat1(1), mat1(1)}),
        invalid_input);
}

TEST_CASE("hypercohomology of a two step complex") {
    auto z2 = cyclic_group(2);
    GModule m2 = GModule::trivial(z2, FinGenAb{0, {2}});
    GModule zero = GModule::trivial(z2, FinGenAb{0, {}});
    auto gc = make_gcomplex(z2, 0, {m2, zero, m2}, {ZMat(), ZMat(1, 0), ZMat(0, 1)});
    auto grp = hypercohomology(gc, 1).group();
    CHECK(grp.rank == 0);
    CHECK(grp.torsion == ZVec{2, 2});

    // suspension shifts the answer degree for degree
    auto sus = suspend(gc, 1);
    CHECK(hypercohomology(sus, 2).group().same_shape(grp));
    CHECK(hypercohomology(sus, 1).group().same_shape(hypercohomology(gc, 0).group()));

    // a complex concentrated in one degree reduces to group cohomology
    auto conc = concentrated_gcomplex(m2, 1);
    auto hc2 = hypercohomology(conc, 2).group();
    auto hg3 = group_cohomology(m2, 3).group();
    CHECK(hc2.rank == hg3.rank);
    CHECK(hc2.torsion == hg3.torsion);
}

TEST_CASE("truncations of complexes") {
    auto z2 = cyclic_group(2);
    GModule m2 = GModule::trivial(z2, FinGenAb{0, {2}});
    GModule zero = GModule::trivial(z2, FinGenAb{0, {}});
    auto gc = make_gcomplex(z2, 0, {m2, zero, m2}, {ZMat(), ZMat(1, 0), ZMat(0, 1)});
    auto below = truncate_above(gc, 1);
    CHECK(below.lo == 0);
    CHECK(below.hi() == 1);
    auto above = truncate_below(gc, 1);
    CHECK(above.lo == 1);
    CHECK(above.hi() == 2);
    // the bottom truncation alone behaves like a concentrated module
    CHECK(hypercohomology(below, 1).group().torsion == ZVec{2});
}

TEST_CASE("long exact sequences from short exact sequences of modules") {
    auto z2 = cyclic_group(2);
    GModule a = GModule::trivial(z2, FinGenAb{0, {2}});
    GModule b = GModule::trivial(z2, FinGenAb{0, {4}});
    GModule c = GModule::trivial(z2, FinGenAb{0, {2}});
    auto ses = make_ses(concentrated_gcomplex(a, 0), concentrated_gcomplex(b, 0),
                        concentrated_gcomplex(c, 0), {mat1(2)}, {mat1(1)});
    auto rep = les_check(ses, 0, 3);
    CHECK(rep.exact);
    CHECK(rep.ha[1].order() == 2);
    CHECK(rep.hb[1].order() == 2);

    // a non-exact middle map is detected when building the sequence
    CHECK_THROWS_AS(make_ses(concentrated_gcomplex(a, 0), concentrated_gcomplex(b, 0),
                             concentrated_gcomplex(c, 0), {mat1(0)}, {mat1(1)}),
                    invalid_input);
}
