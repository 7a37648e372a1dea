#include <doctest.h>

#include <algorithm>
#include <vector>

#include "eqsimp/abelian.hpp"
#include "eqsimp/config.hpp"
#include "eqsimp/equivariant.hpp"
#include "eqsimp/hfp.hpp"
#include "eqsimp/localglobal.hpp"

using namespace eqsimp;

static const std::int64_t SB = 100000;
static const std::int64_t EB = 10000000;

namespace {

// (a, b) in the four-group sits at index a*2 + b
const std::vector<int> sub_a = {0, 1};
const std::vector<int> sub_b = {0, 2};
const std::vector<int> sub_d = {0, 3};
const std::vector<int> full4 = {0, 1, 2, 3};
const std::vector<int> just_e = {0};

FiniteGroup four_group() { return direct_product(cyclic_group(2), cyclic_group(2)); }

PlaceFamily three_cyclic_places() {
    PlaceFamily fam;
    fam.group = four_group();
    fam.places = {{sub_a, just_e}, {sub_b, just_e}, {sub_d, just_e}};
    fam.ramified = {1, 1, 1};
    return fam;
}

GSpace base_gspace() { return trivial_gspace(four_group(), bg_space(cyclic_group(2), 2, SB)); }

}  // namespace

TEST_CASE("place families require normal inertia") {
    auto s3 = symmetric_group(3);
    int tr = -1;
    for (int x = 1; x < 6; ++x)
        if (s3.op(x, x) == s3.identity() && tr < 0) tr = x;
    PlaceFamily bad;
    bad.group = s3;
    bad.places = {{{0, 1, 2, 3, 4, 5}, {0, tr}}};
    std::sort(bad.places[0].inertia.begin(), bad.places[0].inertia.end());
    bad.ramified = {1};
    CHECK_THROWS_AS(validate_place_family(bad), invalid_input);
}

TEST_CASE("restriction along three cyclic places") {
    const auto x = base_gspace();
    const auto d3 = localize(x, three_cyclic_places(), 2, EB);
    CHECK(d3.global.reps.size() == 4);
    for (const auto& loc : d3.local) CHECK(loc.classes.reps.size() == 2);

    // the constant map pins the trivial global class
    int triv_global = -1;
    SimplicialMap cst;
    cst.values.resize(3);
    const int e1 = x.space().degen_of(0, 0, 0);
    const int e2 = x.space().degen_of(1, e1, 0);
    cst.values[0].assign(4, 0);
    cst.values[1].assign(16, e1);
    cst.values[2].assign(64, e2);
    for (int m = 0; m < static_cast<int>(d3.global.maps.size()); ++m) {
        SimplicialMap cand;
        cand.values.assign(d3.global.maps[m].values.begin(),
                           d3.global.maps[m].values.begin() + 3);
        if (cand == cst) triv_global = d3.global.class_of[m];
    }
    REQUIRE(triv_global >= 0);

    // each place sees a two-to-one restriction onto its local set
    for (int v = 0; v < 3; ++v) {
        const int tloc = d3.loc_of[triv_global][v];
        int hits = 0;
        for (int g = 0; g < 4; ++g)
            if (d3.loc_of[g][v] == tloc) ++hits;
        CHECK(hits == 2);
    }

    // the trivial tuple has a singleton fiber
    auto zero = loc_map(d3, triv_global);
    CHECK(loc_fiber(d3, zero) == std::vector<int>{triv_global});

    // fibers partition the global classes over the full tuple set
    auto pts = adelic_set(d3, EB);
    CHECK(pts.size() == 8);
    std::size_t total = 0;
    int survivors = 0;
    for (const auto& t : pts) {
        const auto fib = loc_fiber(d3, t);
        total += fib.size();
        if (!fib.empty()) ++survivors;
    }
    CHECK(total == 4);
    CHECK(survivors == 4);
    const auto surv = obstruction_set(d3, pts);
    CHECK(static_cast<int>(surv.size()) == survivors);
    for (const auto& s : surv) CHECK(loc_fiber(d3, pts[s.point]).front() == s.witness);

    // flipping one coordinate of a realized tuple empties its fiber
    auto flipped = loc_map(d3, triv_global);
    flipped.local_class[0] = 1 - flipped.local_class[0];
    CHECK(loc_fiber(d3, flipped).empty());
}

TEST_CASE("restriction to the whole group and to the trivial subgroup") {
    const auto x = base_gspace();
    PlaceFamily fam;
    fam.group = four_group();
    fam.places = {{full4, just_e}, {just_e, just_e}};
    fam.ramified = {1, 1};
    const auto d = localize(x, fam, 2, EB);
    CHECK(d.local[0].classes.reps.size() == 4);
    for (int g = 0; g < 4; ++g) CHECK(d.loc_of[g][0] == g);
    CHECK(d.local[1].classes.reps.size() == 1);
    for (int g = 0; g < 4; ++g) CHECK(d.loc_of[g][1] == 0);
}

TEST_CASE("full inertia cuts the tuple set to the constant class") {
    const auto x = base_gspace();
    PlaceFamily fam;
    fam.group = four_group();
    fam.places = {{sub_a, sub_a}, {sub_b, sub_b}};
    fam.ramified = {0, 0};
    const auto d = localize(x, fam, 2, EB);
    for (int v = 0; v < 2; ++v) {
        CHECK(d.unram[v].inner.reps.size() == 1);
        CHECK(d.unram[v].image.size() == 1);
    }
    const auto pts = adelic_set(d, EB);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].unramified_witness[0] >= 0);
    CHECK(pts[0].unramified_witness[1] >= 0);
    CHECK(loc_fiber(d, pts[0]).size() == 1);

    // a class that is not unramified fails tuple validation
    int ramified_global = -1;
    for (int g = 0; g < 4; ++g) {
        auto t = loc_map(d, g);
        if (t.unramified_witness[0] == -1 || t.unramified_witness[1] == -1) {
            ramified_global = g;
            CHECK_THROWS_AS(validate_adelic_tuple(d, t), invalid_input);
            break;
        }
    }
    CHECK(ramified_global >= 0);
}

TEST_CASE("trivial inertia imposes no condition") {
    const auto x = base_gspace();
    PlaceFamily fam;
    fam.group = four_group();
    fam.places = {{sub_d, just_e}};
    fam.ramified = {0};
    const auto d = localize(x, fam, 2, EB);
    CHECK(d.unram[0].image.size() == 2);
    CHECK(adelic_set(d, EB).size() == 2);
}

TEST_CASE("freely acting inertia leaves nothing unramified") {
    const auto free_x = eg_space(cyclic_group(2), 2, SB);
    const auto ambient = hfp_bruteforce(free_x, 2, EB);
    CHECK(ambient.reps.size() == 1);
    const auto u = unramified_classes(free_x, {0, 1}, ambient, 2, EB);
    CHECK(u.fixed.space.count(0) == 0);
    CHECK(u.inner.maps.empty());
    CHECK(u.image.empty());
}

TEST_CASE("malformed restriction input is rejected") {
    const auto x = base_gspace();
    const auto d3 = localize(x, three_cyclic_places(), 2, EB);
    SimplicialMap short_map;
    short_map.values = {{0}};
    CHECK_THROWS_AS(restrict_class(x, short_map, d3.local[0]), invalid_input);
}

TEST_CASE("kernels of coordinate maps") {
    FinGenAb a{1, {4}};
    FinGenAb b{0, {2}};
    ZMat f(1, 2);
    f.at(0, 0) = 1;
    const auto k = kernel_subquotient(a, b, f);
    CHECK(k.group().rank == 1);
    CHECK(k.group().torsion == ZVec{2});
}

TEST_CASE("vanishing kernels across a family of subgroups") {
    auto g4 = four_group();
    const GModule m = GModule::trivial(g4, FinGenAb{0, {2}});

    PlaceFamily none;
    none.group = g4;
    const auto s_all = sha_kernel(m, 1, none, EB);
    CHECK(s_all.kernel.group().finite());
    CHECK(s_all.kernel.group().order() == 4);

    const auto s1 = sha_kernel(m, 1, three_cyclic_places(), EB);
    CHECK(s1.kernel.group().order() == 1);

    const auto s2 = sha_kernel(m, 2, three_cyclic_places(), EB);
    CHECK(s2.global.group().order() == 8);
    for (const auto& l : s2.local) CHECK(l.group().order() == 2);
    CHECK(s2.kernel.group().order() == 1);
}

TEST_CASE("a surviving kernel class over the nine group") {
    const auto c3 = cyclic_group(3);
    const auto g9 = direct_product(c3, c3);  // (a, b) at a*3 + b
    const GModule m = GModule::trivial(g9, FinGenAb{0, {3}});
    PlaceFamily fam;
    fam.group = g9;
    fam.places = {{{0, 1, 2}, {0}}, {{0, 3, 6}, {0}}, {{0, 4, 8}, {0}}, {{0, 5, 7}, {0}}};
    fam.ramified = {1, 1, 1, 1};
    validate_place_family(fam);

    const auto s1 = sha_kernel(m, 1, fam, EB);
    CHECK(s1.kernel.group().order() == 1);

    const auto s2 = sha_kernel(m, 2, fam, EB);
    CHECK(s2.global.group().order() == 27);
    CHECK(s2.kernel.group().order() == 3);
    CHECK(s2.kernel.group().torsion == ZVec{3});
    REQUIRE(s2.cocycle_reps.size() == 1);
    for (int v = 0; v < 4; ++v) {
        const ZVec cls = s2.global.project(s2.cocycle_reps[0]);
        ZVec img = s2.restriction[v].apply(cls);
        CHECK(s2.local[v].group().is_zero_elem(s2.local[v].group().reduce(img)));
    }
}

TEST_CASE("inverse limits of finite towers") {
    Tower ident;
    ident.sizes = {3, 3, 3};
    ident.maps = {{0, 1, 2}, {0, 1, 2}};
    const auto lim = inverse_limit_tower(ident, EB);
    CHECK(lim.nonempty);
    CHECK(lim.threads.size() == 3);
    CHECK(lim.witness == std::vector<int>{0, 0, 0});

    Tower t;
    t.sizes = {2, 3, 2, 4, 3};
    t.maps = {{0, 1, 1}, {2, 0}, {1, 1, 0, 1}, {3, 0, 2}};
    const auto l5 = inverse_limit_tower(t, EB);
    CHECK(l5.nonempty);
    CHECK(l5.threads.size() == 3);
    for (const auto& th : l5.threads)
        for (int k = 0; k + 1 < 5; ++k) CHECK(t.maps[k][th[k + 1]] == th[k]);

    Tower dead;
    dead.sizes = {2, 0};
    dead.maps = {{}};
    const auto le = inverse_limit_tower(dead, EB);
    CHECK(le.threads.empty());
    CHECK_FALSE(le.nonempty);

    Tower bad;
    bad.sizes = {2, 2};
    bad.maps = {{0, 5}};
    CHECK_THROWS_AS(validate_tower(bad), invalid_input);
}
