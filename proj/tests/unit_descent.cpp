#include <doctest.h>

#include <map>
#include <utility>
#include <vector>

#include "eqsimp/config.hpp"
#include "eqsimp/descent.hpp"
#include "eqsimp/equivariant.hpp"
#include "eqsimp/hfp.hpp"
#include "eqsimp/homalg.hpp"
#include "eqsimp/mapenum.hpp"

using namespace eqsimp;

static const std::int64_t SB = 100000;
static const std::int64_t EB = 10000000;

namespace {

GroupOnGroup inversion_action(const FiniteGroup& s, const FiniteGroup& a) {
    std::vector<std::vector<int>> maps(s.order(), std::vector<int>(a.order()));
    for (int u = 0; u < s.order(); ++u)
        for (int x = 0; x < a.order(); ++x) maps[u][x] = (u % 2 == 1) ? a.inverse(x) : x;
    return GroupOnGroup(s, a, maps);
}

TorsorData torsor_of_principal(const PrincipalGSet& p) {
    return {p.structure_group, p.galois, p.size, p.g_act, p.galois_act, p.galois_on_g};
}

int find_cocycle(const NonabelianH1& h1, const std::vector<int>& alpha) {
    for (int i = 0; i < static_cast<int>(h1.cocycles.size()); ++i)
        if (h1.cocycles[i].alpha == alpha) return i;
    return -1;
}

int s3_involution() {
    auto s3 = symmetric_group(3);
    for (int x = 0; x < 6; ++x)
        if (x != s3.identity() && s3.op(x, x) == s3.identity()) return x;
    return -1;
}

}  // namespace

TEST_CASE("free transitive component data gives a contractible groupoid") {
    auto z2 = cyclic_group(2);
    auto t22 = GroupOnGroup::trivial(z2, z2);
    Cocycle1 a0;
    a0.alpha = {0, 0};
    auto p = principal_from_cocycle(z2, z2, t22, a0);
    auto ty = torsor_groupoid(torsor_of_principal(p));
    CHECK(ty.gpd.objects() == 2);
    CHECK(ty.gpd.morphisms() == 4);
    std::map<std::pair<int, int>, int> homs;
    for (int m = 0; m < ty.gpd.morphisms(); ++m) ++homs[{ty.gpd.src(m), ty.gpd.tgt(m)}];
    CHECK(homs.size() == 4);
    for (const auto& [k, v] : homs) CHECK(v == 1);
    auto nv = nerve_gspace(ty, 3, SB);
    CHECK(pi0(nv.space()).count == 1);
    auto h = space_homology(nv.space());
    CHECK(h[0].rank == 1);
    CHECK(h[0].torsion.empty());
    CHECK(h[1].rank == 0);
    CHECK(h[1].torsion.empty());
    CHECK(h[2].rank == 0);
    CHECK(h[2].torsion.empty());
}

TEST_CASE("a trivial structure group yields a discrete groupoid") {
    auto z3 = cyclic_group(3);
    TorsorData t;
    t.structure_group = trivial_group();
    t.galois = z3;
    t.components = 3;
    t.g_on_p = {{0, 1, 2}};
    t.galois_on_p = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    t.galois_on_g = GroupOnGroup::trivial(z3, trivial_group());
    auto ty = torsor_groupoid(t);
    CHECK(ty.gpd.morphisms() == 3);
    auto nv = nerve_gspace(ty, 2, SB);
    CHECK(nv.space().nondegenerate_count(1) == 0);
    CHECK(pi0(nv.space()).count == 3);
}

TEST_CASE("two swapped copies of the group") {
    auto z2 = cyclic_group(2);
    TorsorData t;
    t.structure_group = z2;
    t.galois = z2;
    t.components = 4;  // copy * 2 + element
    t.g_on_p.assign(2, std::vector<int>(4));
    for (int g = 0; g < 2; ++g)
        for (int i = 0; i < 2; ++i)
            for (int x = 0; x < 2; ++x) t.g_on_p[g][i * 2 + x] = i * 2 + ((g + x) % 2);
    t.galois_on_p = {{0, 1, 2, 3}, {2, 3, 0, 1}};
    t.galois_on_g = GroupOnGroup::trivial(z2, z2);
    auto ty = torsor_groupoid(t);
    auto nv = nerve_gspace(ty, 3, SB);
    CHECK(pi0(nv.space()).count == 2);
    auto h = space_homology(nv.space());
    CHECK(h[0].rank == 2);
    CHECK(h[1].rank == 0);
    CHECK(h[1].torsion.empty());
    CHECK(nv.act(1, 0, 0) == 2);
}

TEST_CASE("a fully stabilized component classifies by the identity") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    TorsorData t;
    t.structure_group = z3;
    t.galois = z2;
    t.components = 1;
    t.g_on_p.assign(3, std::vector<int>(1, 0));
    t.galois_on_p.assign(2, std::vector<int>(1, 0));
    t.galois_on_g = inversion_action(z2, z3);
    auto cm = classifying_map(t, 2, SB);
    CHECK(cm.map == identity_map(cm.nerve.space(), 2));
}

TEST_CASE("cocycle extraction from fixed point maps") {
    auto z2 = cyclic_group(2);
    auto t22 = GroupOnGroup::trivial(z2, z2);

    // the constant map carries the trivial cocycle
    auto en = eg_space(z2, 2, SB);
    auto bg = nerve_gspace(one_object_equivariant(z2, z2, t22), 2, SB);
    SimplicialMap h;
    h.values = {std::vector<int>(en.space().count(0), 0),
                std::vector<int>(en.space().count(1), 0),
                std::vector<int>(en.space().count(2), 0)};
    auto c = cocycle_from_hfp(z2, z2, t22, en, bg, h, EB);
    CHECK(c.alpha == std::vector<int>{0, 0});
}

TEST_CASE("a homomorphism realized as a map extracts itself") {
    auto z2 = cyclic_group(2);
    auto s3 = symmetric_group(3);
    auto t2s3 = GroupOnGroup::trivial(z2, s3);
    const int tr = s3_involution();
    REQUIRE(tr >= 0);

    auto en = eg_space(z2, 3, SB);
    auto ob = one_object_equivariant(z2, s3, t2s3);
    auto bg = nerve_gspace(ob, 3, SB);
    const auto chains = nerve_chains(ob.gpd, 3, SB);
    std::vector<std::map<std::vector<int>, int>> idx(4);
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i < static_cast<int>(chains[n].size()); ++i)
            idx[n][chains[n][i]] = i;
    // each edge carries the image of the difference of its endpoints
    auto mval = [&](int a, int b) {
        const int d = z2.op(z2.inverse(a), b);
        return d == 1 ? s3.inverse(tr) : s3.identity();
    };
    SimplicialMap h;
    h.values.resize(4);
    h.values[0].assign(2, 0);
    for (int n = 1; n <= 3; ++n) {
        h.values[n].resize(en.space().count(n));
        for (int i = 0; i < en.space().count(n); ++i) {
            const auto tup = eg_tuple(2, n, i);
            std::vector<int> chain(n);
            for (int k = 0; k < n; ++k) chain[k] = mval(tup[k], tup[k + 1]);
            h.values[n][i] = idx[n].at(chain);
        }
    }
    auto c = cocycle_from_hfp(z2, s3, t2s3, en, bg, h, EB);
    CHECK(c.alpha == std::vector<int>{s3.identity(), tr});

    // breaking equivariance at one edge is rejected
    SimplicialMap bad = h;
    bad.values[1][eg_index(2, {0, 1})] =
        idx[1].at({(tr + 1) % 6 == s3.identity() ? (tr + 2) % 6 : (tr + 1) % 6});
    CHECK_THROWS_AS(cocycle_from_hfp(z2, s3, t2s3, en, bg, bad, EB), invalid_input);
}

TEST_CASE("classification reads back the defining cocycle") {
    auto z2 = cyclic_group(2);
    auto t22 = GroupOnGroup::trivial(z2, z2);
    Cocycle1 a;
    a.alpha = {0, 1};
    auto tc = classify_torsor(principal_from_cocycle(z2, z2, t22, a), EB);
    CHECK(tc.cocycle.alpha == a.alpha);
    Cocycle1 triv;
    triv.alpha = {0, 0};
    const int neutral = tc.h1.class_of[find_cocycle(tc.h1, triv.alpha)];
    CHECK(tc.class_index != neutral);
    auto t0 = classify_torsor(principal_from_cocycle(z2, z2, t22, triv), EB);
    CHECK(t0.class_index == neutral);
}

TEST_CASE("an inverted coefficient group has one class only") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    auto inv23 = inversion_action(z2, z3);
    Cocycle1 a;
    a.alpha = {0, 1};
    auto tc = classify_torsor(principal_from_cocycle(z2, z3, inv23, a), EB);
    CHECK(tc.cocycle.alpha == a.alpha);
    Cocycle1 triv;
    triv.alpha = {0, 0};
    CHECK(tc.class_index == tc.h1.class_of[find_cocycle(tc.h1, triv.alpha)]);
    CHECK(tc.h1.reps.size() == 1);
}

TEST_CASE("nonabelian coefficients separate involution classes") {
    auto z2 = cyclic_group(2);
    auto s3 = symmetric_group(3);
    auto t2s3 = GroupOnGroup::trivial(z2, s3);
    const int tr = s3_involution();
    Cocycle1 a;
    a.alpha = {s3.identity(), tr};
    auto tc = classify_torsor(principal_from_cocycle(z2, s3, t2s3, a), EB);
    CHECK(tc.cocycle.alpha == a.alpha);
    Cocycle1 triv;
    triv.alpha = {s3.identity(), s3.identity()};
    CHECK(tc.class_index != tc.h1.class_of[find_cocycle(tc.h1, triv.alpha)]);
    CHECK(tc.h1.reps.size() == 2);
}

TEST_CASE("twisting by a cocycle and back") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    auto inv23 = inversion_action(z2, z3);
    Cocycle1 triv;
    triv.alpha = {0, 0};
    auto p = principal_from_cocycle(z2, z3, inv23, triv);

    auto tw = twist_torsor(p, triv, EB);
    for (int i = 0; i < static_cast<int>(tw.forward.size()); ++i) CHECK(tw.forward[i] == i);
    CHECK(tw.src_act == tw.dst_act);

    Cocycle1 a;
    a.alpha = {0, 1};
    auto t1 = twist_torsor(p, a, EB);
    Cocycle1 back;
    back.alpha = {z3.inverse(a.alpha[0]), z3.inverse(a.alpha[1])};
    auto t2 = twist_torsor(t1.twisted, back, EB);
    for (int i = 0; i < static_cast<int>(t1.forward.size()); ++i)
        CHECK(t2.forward[t1.forward[i]] == i);
    CHECK(t2.twisted.galois_act == p.galois_act);
    CHECK(t2.twisted.galois_on_g.maps() == p.galois_on_g.maps());
}

TEST_CASE("twisting with nonabelian coefficients composes to the identity") {
    auto z2 = cyclic_group(2);
    auto s3 = symmetric_group(3);
    auto t2s3 = GroupOnGroup::trivial(z2, s3);
    const int tr = s3_involution();
    Cocycle1 a;
    a.alpha = {s3.identity(), tr};
    auto p = principal_from_cocycle(z2, s3, t2s3, Cocycle1{{s3.identity(), s3.identity()}});
    auto t1 = twist_torsor(p, a, EB);
    Cocycle1 back;
    back.alpha = {s3.inverse(a.alpha[0]), s3.inverse(a.alpha[1])};
    auto t2 = twist_torsor(t1.twisted, back, EB);
    for (int i = 0; i < static_cast<int>(t1.forward.size()); ++i)
        CHECK(t2.forward[t1.forward[i]] == i);
}

TEST_CASE("groupoid twisting produces equivariant level bijections") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    auto inv23 = inversion_action(z2, z3);

    Cocycle1 triv;
    triv.alpha = {0, 0};
    auto gt0 = twist_groupoid_iso(z2, z2, GroupOnGroup::trivial(z2, z2), triv, EB);
    for (int m = 0; m < static_cast<int>(gt0.mor_map.size()); ++m) CHECK(gt0.mor_map[m] == m);

    Cocycle1 a;
    a.alpha = {0, 1};
    auto gt = twist_groupoid_iso(z2, z3, inv23, a, EB);
    bool moved = false;
    for (int m = 0; m < static_cast<int>(gt.mor_map.size()); ++m)
        moved = moved || gt.mor_map[m] != m;
    CHECK(moved);

    auto ns = nerve_gspace(gt.source, 2, SB);
    auto nt = nerve_gspace(gt.target, 2, SB);
    const auto chains = nerve_chains(gt.source.gpd, 2, SB);
    std::vector<std::map<std::vector<int>, int>> idx(3);
    for (int n = 1; n <= 2; ++n)
        for (int i = 0; i < static_cast<int>(chains[n].size()); ++i)
            idx[n][chains[n][i]] = i;
    SimplicialMap f;
    f.values.resize(3);
    f.values[0] = {0, 1};
    for (int n = 1; n <= 2; ++n) {
        f.values[n].resize(chains[n].size());
        for (int i = 0; i < static_cast<int>(chains[n].size()); ++i) {
            std::vector<int> im(chains[n][i].size());
            for (std::size_t k = 0; k < im.size(); ++k) im[k] = gt.mor_map[chains[n][i][k]];
            f.values[n][i] = idx[n].at(im);
        }
    }
    CHECK(is_simplicial_map(ns.space(), nt.space(), f, 2));
    for (int s = 0; s < 2; ++s)
        for (int n = 0; n <= 2; ++n)
            for (int i = 0; i < ns.space().count(n); ++i)
                CHECK(f.values[n][ns.act(s, n, i)] == nt.act(s, n, f.values[n][i]));
    for (int n = 0; n <= 2; ++n) {
        std::vector<char> hit(f.values[n].size(), 0);
        for (int v : f.values[n]) {
            CHECK_FALSE(hit[v]);
            hit[v] = 1;
        }
    }
}

TEST_CASE("classifying map fixed points recover the torsor class") {
    auto z2 = cyclic_group(2);
    auto t22 = GroupOnGroup::trivial(z2, z2);
    const auto en3 = eg_space(z2, 3, SB);
    for (int which = 0; which < 2; ++which) {
        Cocycle1 a;
        a.alpha = {0, which};
        auto p = principal_from_cocycle(z2, z2, t22, a);
        auto tc = classify_torsor(p, EB);
        auto cm = classifying_map(torsor_of_principal(p), 3, SB);
        auto brute = hfp_bruteforce(cm.nerve, 3, EB);
        CHECK(brute.reps.size() == 1);
        int seen_class = -1;
        for (const auto& f : brute.maps) {
            auto comp = compose_maps(en3.space(), cm.nerve.space(), cm.one_object.space(), f,
                                     cm.map, 3);
            auto c = cocycle_from_hfp(z2, z2, t22, en3, cm.one_object, comp, EB);
            const int ci = tc.h1.class_of[find_cocycle(tc.h1, c.alpha)];
            if (seen_class < 0) seen_class = ci;
            CHECK(ci == seen_class);
        }
        CHECK(seen_class == tc.class_index);
    }
}

TEST_CASE("nonabelian classifying map extraction") {
    auto z2 = cyclic_group(2);
    auto s3 = symmetric_group(3);
    auto t2s3 = GroupOnGroup::trivial(z2, s3);
    const int tr = s3_involution();
    Cocycle1 a;
    a.alpha = {s3.identity(), tr};
    auto p = principal_from_cocycle(z2, s3, t2s3, a);
    auto tc = classify_torsor(p, EB);
    auto cm = classifying_map(torsor_of_principal(p), 3, SB);
    auto brute = hfp_bruteforce(cm.nerve, 3, EB);
    CHECK(brute.reps.size() == 1);
    const auto en3 = eg_space(z2, 3, SB);
    const auto& f = brute.maps[brute.reps[0]];
    auto comp =
        compose_maps(en3.space(), cm.nerve.space(), cm.one_object.space(), f, cm.map, 3);
    auto c = cocycle_from_hfp(z2, s3, t2s3, en3, cm.one_object, comp, EB);
    CHECK(tc.h1.class_of[find_cocycle(tc.h1, c.alpha)] == tc.class_index);
}
