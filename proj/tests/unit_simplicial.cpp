#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "eqsimp/config.hpp"
#include "eqsimp/equivariant.hpp"
#include "eqsimp/fp_group.hpp"
#include "eqsimp/simplicial.hpp"

using namespace eqsimp;

static const std::int64_t B = 1000000;

TEST_CASE("monotone map calculus") {
    CHECK(monotone_identity(2) == Monotone{0, 1, 2});
    CHECK(coface(2, 1) == Monotone{0, 2});
    CHECK(codegeneracy(1, 0) == Monotone{0, 0, 1});
    CHECK(compose_monotone({1, 2}, {0, 1}) == Monotone{1, 2});
    CHECK_THROWS_AS(compose_monotone({0, 1}, {0, 2}), invalid_input);

    Monotone epi, mono;
    epi_mono_factor({0, 0, 2}, 2, epi, mono);
    CHECK(epi == Monotone{0, 0, 1});
    CHECK(mono == Monotone{0, 2});

    CHECK(all_monotone(1, 1).size() == 3);
    CHECK(all_surjections(2, 1).size() == 2);
}

TEST_CASE("standard simplices store all degeneracies") {
    auto d2 = standard_simplex(2, 3);
    CHECK(d2.dim_bound() == 3);
    CHECK(d2.count(0) == 3);
    CHECK(d2.count(1) == 6);
    CHECK(d2.count(2) == 10);
    CHECK(d2.count(3) == 15);
    CHECK(d2.nondegenerate_count(0) == 3);
    CHECK(d2.nondegenerate_count(1) == 3);
    CHECK(d2.nondegenerate_count(2) == 1);
    CHECK(d2.nondegenerate_count(3) == 0);
    CHECK(d2.total_simplices() == 34);
    CHECK(pi0(d2).count == 1);

    int t = -1;
    for (int i = 0; i < d2.count(2); ++i)
        if (!d2.degenerate(2, i)) t = i;
    REQUIRE(t >= 0);
    for (int k = 0; k <= 2; ++k) CHECK(d2.vertex(2, t, k) == k);
    // the three faces of the top cell are the three nondegenerate edges
    std::vector<int> edges = d2.boundary(2, t);
    CHECK(edges.size() == 3);
    for (int e : edges) CHECK_FALSE(d2.degenerate(1, e));
}

TEST_CASE("the circle and its normal forms") {
    auto s1 = circle(2);
    CHECK(s1.count(0) == 1);
    CHECK(s1.count(1) == 2);
    CHECK(s1.count(2) == 3);
    CHECK(s1.nondegenerate_count(1) == 1);
    CHECK(pi0(s1).count == 1);

    int e = s1.degenerate(1, 0) ? 1 : 0;
    CHECK_FALSE(s1.degenerate(1, e));
    int s0e = s1.degen_of(1, e, 0);
    CHECK(s1.degenerate(2, s0e));
    CHECK(s1.core_dim(2, s0e) == 1);
    CHECK(s1.core_idx(2, s0e) == e);

    // operators factor through the normal form: s0 then d0 recovers the edge
    CHECK(s1.apply_op(1, e, codegeneracy(1, 0)) == s0e);
    CHECK(s1.apply_op(2, s0e, coface(2, 0)) == e);
}

TEST_CASE("malformed level data is rejected") {
    SimplicialData bad;
    bad.dim_bound = 1;
    bad.counts = {2, 1};
    bad.faces = {{{}, {}}, {{0, 5}}};
    bad.degen = {{{0}, {0}}, {{}}};
    CHECK_THROWS_AS(SimplicialSet(bad), invalid_input);
}

TEST_CASE("truncation, skeleta and coskeleta") {
    auto d2 = standard_simplex(2, 3);
    auto tr = truncate(d2, 1);
    CHECK(tr.dim_bound() == 1);
    CHECK(tr.count(0) == 3);
    CHECK(tr.count(1) == 6);

    SimplicialData pts;
    pts.dim_bound = 0;
    pts.counts = {2};
    pts.faces = {{{}, {}}};
    pts.degen = {{{}, {}}};
    SimplicialSet two(pts);

    auto sk = skeleton_extend(two, 2);
    CHECK(sk.count(1) == 2);
    CHECK(sk.count(2) == 2);
    CHECK(sk.nondegenerate_count(1) == 0);

    auto ck = coskeleton_extend(two, 2, B);
    CHECK(ck.count(0) == 2);
    CHECK(ck.count(1) == 4);
    CHECK(ck.count(2) == 8);
    // matching families over two points form the total translation space
    auto eg = eg_space(cyclic_group(2), 2, B);
    CHECK(find_simplicial_iso(ck, eg.space(), B).has_value());
}

TEST_CASE("products of intervals") {
    auto d1 = standard_simplex(1, 2);
    auto sq = product(d1, d1, 2, B);
    CHECK(sq.count(0) == 4);
    CHECK(sq.count(1) == 9);
    CHECK(sq.count(2) == 16);
    CHECK(sq.nondegenerate_count(1) == 5);
    CHECK(sq.nondegenerate_count(2) == 2);
    CHECK(pi0(sq).count == 1);
}

TEST_CASE("disjoint unions, components and subcomplexes") {
    auto pt = standard_simplex(0, 2);
    auto du = disjoint_union(pt, pt);
    auto p = pi0(du);
    CHECK(p.count == 2);
    CHECK(p.rep == std::vector<int>{0, 1});
    auto comp = component_of(du, 1);
    CHECK(comp.space.count(0) == 1);
    CHECK(comp.old_index[0][0] == 1);
    CHECK(comp.new_index[0][0] == -1);

    // dropping the degeneracies of a kept vertex is not a subcomplex
    auto d1 = standard_simplex(1, 1);
    std::vector<std::vector<char>> keep = {{1, 1}, {0, 0, 0}};
    CHECK_THROWS_AS(subcomplex(d1, keep), invalid_input);
}

TEST_CASE("horn filling detects non-fibrant spaces") {
    auto bg2 = bg_space(cyclic_group(2), 2, B);
    auto rep = check_kan(bg2, 2, B);
    CHECK(rep.ok);
    CHECK(rep.horns_checked > 0);

    auto bad = check_kan(standard_simplex(2, 2), 2, B);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.first_failure.has_value());
    CHECK(bad.first_failure->n >= 1);

    CHECK_FALSE(check_kan(circle(2), 2, B).ok);
}

TEST_CASE("groupoid nerves index composable chains") {
    auto c3 = cyclic_group(3);
    auto gpd = one_object_groupoid(c3);
    CHECK(gpd.objects() == 1);
    CHECK(gpd.morphisms() == 3);
    auto n = nerve(gpd, 2, B);
    CHECK(n.count(0) == 1);
    CHECK(n.count(1) == 3);
    CHECK(n.count(2) == 9);
    for (int i = 0; i < n.count(2); ++i) {
        auto chain = nerve_chain(gpd, 2, 2, i);
        CHECK(chain.size() == 2);
        CHECK(nerve_index_of_chain(gpd, 2, chain) == i);
    }
    auto chains = nerve_chains(gpd, 2, B);
    CHECK(chains[0].size() == 1);
    CHECK(chains[1].size() == 3);
    CHECK(chains[2].size() == 9);
}

TEST_CASE("edge path groups of small complexes") {
    auto p = edge_path_pi1(standard_simplex(2, 2), 0, 50);
    CHECK(p.group.order() == 1);

    auto s3 = symmetric_group(3);
    auto bs3 = nerve(one_object_groupoid(s3), 2, B);
    auto q = edge_path_pi1(bs3, 0, 50);
    CHECK(q.group.order() == 6);
    CHECK(find_isomorphism(q.group, s3).has_value());

    // tree paths multiply to the identity
    for (int v = 0; v < bs3.count(0); ++v)
        CHECK(path_class(q, path_from_base(q, v)) == q.group.identity());

    // the recorded words realize their elements
    for (int e = 0; e < q.group.order(); ++e) {
        int acc = q.group.identity();
        for (int letter : q.element_word[e]) {
            int gen = q.generator_elt[std::abs(letter) - 1];
            acc = q.group.op(acc, letter > 0 ? gen : q.group.inverse(gen));
        }
        CHECK(acc == e);
    }

    // a free loop overflows any finite order cap
    CHECK_THROWS_AS(edge_path_pi1(circle(2), 0, 50), cap_exceeded);
}

TEST_CASE("coset enumeration of presented groups") {
    Presentation z6;
    z6.generators = 1;
    z6.relators = {{1, 1, 1, 1, 1, 1}};
    auto e6 = enumerate_presented_group(z6, 50);
    CHECK(e6.group.order() == 6);
    CHECK(e6.group.is_abelian());
    CHECK(e6.group.element_order(e6.generator_elt[0]) == 6);

    Presentation s3p;
    s3p.generators = 2;
    s3p.relators = {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}};
    auto es3 = enumerate_presented_group(s3p, 50);
    CHECK(es3.group.order() == 6);
    CHECK_FALSE(es3.group.is_abelian());
    CHECK(find_isomorphism(es3.group, symmetric_group(3)).has_value());

    Presentation free1;
    free1.generators = 1;
    CHECK_THROWS_AS(enumerate_presented_group(free1, 10), cap_exceeded);
}

TEST_CASE("maps of nerves induce maps of path groups") {
    auto c4 = cyclic_group(4);
    auto c2 = cyclic_group(2);
    auto g4 = one_object_groupoid(c4);
    auto g2 = one_object_groupoid(c2);
    auto n4 = nerve(g4, 2, B);
    auto n2 = nerve(g2, 2, B);

    // reduce each chain letter modulo two
    SimplicialMap f;
    f.values.resize(3);
    f.values[0] = {0};
    for (int n = 1; n <= 2; ++n) {
        f.values[n].resize(n4.count(n));
        for (int i = 0; i < n4.count(n); ++i) {
            auto chain = nerve_chain(g4, 2, n, i);
            for (int& letter : chain) letter %= 2;
            f.values[n][i] = nerve_index_of_chain(g2, 2, chain);
        }
    }
    REQUIRE(is_simplicial_map(n4, n2, f, 2));

    auto p4 = edge_path_pi1(n4, 0, 50);
    auto p2 = edge_path_pi1(n2, 0, 50);
    auto image = induced_pi1(p4, n4, n2, p2, f);
    CHECK(is_homomorphism(p4.group, p2.group, image));
    int nontrivial = 0;
    for (int v : image)
        if (v != p2.group.identity()) ++nontrivial;
    CHECK(nontrivial == 2);
}
