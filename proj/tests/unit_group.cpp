#include <doctest.h>

#include <algorithm>

#include "eqsimp/config.hpp"
#include "eqsimp/group.hpp"

using namespace eqsimp;

TEST_CASE("multiplication tables are validated on construction") {
    // no inverse for element 1
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}, 0), invalid_input);
    // identity column broken: 1 * 0 = 0
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}, 0), invalid_input);
    // ragged table
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1}}, 0), invalid_input);
    // identity out of range
    CHECK_THROWS_AS(FiniteGroup({{0}}, 3), invalid_input);
    // names must match the order when given
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 0}}, 0, {"e"}), invalid_input);
}

TEST_CASE("builders produce the expected groups") {
    CHECK(trivial_group().order() == 1);

    auto c6 = cyclic_group(6);
    CHECK(c6.order() == 6);
    CHECK(c6.is_abelian());
    CHECK(c6.element_order(1) == 6);
    CHECK(c6.element_order(2) == 3);
    CHECK(c6.power(1, 4) == 4);
    CHECK(c6.power(1, 6) == 0);
    CHECK(c6.inverse(2) == 4);

    auto s3 = symmetric_group(3);
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    int ord2 = 0, ord3 = 0;
    for (int x = 0; x < 6; ++x) {
        if (s3.element_order(x) == 2) ++ord2;
        if (s3.element_order(x) == 3) ++ord3;
    }
    CHECK(ord2 == 3);
    CHECK(ord3 == 2);

    CHECK(dihedral_group(1).order() == 2);
    auto d4 = dihedral_group(4);
    CHECK(d4.order() == 8);
    CHECK_FALSE(d4.is_abelian());

    auto q8 = quaternion_group();
    CHECK(q8.order() == 8);
    int involutions = 0;
    for (int x = 0; x < 8; ++x)
        if (q8.element_order(x) == 2) ++involutions;
    CHECK(involutions == 1);
    // different involution counts, so no isomorphism exists
    CHECK_FALSE(find_isomorphism(d4, q8).has_value());

    auto c2 = cyclic_group(2);
    auto c3 = cyclic_group(3);
    CHECK(find_isomorphism(direct_product(c2, c3), c6).has_value());
}

TEST_CASE("generating sets close to the whole group") {
    auto c6 = cyclic_group(6);
    auto gens = c6.generating_set();
    CHECK_FALSE(gens.empty());
    CHECK(static_cast<int>(subgroup_closure(c6, gens).size()) == 6);
    auto s3 = symmetric_group(3);
    CHECK(static_cast<int>(subgroup_closure(s3, s3.generating_set()).size()) == 6);
}

TEST_CASE("subgroups, normality and quotients") {
    auto s3 = symmetric_group(3);
    int tr = -1, rot = -1;
    for (int x = 0; x < 6; ++x) {
        if (s3.element_order(x) == 2 && tr < 0) tr = x;
        if (s3.element_order(x) == 3 && rot < 0) rot = x;
    }
    REQUIRE(tr >= 0);
    REQUIRE(rot >= 0);

    auto two = subgroup_closure(s3, {tr});
    CHECK(two.size() == 2);
    CHECK(is_subgroup(s3, two));
    CHECK_FALSE(is_normal(s3, two));
    CHECK(normal_closure(s3, {tr}).size() == 6);

    auto a3 = subgroup_closure(s3, {rot});
    CHECK(a3.size() == 3);
    CHECK(is_normal(s3, a3));

    auto q = quotient_group(s3, a3);
    CHECK(q.group.order() == 2);
    CHECK(is_homomorphism(s3, q.group, q.proj));
    for (int c = 0; c < q.group.order(); ++c) CHECK(q.proj[q.section[c]] == c);
    CHECK_THROWS_AS(quotient_group(s3, two), invalid_input);

    auto sub = subgroup_as_group(s3, a3);
    CHECK(sub.group.order() == 3);
    CHECK(find_isomorphism(sub.group, cyclic_group(3)).has_value());
    for (int h = 0; h < 3; ++h) CHECK(sub.index_in[sub.embed[h]] == h);
    CHECK(sub.index_in[tr] == -1);
}

TEST_CASE("homomorphism enumeration and recognition") {
    auto c2 = cyclic_group(2);
    auto c3 = cyclic_group(3);
    auto s3 = symmetric_group(3);
    const std::int64_t B = 1000000;

    CHECK(all_homomorphisms(c2, c2, B).size() == 2);
    CHECK(all_homomorphisms(c3, c2, B).size() == 1);
    // identity or one of the three involutions
    CHECK(all_homomorphisms(c2, s3, B).size() == 4);
    for (const auto& f : all_homomorphisms(c2, s3, B)) CHECK(is_homomorphism(c2, s3, f));

    CHECK(is_homomorphism(c3, c3, {0, 2, 1}));       // inversion
    CHECK_FALSE(is_homomorphism(c3, c3, {1, 2, 0})); // moves the identity

    // up to conjugacy the three involutions collapse to one class
    CHECK(homomorphisms_up_to_conjugacy(c2, s3, B).size() == 2);
}

TEST_CASE("permutation groups from generators") {
    auto s3 = permutation_group(3, {{1, 2, 0}, {1, 0, 2}}, 1000);
    CHECK(s3.order() == 6);
    CHECK(find_isomorphism(s3, symmetric_group(3)).has_value());
    // the symmetric group on four letters outgrows a cap of ten
    CHECK_THROWS_AS(permutation_group(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, 10), cap_exceeded);
}

TEST_CASE("group actions on groups are validated") {
    auto c2 = cyclic_group(2);
    auto c3 = cyclic_group(3);
    GroupOnGroup inv(c2, c3, {{0, 1, 2}, {0, 2, 1}});
    CHECK(inv.apply(1, 1) == 2);
    CHECK(inv.apply(0, 1) == 1);
    auto triv = GroupOnGroup::trivial(c2, c3);
    CHECK(triv.apply(1, 2) == 2);
    // a constant map is not an automorphism
    CHECK_THROWS_AS(GroupOnGroup(c2, c3, {{0, 1, 2}, {0, 0, 0}}), invalid_input);
    // each map is an automorphism but the assignment is not a homomorphism
    CHECK_THROWS_AS(GroupOnGroup(cyclic_group(3), c3, {{0, 1, 2}, {0, 2, 1}, {0, 1, 2}}),
                    invalid_input);
}

TEST_CASE("semidirect products") {
    auto c2 = cyclic_group(2);
    auto c3 = cyclic_group(3);
    GroupOnGroup inv(c2, c3, {{0, 1, 2}, {0, 2, 1}});
    auto sd = semidirect_product(c3, c2, inv);
    CHECK(sd.order() == 6);
    CHECK(find_isomorphism(sd, symmetric_group(3)).has_value());
    auto direct = semidirect_product(c3, c2, GroupOnGroup::trivial(c2, c3));
    CHECK(direct.is_abelian());
}
