#pragma once
// Finite groups as explicit multiplication tables, plus the subgroup and
// homomorphism utilities the rest of the library leans on.  Everything is
// index-based: elements are 0..n-1 and tables are validated on construction.

#include <optional>
#include <string>
#include <vector>

#include "eqsimp/config.hpp"

namespace eqsimp {

class FiniteGroup {
public:
    FiniteGroup() = default;
    // Validates associativity, identity and inverses; throws invalid_input.
    FiniteGroup(std::vector<std::vector<int>> mul, int identity,
                std::vector<std::string> names = {});

    int order() const { return static_cast<int>(mul_.size()); }
    int op(int a, int b) const { return mul_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    int identity() const { return id_; }
    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<int>>& table() const { return mul_; }

    int element_order(int a) const;
    bool is_abelian() const;
    // Small generating set found greedily (deterministic).
    std::vector<int> generating_set() const;
    int power(int a, long long k) const;

private:
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    int id_ = 0;
    std::vector<std::string> names_;
};

// ---- builders ----
FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric_group(int n);   // n <= 5
FiniteGroup dihedral_group(int n);    // order 2n, n >= 1
FiniteGroup quaternion_group();       // order 8
// Group generated by permutations of {0..m-1}; capped by order_cap.
FiniteGroup permutation_group(int m, const std::vector<std::vector<int>>& gens,
                              std::int64_t order_cap);

// ---- subgroups ----
// A subgroup is a sorted list of element indices.
std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h);
bool is_normal(const FiniteGroup& g, const std::vector<int>& h);
std::vector<int> normal_closure(const FiniteGroup& g, const std::vector<int>& seed);

struct QuotientGroup {
    FiniteGroup group;            // G/K
    std::vector<int> proj;        // element of G -> element of G/K
    std::vector<int> section;     // coset representative for each quotient element
};
// K must be normal; throws invalid_input otherwise.
QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<int>& k);

// Subgroup as an abstract group together with its embedding.
struct SubgroupGroup {
    FiniteGroup group;
    std::vector<int> embed;       // subgroup element -> element of G
    std::vector<int> index_in;    // element of G -> subgroup element or -1
};
SubgroupGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& h);

// ---- homomorphisms ----
bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst,
                     const std::vector<int>& map);
// All homomorphisms src -> dst, enumerated deterministically (capped search).
std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& src,
                                                const FiniteGroup& dst,
                                                std::int64_t budget);
// Backtracking on generator images; empty when not isomorphic.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                 const FiniteGroup& b);
// f up to postcomposition with conjugation: f ~ (x -> t f(x) t^-1).
std::vector<std::vector<std::vector<int>>> homomorphisms_up_to_conjugacy(
    const FiniteGroup& src, const FiniteGroup& dst, std::int64_t budget);

// ---- actions ----
// An action of G on a finite group A by automorphisms: one permutation of
// A's elements per element of G.  Validated: each map is an automorphism and
// the assignment is a homomorphism G -> Aut(A).
class GroupOnGroup {
public:
    GroupOnGroup() = default;
    GroupOnGroup(const FiniteGroup& g, const FiniteGroup& a,
                 std::vector<std::vector<int>> maps);
    int apply(int g, int a) const { return maps_[g][a]; }
    const std::vector<std::vector<int>>& maps() const { return maps_; }
    static GroupOnGroup trivial(const FiniteGroup& g, const FiniteGroup& a);
private:
    std::vector<std::vector<int>> maps_;
};

// Elements are pairs (a, h) with (a, h)(b, k) = (a . h|>b, h k); element
// index is a * |H| + h, names "a|h".
FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& h,
                               const GroupOnGroup& h_on_a);

}  // namespace eqsimp
