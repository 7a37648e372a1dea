#pragma once
// Finite group actions on simplicial sets: translation spaces and their
// quotients, fixed subcomplexes, homotopy quotients, and the path-group
// bookkeeping around them.

#include <cstdint>
#include <vector>

#include "eqsimp/fp_group.hpp"
#include "eqsimp/group.hpp"
#include "eqsimp/simplicial.hpp"

namespace eqsimp {

// A left action of a finite group by simplicial automorphisms; the tables
// are validated on construction (identity, composition, equivariance of
// faces and degeneracies).
class GSpace {
public:
    GSpace() = default;
    GSpace(FiniteGroup g, SimplicialSet x,
           std::vector<std::vector<std::vector<int>>> action);

    const FiniteGroup& group() const { return group_; }
    const SimplicialSet& space() const { return space_; }
    int act(int g, int n, int i) const { return action_[g][n][i]; }
    const std::vector<std::vector<std::vector<int>>>& action() const { return action_; }

private:
    FiniteGroup group_;
    SimplicialSet space_;
    std::vector<std::vector<std::vector<int>>> action_;
};

GSpace trivial_gspace(const FiniteGroup& g, SimplicialSet x);

// Translation space: level n holds all (n+1)-tuples of group elements,
// faces delete a coordinate, degeneracies repeat one, and the group acts
// by diagonal left translation.
GSpace eg_space(const FiniteGroup& g, int dim_bound, std::int64_t simplex_budget);
std::vector<int> eg_tuple(int order, int level, int index);
int eg_index(int order, const std::vector<int>& tuple);

Groupoid one_object_groupoid(const FiniteGroup& g);
// Orbit space of the translation space; one nondegenerate simplex per
// reduced word, isomorphic to the nerve of the one-object groupoid.
SimplicialSet bg_space(const FiniteGroup& g, int dim_bound, std::int64_t simplex_budget);

struct QuotientSpace {
    SimplicialSet space;
    std::vector<std::vector<int>> orbit_of;  // per level, simplex -> orbit
    std::vector<std::vector<int>> rep_of;    // per level, orbit -> least member
    SimplicialMap projection(int up_to) const;
};
QuotientSpace quotient_space(const GSpace& x);

// Diagonal action on the levelwise product; both factors must carry the
// same group.
GSpace product_gspace(const GSpace& x, const GSpace& y, int dim_bound,
                      std::int64_t simplex_budget);
GSpace truncate_gspace(const GSpace& x, int n);
// Right extension of a truncated equivariant space; the action extends to
// matching families componentwise.
GSpace coskeleton_gspace(const GSpace& t, int dim_bound, std::int64_t simplex_budget);
GSpace postnikov_gspace(const GSpace& x, int n, std::int64_t simplex_budget);

// Simplices fixed by every listed element (closed under faces/degeneracies).
SubcomplexResult fixed_points(const GSpace& x, const std::vector<int>& subgroup_elems);
// Equip a stable subcomplex with an action of new_group acting through
// to_parent (indices into x's group); validated.
GSpace subcomplex_gspace(const GSpace& x, const SubcomplexResult& sub,
                         const FiniteGroup& new_group, const std::vector<int>& to_parent);
// Quotient by the action of a normal subgroup, acted on by g/k.
GSpace induced_quotient_gspace(const GSpace& x, const std::vector<int>& k_elems,
                               const QuotientGroup& q);

struct FreeActionReport {
    bool free = true;
    int witness_g = -1, witness_level = -1, witness_simplex = -1;
};
FreeActionReport is_free_action(const GSpace& x);

struct HomotopyQuotient {
    QuotientSpace orbit;     // of product(X, EG) under the diagonal action
    SimplicialSet base;      // orbit space of EG
    SimplicialMap to_base;   // induced projection, simplicial
    // per level, orbit representative as (simplex of X, tuple index in EG)
    std::vector<std::vector<std::pair<int, int>>> rep_pair;
};
HomotopyQuotient homotopy_quotient(const GSpace& x, int dim_bound,
                                   std::int64_t simplex_budget);

// Path group of the orbit space of a contractible free-enough action,
// presented as a quotient of the acting group.  Preconditions verified:
// connected, trivial path group, vanishing reduced homology below the top
// level, horn filling up to level 2.
struct ContractibleQuotientResult {
    std::vector<int> kernel_elems;       // normal closure of vertex stabilizers
    QuotientGroup g_mod_k;
    Pi1Result quotient_pi1;              // of X/G at the image of the base vertex
    std::vector<int> phi;                // per element of G, its class downstairs
};
ContractibleQuotientResult pi1_of_contractible_quotient(const GSpace& x, int base_vertex,
                                                        int order_cap,
                                                        std::int64_t budget);

struct Extension {
    FiniteGroup total, kernel, quotient;
    std::vector<int> inclusion;   // kernel -> total
    std::vector<int> projection;  // total -> quotient
};
// Asserts: maps are homomorphisms, inclusion injective, projection
// surjective, image(inclusion) = kernel(projection).
void validate_extension(const Extension& e);
Extension make_extension(FiniteGroup total, FiniteGroup kernel, FiniteGroup quotient,
                         std::vector<int> inclusion, std::vector<int> projection);

// The path-group extension of the homotopy quotient:
// 1 -> pi1(X) -> pi1((X x EG)/G) -> G -> 1.
Extension pi1_extension(const GSpace& x, int base_vertex, int order_cap,
                        std::int64_t budget);

// The extension together with the quotient-space bookkeeping behind it, for
// callers that classify maps by the section they induce.
struct Pi1ExtensionData {
    Extension ext;
    HomotopyQuotient hq;   // of the 2-truncation
    Pi1Result fiber_pi1;   // on X at base_vertex
    Pi1Result total_pi1;   // on hq.orbit.space at the paired base vertex
    int base_vertex = 0;
    // group element carried by a quotient edge (the translation part of its
    // tuple), identity on edges whose tuple part is constant
    int edge_shift(int edge) const;
    // class in total_pi1 of the loop through the quotient edge over
    // (x_edge, the e -> g tuple edge)
    int section_value(int x_edge, int g) const;
};
Pi1ExtensionData pi1_extension_data(const GSpace& x, int base_vertex, int order_cap,
                                    std::int64_t budget);

}  // namespace eqsimp
