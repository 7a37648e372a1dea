#pragma once
// Torsor combinatorics for a finite structure group under an outer finite
// group: component groupoids and their nerves, the classifying map into the
// one-object nerve, cocycle extraction from equivariant maps off the
// translation space, classification of principal sets by degree-one
// cohomology, and the twisting bijections on products and groupoids.

#include <cstdint>
#include <vector>

#include "eqsimp/equivariant.hpp"
#include "eqsimp/group.hpp"
#include "eqsimp/homalg.hpp"
#include "eqsimp/simplicial.hpp"

namespace eqsimp {

// Component bookkeeping of a cover: the structure group acts on a finite
// component set, the outer group acts on both, and the two actions satisfy
// s(g . c) = (s |> g) . s(c).
struct TorsorData {
    FiniteGroup structure_group;
    FiniteGroup galois;
    int components = 0;
    std::vector<std::vector<int>> g_on_p;       // per structure element, component map
    std::vector<std::vector<int>> galois_on_p;  // per outer element, component map
    GroupOnGroup galois_on_g;                   // outer group on the structure group
};
void validate_torsor_data(const TorsorData& t);

// A groupoid with the outer group acting by functors and every morphism
// labeled by a structure group element; the labeling embeds each hom-set,
// is functorial, and transforms along the outer action on the structure
// group.
struct EquivariantGroupoid {
    Groupoid gpd;
    FiniteGroup galois;
    FiniteGroup structure_group;
    GroupOnGroup galois_on_g;               // outer group on the structure group
    std::vector<std::vector<int>> obj_act;  // per outer element, object map
    std::vector<std::vector<int>> mor_act;  // per outer element, morphism map
    std::vector<int> mor_elem;              // morphism -> structure group element
};
void validate_equivariant_groupoid(const EquivariantGroupoid& e);

// Objects are the components; the morphisms c1 -> c2 are the structure
// elements carrying c1 to c2; composition multiplies; the outer group acts
// on objects and morphisms compatibly.
EquivariantGroupoid torsor_groupoid(const TorsorData& t);

// One object, one morphism per structure element, outer action through act.
EquivariantGroupoid one_object_equivariant(const FiniteGroup& galois, const FiniteGroup& g,
                                           const GroupOnGroup& act);

// The nerve of the groupoid with the induced chainwise action.
GSpace nerve_gspace(const EquivariantGroupoid& e, int dim_bound, std::int64_t simplex_budget);

struct ClassifyingMapResult {
    GSpace nerve;       // nerve of the component groupoid
    GSpace one_object;  // nerve of the one-object groupoid on the structure group
    SimplicialMap map;  // collapses objects, keeps morphism labels
};
// The equivariant simplicial map induced by the morphism labels.
ClassifyingMapResult classifying_map(const TorsorData& t, int dim_bound,
                                     std::int64_t simplex_budget);

// Reads a cocycle off an equivariant simplicial map h from the translation
// space of the outer group into the one-object nerve on a: alpha(s) is the
// inverse of the label of the image of the edge from the identity vertex to
// s.  Both spaces are checked against their canonical builds and the
// cocycle law is verified before returning.
Cocycle1 cocycle_from_hfp(const FiniteGroup& galois, const FiniteGroup& a,
                          const GroupOnGroup& act, const GSpace& en, const GSpace& bg,
                          const SimplicialMap& h, std::int64_t budget);

// A finite set with a simply transitive structure group action and a
// compatible outer action.
struct PrincipalGSet {
    FiniteGroup structure_group;
    FiniteGroup galois;
    int size = 0;
    std::vector<std::vector<int>> g_act;
    std::vector<std::vector<int>> galois_act;
    GroupOnGroup galois_on_g;
};
void validate_principal_gset(const PrincipalGSet& p);

// Classification at a basepoint y0: u(s) is the unique structure element
// with s(y0) = u(s) . y0 and the returned cocycle inverts u.  Every other
// basepoint is checked to land in the same class.
struct TorsorClass {
    Cocycle1 cocycle;  // read at basepoint 0
    int class_index;   // position in h1.reps
    NonabelianH1 h1;
};
TorsorClass classify_torsor(const PrincipalGSet& p, std::int64_t budget);

// The principal set on the element set of g with left translation and the
// outer action s(y) = (s |> y) . alpha(s)^{-1}; classify_torsor returns the
// class of alpha on it.
PrincipalGSet principal_from_cocycle(const FiniteGroup& galois, const FiniteGroup& g,
                                     const GroupOnGroup& act, const Cocycle1& alpha);

// The bijection (t, y) -> (t, alpha(t) . y) from the product of the outer
// group with the carrier, diagonal action on the source, twisted diagonal
// action on the image; the intertwining identity is checked elementwise.
struct TwistedProduct {
    int first_size = 0;
    int second_size = 0;
    std::vector<int> forward;               // index t * second_size + y
    std::vector<std::vector<int>> src_act;  // diagonal action
    std::vector<std::vector<int>> dst_act;  // twisted diagonal action
    PrincipalGSet twisted;                  // the carrier with the twisted outer action
};
TwistedProduct twist_torsor(const PrincipalGSet& p, const Cocycle1& alpha,
                            std::int64_t budget);

// On the groupoid whose objects are the outer group elements and whose
// hom-sets are full copies of the structure group, the hom-map
// g: s -> t  |->  alpha(t) . g . alpha(s)^{-1}.  Identity on objects;
// functoriality and equivariance into the twisted action are checked on
// full tables, and the induced degree-one map agrees with tau_twist on
// every cocycle.
struct GroupoidTwist {
    EquivariantGroupoid source;
    EquivariantGroupoid target;  // same underlying groupoid, twisted action
    std::vector<int> mor_map;
};
GroupoidTwist twist_groupoid_iso(const FiniteGroup& galois, const FiniteGroup& g,
                                 const GroupOnGroup& act, const Cocycle1& alpha,
                                 std::int64_t budget);

}  // namespace eqsimp
