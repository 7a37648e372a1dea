#pragma once
// Chain complexes of presented abelian groups, bar-resolution cohomology of
// finite groups, nonabelian degree-one cohomology with twisting, the
// normalized/overline correspondence between complexes and simplicial
// abelian groups, total-complex hypercohomology, and long-exact-sequence
// verification.

#include <cstdint>
#include <string>
#include <vector>

#include "eqsimp/abelian.hpp"
#include "eqsimp/equivariant.hpp"
#include "eqsimp/group.hpp"
#include "eqsimp/simplicial.hpp"
#include "eqsimp/zmat.hpp"

namespace eqsimp {

// Diagonal torsion-order relations in a group's coordinates (free rows zero).
ZMat torsion_relations(const FinGenAb& m);

// ---- chain complexes ----

// Degrees lo .. lo + groups.size() - 1; d[i] maps groups[i] to groups[i-1]
// (d[0] is unused and left empty).
struct ChainComplex {
    int lo = 0;
    std::vector<FinGenAb> groups;
    std::vector<ZMat> d;

    int hi() const { return lo + static_cast<int>(groups.size()) - 1; }
    bool in_range(int n) const { return n >= lo && n <= hi(); }
    const FinGenAb& at(int n) const { return groups[n - lo]; }
    const ZMat& diff(int n) const { return d[n - lo]; }  // at(n) -> at(n-1)
};
// Validates shapes, well-definedness mod torsion, and d . d = 0.
ChainComplex make_chain_complex(int lo, std::vector<FinGenAb> groups, std::vector<ZMat> d);

ChainComplex suspend(const ChainComplex& c, int shift);
ChainComplex truncate_above(const ChainComplex& c, int k);  // keep degrees <= k
ChainComplex truncate_below(const ChainComplex& c, int k);  // keep degrees >= k

// Homology at degree n as a subquotient of the degree-n coordinate lattice.
Subquotient homology_at(const ChainComplex& c, int n);
std::vector<FinGenAb> chain_homology(const ChainComplex& c);

// ---- equivariant complexes ----

struct GComplex {
    FiniteGroup g;
    int lo = 0;
    std::vector<GModule> groups;
    std::vector<ZMat> d;

    int hi() const { return lo + static_cast<int>(groups.size()) - 1; }
    bool in_range(int n) const { return n >= lo && n <= hi(); }
    const GModule& at(int n) const { return groups[n - lo]; }
    const ZMat& diff(int n) const { return d[n - lo]; }
};
GComplex make_gcomplex(FiniteGroup g, int lo, std::vector<GModule> groups,
                       std::vector<ZMat> d);
GComplex concentrated_gcomplex(const GModule& m, int degree);
ChainComplex underlying_complex(const GComplex& c);
GComplex suspend(const GComplex& c, int shift);
GComplex truncate_above(const GComplex& c, int k);
GComplex truncate_below(const GComplex& c, int k);

// ---- bar resolution cochains ----

// Inhomogeneous cochains C^n = maps from n-tuples to the module, stacked as
// |G|^n coordinate blocks (first tuple entry most significant).
class BarComplex {
public:
    BarComplex(GModule m, int max_n);

    const GModule& mod() const { return m_; }
    int max_degree() const { return max_n_; }
    long long block_count(int n) const;   // |G|^n
    int cochain_dim(int n) const;
    const ZMat& delta(int n) const { return delta_[n]; }  // C^n -> C^{n+1}
    int block_of(const std::vector<int>& tuple) const;
    std::vector<int> tuple_of(int block, int n) const;
    // kernel of delta(n) modulo the image of delta(n-1)
    Subquotient cohomology(int n) const;

private:
    GModule m_;
    int max_n_ = 0;
    std::vector<ZMat> delta_;
};

Subquotient group_cohomology(const GModule& m, int n);

// Cocycles modulo coboundaries for one slice of a cochain system: ambient
// coordinates with torsion relations rel_here, incoming map d_in, outgoing
// map d_out whose target has relations rel_next.
Subquotient cochain_cohomology(int ambient_dim, const ZMat& rel_here, const ZMat& d_in,
                               const ZMat& d_out, const ZMat& rel_next);

// Matrix of the map induced on classes by a coordinate-level map f that
// carries src cocycles into dst cocycles.
ZMat induced_on_classes(const Subquotient& src, const Subquotient& dst, const ZMat& f);

// Columns of gens generate a subgroup of m containing the column span of sub?
bool subgroup_contains(const FinGenAb& m, const ZMat& gens, const ZMat& sub);

// ---- nonabelian degree one ----

// alpha[s] is an element of A per group element s, with
// alpha(s t) = alpha(s) . (s |> alpha(t)) and alpha(e) = e.
struct Cocycle1 {
    std::vector<int> alpha;
};
void validate_cocycle1(const FiniteGroup& g, const FiniteGroup& a, const GroupOnGroup& act,
                       const Cocycle1& c);

struct NonabelianH1 {
    std::vector<Cocycle1> cocycles;  // every cocycle, lexicographic
    std::vector<int> class_of;       // per cocycle
    std::vector<int> reps;           // one cocycle index per class
};
NonabelianH1 h1_nonabelian(const FiniteGroup& g, const FiniteGroup& a,
                           const GroupOnGroup& act, std::int64_t budget);

// s |> x becomes alpha(s) . (s |> x) . alpha(s)^{-1}
GroupOnGroup twist_action(const FiniteGroup& g, const FiniteGroup& a,
                          const GroupOnGroup& act, const Cocycle1& alpha);
// Sends a cocycle of the original action to one of the alpha-twisted action:
// beta maps to s -> beta(s) . alpha(s)^{-1}.  Descends to a bijection on
// classes that sends [alpha] to the neutral class.
Cocycle1 tau_twist(const FiniteGroup& g, const FiniteGroup& a, const Cocycle1& alpha,
                   const Cocycle1& beta);

// ---- direct sums ----

struct DirectSum {
    FinGenAb sum;
    std::vector<std::vector<int>> cmap;  // per part, part coordinate -> sum coordinate
};
DirectSum direct_sum(const std::vector<const FinGenAb*>& parts);

// adds b into m with row/column indices relabeled through rmap/cmap
void add_mapped(ZMat& m, const std::vector<int>& rmap, const std::vector<int>& cmap,
                const ZMat& b);

// ---- simplicial abelian groups ----

struct SimplicialAbGroup {
    int dim_bound = 0;
    std::vector<FinGenAb> groups;
    std::vector<std::vector<ZMat>> face;   // face[n][k]: level n -> n-1 (n >= 1)
    std::vector<std::vector<ZMat>> degen;  // degen[n][k]: level n -> n+1 (n < bound)
};
SimplicialAbGroup make_simplicial_ab(int dim_bound, std::vector<FinGenAb> groups,
                                     std::vector<std::vector<ZMat>> face,
                                     std::vector<std::vector<ZMat>> degen);

struct SimplicialGAb {
    SimplicialAbGroup ab;
    FiniteGroup g;
    std::vector<std::vector<ZMat>> action;  // action[a][n], level endomorphisms
};
SimplicialGAb make_simplicial_gab(SimplicialAbGroup ab, FiniteGroup g,
                                  std::vector<std::vector<ZMat>> action);

// Levelwise free module on the simplices, with induced faces, degeneracies,
// and action.
SimplicialGAb free_abelianization(const GSpace& x);
// Sum of vertex coefficients of a degree-0 chain.
mpz_class augmentation(const ZVec& chain0);

// Alternating face sums, unnormalized.
ChainComplex moore_underline(const SimplicialAbGroup& s);
GComplex moore_underline_g(const SimplicialGAb& s);

// Right adjoint levels: one module summand per surjection onto each degree
// in range; operators move summands by epi-mono factorization, applying the
// differential for the top-missing injection and zero for all others.
SimplicialAbGroup dold_kan_overline(const ChainComplex& c, int dim_bound);
SimplicialGAb dold_kan_overline_g(const GComplex& c, int dim_bound);

// Pointwise simplicial set of a levelwise-finite simplicial group, with the
// induced action.
GSpace to_gsimplicial(const SimplicialGAb& s, std::int64_t budget);
int element_index(const FinGenAb& m, const ZVec& reduced);
ZVec element_at(const FinGenAb& m, int index);

// Eilenberg-MacLane model: overline of the module concentrated in one degree.
GSpace em_gspace(const GModule& m, int n, int dim_bound, std::int64_t budget);

// ---- space homology ----

struct SpaceChains {
    ChainComplex complex;                  // normalized: nondegenerate basis
    std::vector<std::vector<int>> nondeg;  // per level: simplex ids in basis order
    std::vector<std::vector<int>> pos;     // per level: simplex -> basis position or -1
};
SpaceChains normalized_chains(const SimplicialSet& x);
std::vector<FinGenAb> space_homology(const SimplicialSet& x);

// ---- hypercohomology ----

// Total-complex cohomology in degree n of the bar cochains with values in a
// bounded complex: blocks C^{n+q}(G, C_q) over in-range q with n + q >= 0.
Subquotient hypercohomology(const GComplex& c, int n);
// Coordinate layout of that total degree: per in-range q with n + q >= 0,
// the offset of block q (ascending q), plus the total dimension.
struct TotalDegreeLayout {
    std::vector<int> qs;
    std::vector<int> offset;
    int dim = 0;
};
TotalDegreeLayout total_layout(const GComplex& c, int n);
ZMat total_differential(const GComplex& c, int n);  // degree n -> n+1
ZMat total_relations(const GComplex& c, int n);

// ---- long exact sequences ----

struct SesOfGComplexes {
    GComplex a, b, c;
    std::vector<ZMat> f;  // per degree index, a -> b
    std::vector<ZMat> g;  // per degree index, b -> c
};
// Validates equal groups and ranges, equivariance, and levelwise exactness.
SesOfGComplexes make_ses(GComplex a, GComplex b, GComplex c, std::vector<ZMat> f,
                         std::vector<ZMat> g);

struct LesReport {
    bool exact = true;
    int fail_degree = 0;
    std::string fail_slot;
    std::vector<FinGenAb> ha, hb, hc;  // degrees n_lo .. n_hi
};
// Checks exactness of the long sequence through total degrees n_lo..n_hi
// (the connecting map is computed by lifting through the levelwise maps).
LesReport les_check(const SesOfGComplexes& s, int n_lo, int n_hi);

}  // namespace eqsimp
