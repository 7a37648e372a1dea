#pragma once
// Homotopy fixed points of a finite group acting on a bounded simplicial
// set: exhaustive enumeration over the translation space, splitting
// classification of the path-group extension, the obstruction cocycle for
// pushing a partial equivariant map over the next level, the staged
// pipeline that reassembles the enumeration from components, sections, and
// obstructions, a page of cohomology entries, and fixed points of
// Eilenberg-MacLane spaces.

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "eqsimp/abelian.hpp"
#include "eqsimp/equivariant.hpp"
#include "eqsimp/homalg.hpp"
#include "eqsimp/mapenum.hpp"
#include "eqsimp/simplicial.hpp"

namespace eqsimp {

// Does the space agree, levelwise up to its own bound, with the right
// extension of its truncation at the given level?
bool is_coskeletal_above(const SimplicialSet& x, int level, std::int64_t budget);

// Certified second-homotopy metadata for an equivariant space.  The module
// carries the group action; sphere_class sends the four level-2 faces
// (d0, d1, d2, d3) of a compatible boundary sphere to its class in module
// coordinates; add_to_simplex, when present, moves a level-2 simplex to
// another one with the same boundary, shifted by a module element.
struct Pi2Data {
    GModule module;
    std::function<ZVec(const std::array<int, 4>&)> sphere_class;
    std::function<int(int, const ZVec&)> add_to_simplex;
};

// Trivial metadata for a space that equals the right extension of its own
// 2-truncation (verified).
Pi2Data pi2_coskeletal(const GSpace& x, std::int64_t budget);
// Metadata for the degree-2 Eilenberg-MacLane model of a finite module
// (level counts, boundary sums, and the action are verified against it).
Pi2Data pi2_of_em(const GSpace& x, const GModule& m);
// Componentwise metadata on a levelwise product (decomposition verified).
Pi2Data pi2_of_product(const GSpace& xy, const GSpace& x, const GSpace& y,
                       const Pi2Data& px, const Pi2Data& py);
// Metadata for a connected horn-filling space with trivial path group:
// degree-2 homology of the normalized chains, with the induced action.
Pi2Data pi2_by_hurewicz(const GSpace& x, int order_cap, std::int64_t budget);

// Equivariant simplicial maps from the level-truncated translation space
// into the target truncated at the same level, modulo equivariant homotopy.
// By adjunction this only depends on the right extension of the truncated
// target.  Horn filling is verified up to min(level, bound - 1).
MapClasses hfp_bruteforce(const GSpace& x, int level, std::int64_t budget);

// Homomorphic sections of an extension's projection, partitioned by
// conjugation by kernel elements.
struct SectionSet {
    std::vector<std::vector<int>> sections;  // per section: quotient elt -> total elt
    std::vector<int> class_of;               // per section
    std::vector<int> reps;                   // least section index per class
};
SectionSet section_classes(const Extension& e, std::int64_t budget);

// Outcome of pushing a partial equivariant map (levels 0..2 on the
// translation space) over level 3: either a witness, or the failure
// cochain, an inhomogeneous degree-3 cocycle valued in the module.
struct ObstructionClass {
    int degree = 2;
    bool extended = false;
    SimplicialMap witness;      // levels 0..3 when extended
    std::vector<ZVec> cochain;  // per block of G^3 in module coordinates, else empty
    ZVec cls;                   // degree-3 cohomology coordinates, empty when extended
    bool vanishes = false;
};
ObstructionClass obstruction_class(const GSpace& eg, const GSpace& x, const Pi2Data& pi2,
                                   const SimplicialMap& partial, std::int64_t budget);

// Shift an equivariant map at level 2 by an inhomogeneous degree-2 cochain
// (normalized internally) and re-extend over level 3.  Needs the
// add_to_simplex hook; extension succeeds exactly when the shift respects
// the cocycle law.
SimplicialMap add_cocycle_to_map(const GSpace& eg, const GSpace& x, const Pi2Data& pi2,
                                 const SimplicialMap& f, const std::vector<ZVec>& c2,
                                 std::int64_t budget);

// One cell of the staged computation: an invariant component, a section
// class of its path-group extension, the obstruction of that section, and
// the enumerated classes that land there.
struct HfpCell {
    int component = 0;
    int section_class = 0;
    ObstructionClass obstruction;
    std::vector<int> classes;  // ids into the brute-force class list
};

struct HfpReport {
    Pi0 components;
    std::vector<int> invariant_components;
    std::vector<HfpCell> cells;
    MapClasses brute;  // level-3 enumeration over the whole space
    int total = 0;     // number of brute-force classes
};

// Staged computation for a target whose homotopy stops at degree 2:
// invariant components, then section classes of each component's
// path-group extension, then the degree-3 obstruction per section class.
// Every enumerated class is matched to its cell, and a cell's obstruction
// must vanish exactly when its fiber is nonempty.
HfpReport hfp_postnikov(const GSpace& x, const Pi2Data& pi2, int order_cap,
                        std::int64_t budget);

// Group cohomology with module coefficients: the answer for the
// Eilenberg-MacLane space of the module in the same degree.
FinGenAb em_fixed_points(const GModule& m, int n);

// Coordinates for a finite abelian group: the presented lattice quotient
// (one ambient coordinate per generating element), the coordinates of each
// element, and the element at each coordinate index.
struct AbelianPresentation {
    Subquotient pres;
    std::vector<int> gens;
    std::vector<ZVec> coords_of;  // per group element
    std::vector<int> elem_of;     // per index of pres.group()
};
AbelianPresentation abelian_presentation(const FiniteGroup& a);

// One page entry: a group in homotopy degree 2, a pointed set below.
struct E2Entry {
    bool in_region = false;  // homotopy degree >= cohomology degree - 1
    bool computed = false;
    bool is_group = false;
    FinGenAb group;             // when is_group
    std::int64_t set_size = 0;  // when computed
};
struct E2Page {
    int s_max = 0, t_max = 0;
    std::vector<std::vector<E2Entry>> entry;  // entry[s][t]
};
// Page of cohomology entries at a base equivariant map from the
// translation space.  Row 0 counts invariant components; row 1 carries the
// path group with the transported action (pointed sets, plus a cohomology
// count in degree 2 when that group is abelian); row 2 is cohomology with
// coefficients in the certified module.
E2Page e2_page(const GSpace& x, const SimplicialMap& base, const Pi2Data& pi2,
               int s_max, int t_max, int order_cap, std::int64_t budget);

}  // namespace eqsimp
