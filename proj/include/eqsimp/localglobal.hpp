#pragma once
// Local-global bookkeeping over a finite group: families of decomposition
// subgroups with chosen inertia, restriction of equivariant homotopy
// classes to subgroups, unramified class sets through inertia-fixed
// subcomplexes, adelic class tuples, localization maps with their fibers
// and kernels, and inverse limits of finite towers.

#include <cstdint>
#include <vector>

#include "eqsimp/abelian.hpp"
#include "eqsimp/equivariant.hpp"
#include "eqsimp/group.hpp"
#include "eqsimp/homalg.hpp"
#include "eqsimp/mapenum.hpp"
#include "eqsimp/simplicial.hpp"
#include "eqsimp/zmat.hpp"

namespace eqsimp {

// One decomposition subgroup with a normal inertia subgroup, both given as
// sorted element lists of the ambient group.
struct Place {
    std::vector<int> decomposition;
    std::vector<int> inertia;
};

struct PlaceFamily {
    FiniteGroup group;
    std::vector<Place> places;
    std::vector<char> ramified;  // per place: skip the unramified constraint
};
void validate_place_family(const PlaceFamily& f);

// The same space with only the subgroup acting.
GSpace restrict_gspace(const GSpace& x, const SubgroupGroup& h);

// Precompose an equivariant map out of the ambient translation space with
// the levelwise tuple embedding of the subgroup's translation space.
SimplicialMap restrict_translation_map(const FiniteGroup& ambient, const SubgroupGroup& h,
                                       const SimplicialMap& f);

// Homotopy classes of equivariant maps from the subgroup's translation
// space into the restricted action.
struct LocalClasses {
    SubgroupGroup sub;
    GSpace space;
    MapClasses classes;
};
LocalClasses local_classes(const GSpace& x, const std::vector<int>& subgroup, int level,
                           std::int64_t budget);

// Class of the restriction of a map defined on levels 0..level of the
// ambient translation space; throws when the restriction is not one of the
// enumerated maps.
int restrict_class(const GSpace& x, const SimplicialMap& f, const LocalClasses& loc);

// Classes over the acting group that factor through the inertia-fixed
// subcomplex with its action of the quotient by inertia.
struct UnramifiedResult {
    SubcomplexResult fixed;    // inertia-fixed subcomplex of the space
    QuotientGroup quo;         // acting group modulo inertia
    GSpace fixed_space;        // the subcomplex as a quotient-group space
    MapClasses inner;          // classes over the quotient on the subcomplex
    std::vector<int> forward;  // per inner class: its class over the full group
    std::vector<int> image;    // sorted distinct values of forward
};
UnramifiedResult unramified_classes(const GSpace& x, const std::vector<int>& inertia,
                                    const MapClasses& ambient_classes, int level,
                                    std::int64_t budget);

// Everything one space over one family localizes to: the global classes,
// the per-place local and unramified classes, and the per-class tuple of
// restrictions.
struct LocalizationData {
    PlaceFamily family;
    int level = 0;
    MapClasses global;
    std::vector<LocalClasses> local;
    std::vector<UnramifiedResult> unram;
    std::vector<std::vector<int>> loc_of;  // per global class, local class per place
};
LocalizationData localize(const GSpace& x, const PlaceFamily& family, int level,
                          std::int64_t budget);

// A tuple of one local class per place; outside the ramified mask the class
// must come with an inner class witnessing membership in the unramified
// image (-1 where no witness is required or none exists).
struct AdelicClassTuple {
    std::vector<int> local_class;
    std::vector<int> unramified_witness;
};
void validate_adelic_tuple(const LocalizationData& d, const AdelicClassTuple& t);

// Every valid tuple, lexicographic in the local classes.
std::vector<AdelicClassTuple> adelic_set(const LocalizationData& d, std::int64_t budget);

// Tuple of restrictions of a global class, with witnesses where they exist.
AdelicClassTuple loc_map(const LocalizationData& d, int global_class);

// Global classes whose restrictions match the tuple, ascending.
std::vector<int> loc_fiber(const LocalizationData& d, const AdelicClassTuple& y);

struct SurvivingPoint {
    int point = 0;    // index into the input list
    int witness = 0;  // least global class localizing to it
};
// The input tuples that are restrictions of global classes.
std::vector<SurvivingPoint> obstruction_set(const LocalizationData& d,
                                            const std::vector<AdelicClassTuple>& points);

// Kernel of a class-coordinate map between two presented groups, as a
// subquotient of the source coordinate lattice.
Subquotient kernel_subquotient(const FinGenAb& a, const FinGenAb& b, const ZMat& f);

// Kernel of degree-n cohomology restriction to every decomposition
// subgroup of the family.
struct ShaResult {
    Subquotient global;              // degree-n cohomology over the full group
    std::vector<Subquotient> local;  // per place, over the decomposition subgroup
    std::vector<ZMat> restriction;   // per place, induced map on class coordinates
    Subquotient kernel;              // joint kernel in global class coordinates
    std::vector<ZVec> cocycle_reps;  // one cochain-level cocycle per kernel generator
};
ShaResult sha_kernel(const GModule& m, int n, const PlaceFamily& family,
                     std::int64_t budget);

// A finite tower S_0 <- S_1 <- ... of sets given by sizes and downward maps
// (maps[k] sends set k+1 to set k).
struct Tower {
    std::vector<int> sizes;
    std::vector<std::vector<int>> maps;
};
void validate_tower(const Tower& t);

struct TowerLimit {
    std::vector<std::vector<int>> threads;  // compatible families, lexicographic
    bool nonempty = false;
    std::vector<int> witness;  // least thread when nonempty
};
TowerLimit inverse_limit_tower(const Tower& t, std::int64_t budget);

}  // namespace eqsimp
