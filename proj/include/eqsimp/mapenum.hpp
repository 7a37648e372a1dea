#pragma once
// Exhaustive enumeration of simplicial maps and their homotopy classes,
// plain and equivariant.  Equivariant enumeration requires a free source
// action so that values on orbit representatives determine the map.

#include <cstdint>
#include <vector>

#include "eqsimp/equivariant.hpp"
#include "eqsimp/simplicial.hpp"

namespace eqsimp {

// All maps defined on levels 0..up_to that commute with faces and
// degeneracies in that range.  Deterministic order: lexicographic in the
// values chosen for nondegenerate simplices, scanned level by level.
std::vector<SimplicialMap> simplicial_maps(const SimplicialSet& x,
                                           const SimplicialSet& y, int up_to,
                                           std::int64_t budget);

// Equivariant maps between spaces with the same group; the source action
// must be free.  Values on the smallest-index orbit representatives are
// enumerated, the rest follow by translation.
std::vector<SimplicialMap> equivariant_maps(const GSpace& x, const GSpace& y,
                                            int up_to, std::int64_t budget);

// Maps partitioned by the equivalence generated by one-step homotopies,
// i.e. maps out of the cylinder with the given ends.
struct MapClasses {
    std::vector<SimplicialMap> maps;
    std::vector<int> class_of;  // per map
    std::vector<int> reps;      // smallest map index per class, ascending
};

// Requires the target to fill horns up to min(up_to, dim_bound - 1).
MapClasses homotopy_classes(const SimplicialSet& x, const SimplicialSet& y,
                            int up_to, std::int64_t budget);

// Equivariant maps under the closure of equivariant cylinder homotopies
// (the group acting trivially on the interval factor).  Horn filling of the
// target is the caller's concern.
MapClasses equivariant_homotopy_classes(const GSpace& x, const GSpace& y,
                                        int up_to, std::int64_t budget);

// Index of the constant-vertex simplex of the standard 1-simplex at a level.
int interval_end_index(int level, int vertex);

// Restriction of a map out of product(x, standard 1-simplex) to one end.
SimplicialMap cylinder_end(const SimplicialMap& h, int vertex);

}  // namespace eqsimp
