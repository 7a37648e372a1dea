#pragma once
// Fundamental groups of finite simplicial sets via edge paths: a spanning
// tree picks generators, nondegenerate triangles give relations, and coset
// enumeration turns the presentation into an explicit finite group.

#include <vector>

#include "eqsimp/group.hpp"
#include "eqsimp/simplicial.hpp"

namespace eqsimp {

// Letters are 1-based generator ids; negative letters are inverses.
struct Presentation {
    int generators = 0;
    std::vector<std::vector<int>> relators;
};

struct EnumeratedGroup {
    FiniteGroup group;                      // element 0 is the identity
    std::vector<int> generator_elt;         // group element per generator
    std::vector<std::vector<int>> witness;  // a word in letters per element
};

// Coset enumeration over the trivial subgroup.  Throws cap_exceeded when
// the coset table outgrows the cap (in particular for infinite groups).
EnumeratedGroup enumerate_presented_group(const Presentation& p, int order_cap);

// An edge path step: (level-1 simplex, +1 forward / -1 reversed).
// Edges run from vertex d_1 to vertex d_0.
using EdgePath = std::vector<std::pair<int, int>>;

struct Pi1Result {
    FiniteGroup group;
    int base_vertex = 0;
    std::vector<int> edge_class;             // element per edge (identity on tree
                                             // and degenerate edges)
    std::vector<int> generator_edge;         // edge behind each generator
    std::vector<std::vector<int>> element_word;  // letters realizing each element
    std::vector<int> tree_parent;            // per vertex; -1 at the base
    std::vector<int> tree_edge;              // edge to parent; -1 at the base
    std::vector<int> tree_dir;               // +1 when that edge runs parent -> vertex
};

// Path group at base_vertex of a connected complex with levels up to at
// least 1; relations come from level 2 when present.
Pi1Result edge_path_pi1(const SimplicialSet& x, int base_vertex, int order_cap);

EdgePath path_from_base(const Pi1Result& p, int vertex);
// The based loop representing a generator: tree path out, the edge, tree path back.
EdgePath loop_of_edge(const Pi1Result& p, const SimplicialSet& x, int edge);
// Product of edge classes along a path (left to right).
int path_class(const Pi1Result& p, const EdgePath& path);
// Element-wise image of px.group in py.group along f (levels 0..1 used),
// transported to py's base along its spanning tree.
std::vector<int> induced_pi1(const Pi1Result& px, const SimplicialSet& x,
                             const SimplicialSet& y, const Pi1Result& py,
                             const SimplicialMap& f);

}  // namespace eqsimp
