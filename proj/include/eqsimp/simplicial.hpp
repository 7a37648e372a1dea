#pragma once
// Finite simplicial sets, materialized level by level up to a dimension
// bound.  Every simplex is stored, degenerate ones included; the simplicial
// identities are verified on construction and each simplex carries its
// normal form (a surjection applied to a nondegenerate core).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqsimp/config.hpp"

namespace eqsimp {

// A monotone map [m] -> [n] as its value list (length m+1).
using Monotone = std::vector<int>;

Monotone monotone_identity(int m);
Monotone coface(int n, int i);        // [n-1] -> [n] skipping i
Monotone codegeneracy(int n, int i);  // [n+1] -> [n] repeating i
// after(before(x)); checks composability.
Monotone compose_monotone(const Monotone& after, const Monotone& before);
// f = mono . epi with epi surjective onto [k], mono injective into the target.
void epi_mono_factor(const Monotone& f, int target, Monotone& epi, Monotone& mono);
std::vector<Monotone> all_monotone(int m, int n);
std::vector<Monotone> all_surjections(int m, int k);

struct SimplicialData {
    int dim_bound = 0;
    std::vector<int> counts;
    // faces[n][i][k] = d_k of simplex i at level n (n >= 1, k in 0..n)
    std::vector<std::vector<std::vector<int>>> faces;
    // degen[n][i][k] = s_k of simplex i at level n (n < dim_bound, k in 0..n)
    std::vector<std::vector<std::vector<int>>> degen;
};

class SimplicialSet {
public:
    SimplicialSet() = default;
    explicit SimplicialSet(SimplicialData d);

    int dim_bound() const { return d_.dim_bound; }
    int count(int n) const { return d_.counts[n]; }
    long long total_simplices() const;
    int face(int n, int i, int k) const { return d_.faces[n][i][k]; }
    int degen_of(int n, int i, int k) const { return d_.degen[n][i][k]; }
    bool degenerate(int n, int i) const { return witness_[n][i].first >= 0; }
    int core_dim(int n, int i) const { return core_dim_[n][i]; }
    int core_idx(int n, int i) const { return core_idx_[n][i]; }
    const Monotone& surj(int n, int i) const { return surj_[n][i]; }
    int nondegenerate_count(int n) const;

    // theta: [m] -> [n]; evaluates the induced operator on simplex i of
    // level n, landing in level m (m <= dim_bound).
    int apply_op(int n, int i, const Monotone& theta) const;
    // vertex k of a simplex (the image of [0] -> [n], 0 -> k)
    int vertex(int n, int i, int k) const;

    const SimplicialData& data() const { return d_; }
    std::vector<int> boundary(int n, int i) const { return d_.faces[n][i]; }

private:
    SimplicialData d_;
    std::vector<std::vector<std::pair<int, int>>> witness_;  // (k, y) with x = s_k y, or (-1,-1)
    std::vector<std::vector<int>> core_dim_, core_idx_;
    std::vector<std::vector<Monotone>> surj_;
    void validate() const;
    void build_normal_forms();
};

using TruncatedSimplicialSet = SimplicialSet;  // a set whose bound is its level count

// A level-respecting assignment of simplices; levels 0..bound of the source.
struct SimplicialMap {
    std::vector<std::vector<int>> values;  // values[n][i]
    int levels() const { return static_cast<int>(values.size()) - 1; }
    bool operator==(const SimplicialMap& o) const = default;
    bool operator<(const SimplicialMap& o) const { return values < o.values; }
};

// Verify f commutes with faces and degeneracies up to the given level.
bool is_simplicial_map(const SimplicialSet& x, const SimplicialSet& y,
                       const SimplicialMap& f, int up_to);
SimplicialMap identity_map(const SimplicialSet& x, int up_to);
SimplicialMap compose_maps(const SimplicialSet& x, const SimplicialSet& y,
                           const SimplicialSet& z, const SimplicialMap& f,
                           const SimplicialMap& g, int up_to);  // g . f

// ---- builders ----
SimplicialSet standard_simplex(int n, int dim_bound);
SimplicialSet circle(int dim_bound);  // one vertex, one nondegenerate edge
SimplicialSet disjoint_union(const SimplicialSet& a, const SimplicialSet& b);

// ---- core operations ----
SimplicialSet truncate(const SimplicialSet& x, int n);
// Freely fill levels above the bound of t with degeneracies.
SimplicialSet skeleton_extend(const SimplicialSet& t, int dim_bound);
// Right adjoint to truncation: levels above t's bound are matching families.
SimplicialSet coskeleton_extend(const SimplicialSet& t, int dim_bound,
                                std::int64_t simplex_budget);
SimplicialSet postnikov_piece(const SimplicialSet& x, int n, std::int64_t simplex_budget);
SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y, int dim_bound,
                      std::int64_t simplex_budget);

// Restrict to a subset of simplices (must be closed under faces and
// degeneracies); old_index maps new simplices to their source indices.
struct SubcomplexResult {
    SimplicialSet space;
    std::vector<std::vector<int>> old_index;   // per level
    std::vector<std::vector<int>> new_index;   // per level, -1 when absent
};
SubcomplexResult subcomplex(const SimplicialSet& x,
                            const std::vector<std::vector<char>>& keep);
SubcomplexResult component_of(const SimplicialSet& x, int vertex);

struct Pi0 {
    int count = 0;
    std::vector<int> component;  // per vertex
    std::vector<int> rep;        // least vertex per component
};
Pi0 pi0(const SimplicialSet& x);

struct KanFailure {
    int n = 0, k = 0;
    std::vector<int> horn;  // faces, entry k meaningless
};
struct KanReport {
    bool ok = true;
    std::optional<KanFailure> first_failure;
    long long horns_checked = 0;
};
KanReport check_kan(const SimplicialSet& x, int up_to, std::int64_t budget);

// Backtracking search for a level-respecting isomorphism.
std::optional<SimplicialMap> find_simplicial_iso(const SimplicialSet& x,
                                                 const SimplicialSet& y,
                                                 std::int64_t budget);

// ---- groupoids ----
class Groupoid {
public:
    struct Mor {
        int src = 0, tgt = 0;
    };
    Groupoid() = default;
    Groupoid(int objects, std::vector<Mor> mors, std::vector<std::vector<int>> comp,
             std::vector<int> identity_mor);

    int objects() const { return objects_; }
    int morphisms() const { return static_cast<int>(mors_.size()); }
    int src(int m) const { return mors_[m].src; }
    int tgt(int m) const { return mors_[m].tgt; }
    // g after f; defined when tgt(f) == src(g)
    int compose(int g, int f) const { return comp_[g][f]; }
    int identity(int obj) const { return id_[obj]; }
    int inverse(int m) const { return inv_[m]; }

private:
    int objects_ = 0;
    std::vector<Mor> mors_;
    std::vector<std::vector<int>> comp_;
    std::vector<int> id_, inv_;
};

// Chains of composable morphisms; level 0 = objects.
SimplicialSet nerve(const Groupoid& g, int dim_bound, std::int64_t simplex_budget);
// The chain of morphism ids behind a nerve simplex (empty for level 0).
std::vector<int> nerve_chain(const Groupoid& g, int dim_bound, int level, int index);
int nerve_index_of_chain(const Groupoid& g, int dim_bound, const std::vector<int>& chain);
// Every chain, by level then index, in nerve enumeration order; the level-0
// entry for object o is the singleton {o}.
std::vector<std::vector<std::vector<int>>> nerve_chains(const Groupoid& g, int dim_bound,
                                                        std::int64_t simplex_budget);

}  // namespace eqsimp
