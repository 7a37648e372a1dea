#include "eqsimp/mapenum.hpp"

#include <algorithm>
#include <map>

#include "eqsimp/config.hpp"

namespace eqsimp {

namespace {

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table() == b.table() && a.identity() == b.identity();
}

struct Orbits {
    // per level: smallest-index representative and an element translating it
    std::vector<std::vector<int>> rep, trans;
    // nondegenerate representatives per level, ascending
    std::vector<std::vector<int>> slots;
};

Orbits orbit_data(const GSpace& x, int up_to) {
    const SimplicialSet& s = x.space();
    const int ord = x.group().order();
    Orbits o;
    o.rep.resize(up_to + 1);
    o.trans.resize(up_to + 1);
    o.slots.resize(up_to + 1);
    for (int n = 0; n <= up_to; ++n) {
        o.rep[n].assign(s.count(n), -1);
        o.trans[n].assign(s.count(n), -1);
        for (int i = 0; i < s.count(n); ++i) {
            if (o.rep[n][i] >= 0) continue;
            for (int a = 0; a < ord; ++a) {
                const int j = x.act(a, n, i);
                if (o.rep[n][j] < 0) {
                    o.rep[n][j] = i;
                    o.trans[n][j] = a;
                }
            }
            if (!s.degenerate(n, i)) o.slots[n].push_back(i);
        }
    }
    return o;
}

struct Enumerator {
    const GSpace& x;
    const GSpace& y;
    int up_to;
    BudgetMeter meter;
    Orbits orbits;
    // per level >= 1: boundary tuple of a target simplex -> candidate indices
    std::vector<std::map<std::vector<int>, std::vector<int>>> candidates;
    std::vector<std::vector<int>> values;
    std::vector<SimplicialMap> out;

    Enumerator(const GSpace& xg, const GSpace& yg, int bound, std::int64_t budget)
        : x(xg), y(yg), up_to(bound), meter(budget, "enum_budget"),
          orbits(orbit_data(xg, bound)) {
        candidates.resize(up_to + 1);
        for (int n = 1; n <= up_to; ++n)
            for (int j = 0; j < y.space().count(n); ++j)
                candidates[n][y.space().boundary(n, j)].push_back(j);
        values.resize(up_to + 1);
        for (int n = 0; n <= up_to; ++n) values[n].assign(x.space().count(n), -1);
    }

    // Values of translates and of degenerate representatives follow from the
    // assigned representatives; lower levels are complete by this point.
    void fill_level(int n) {
        const SimplicialSet& s = x.space();
        for (int i = 0; i < s.count(n); ++i) {
            const int r = orbits.rep[n][i];
            if (r == i) {
                if (!s.degenerate(n, i)) continue;
                values[n][i] =
                    y.space().apply_op(s.core_dim(n, i),
                                       values[s.core_dim(n, i)][s.core_idx(n, i)],
                                       s.surj(n, i));
            } else {
                values[n][i] = y.act(orbits.trans[n][i], n, values[n][r]);
            }
        }
    }

    void emit() {
        SimplicialMap f;
        f.values = values;
        if (!is_simplicial_map(x.space(), y.space(), f, up_to))
            throw invariant_violation("enumerated assignment is not simplicial");
        for (int a = 0; a < x.group().order(); ++a)
            for (int n = 0; n <= up_to; ++n)
                for (int i = 0; i < x.space().count(n); ++i)
                    if (f.values[n][x.act(a, n, i)] != y.act(a, n, f.values[n][i]))
                        throw invariant_violation("enumerated assignment is not equivariant");
        out.push_back(std::move(f));
    }

    void dfs(int level, int slot) {
        if (level > up_to) {
            emit();
            return;
        }
        if (slot == static_cast<int>(orbits.slots[level].size())) {
            fill_level(level);
            dfs(level + 1, 0);
            return;
        }
        const int i = orbits.slots[level][slot];
        if (level == 0) {
            for (int c = 0; c < y.space().count(0); ++c) {
                meter.charge(1);
                values[0][i] = c;
                dfs(level, slot + 1);
            }
            return;
        }
        std::vector<int> key(level + 1);
        for (int k = 0; k <= level; ++k)
            key[k] = values[level - 1][x.space().face(level, i, k)];
        auto it = candidates[level].find(key);
        if (it == candidates[level].end()) return;
        for (int c : it->second) {
            meter.charge(1);
            values[level][i] = c;
            dfs(level, slot + 1);
        }
    }
};

GSpace as_trivial_gspace(const SimplicialSet& s) {
    return trivial_gspace(trivial_group(), s);
}

MapClasses classes_from(std::vector<SimplicialMap> maps,
                        const std::vector<SimplicialMap>& homotopies) {
    std::map<SimplicialMap, int> index;
    for (size_t i = 0; i < maps.size(); ++i) index[maps[i]] = static_cast<int>(i);
    std::vector<int> parent(maps.size());
    for (size_t i = 0; i < maps.size(); ++i) parent[i] = static_cast<int>(i);
    auto root = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& h : homotopies) {
        const SimplicialMap f0 = cylinder_end(h, 0);
        const SimplicialMap f1 = cylinder_end(h, 1);
        auto a = index.find(f0);
        auto b = index.find(f1);
        if (a == index.end() || b == index.end())
            throw invariant_violation("cylinder end is not an enumerated map");
        parent[root(a->second)] = root(b->second);
    }
    MapClasses r;
    r.maps = std::move(maps);
    r.class_of.assign(r.maps.size(), -1);
    for (size_t i = 0; i < r.maps.size(); ++i) {
        const int rt = root(static_cast<int>(i));
        if (r.class_of[rt] < 0) {
            r.class_of[rt] = static_cast<int>(r.reps.size());
            r.reps.push_back(static_cast<int>(i));
        }
        r.class_of[i] = r.class_of[rt];
    }
    return r;
}

}  // namespace

std::vector<SimplicialMap> equivariant_maps(const GSpace& x, const GSpace& y,
                                            int up_to, std::int64_t budget) {
    if (!same_group(x.group(), y.group()))
        throw invalid_input("equivariant maps need a common group");
    if (up_to < 0 || up_to > x.space().dim_bound() || up_to > y.space().dim_bound())
        throw invalid_input("map level exceeds a dimension bound");
    if (!is_free_action(x).free)
        throw invalid_input("equivariant enumeration needs a free source action");
    Enumerator e(x, y, up_to, budget);
    e.dfs(0, 0);
    return std::move(e.out);
}

std::vector<SimplicialMap> simplicial_maps(const SimplicialSet& x,
                                           const SimplicialSet& y, int up_to,
                                           std::int64_t budget) {
    return equivariant_maps(as_trivial_gspace(x), as_trivial_gspace(y), up_to,
                            budget);
}

int interval_end_index(int level, int vertex) {
    const auto maps = all_monotone(level, 1);
    for (size_t i = 0; i < maps.size(); ++i) {
        bool constant = true;
        for (int v : maps[i])
            if (v != vertex) constant = false;
        if (constant) return static_cast<int>(i);
    }
    throw invariant_violation("interval has no constant simplex");
}

SimplicialMap cylinder_end(const SimplicialMap& h, int vertex) {
    SimplicialMap f;
    f.values.resize(h.values.size());
    for (size_t n = 0; n < h.values.size(); ++n) {
        const int stride = static_cast<int>(n) + 2;
        const int end = interval_end_index(static_cast<int>(n), vertex);
        if (h.values[n].size() % stride != 0)
            throw invalid_input("map is not defined on a cylinder");
        const int count = static_cast<int>(h.values[n].size()) / stride;
        f.values[n].resize(count);
        for (int i = 0; i < count; ++i) f.values[n][i] = h.values[n][i * stride + end];
    }
    return f;
}

MapClasses homotopy_classes(const SimplicialSet& x, const SimplicialSet& y,
                            int up_to, std::int64_t budget) {
    const int kan_level = std::min(up_to, y.dim_bound() - 1);
    if (kan_level >= 1 && !check_kan(y, kan_level, budget).ok)
        throw invalid_input("homotopy classes need a horn-filling target");
    auto maps = simplicial_maps(x, y, up_to, budget);
    const SimplicialSet interval = standard_simplex(1, up_to);
    const SimplicialSet cyl = product(x, interval, up_to, budget);
    auto homotopies = simplicial_maps(cyl, y, up_to, budget);
    return classes_from(std::move(maps), homotopies);
}

MapClasses equivariant_homotopy_classes(const GSpace& x, const GSpace& y,
                                        int up_to, std::int64_t budget) {
    auto maps = equivariant_maps(x, y, up_to, budget);
    const GSpace interval =
        trivial_gspace(x.group(), standard_simplex(1, up_to));
    const GSpace cyl = product_gspace(x, interval, up_to, budget);
    auto homotopies = equivariant_maps(cyl, y, up_to, budget);
    return classes_from(std::move(maps), homotopies);
}

}  // namespace eqsimp
