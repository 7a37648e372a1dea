#include "eqsimp/equivariant.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "eqsimp/config.hpp"
#include "eqsimp/homalg.hpp"

namespace eqsimp {

GSpace::GSpace(FiniteGroup g, SimplicialSet x,
               std::vector<std::vector<std::vector<int>>> action)
    : group_(std::move(g)), space_(std::move(x)), action_(std::move(action)) {
    const int ord = group_.order();
    const int nb = space_.dim_bound();
    if (static_cast<int>(action_.size()) != ord)
        throw invalid_input("GSpace: one table per group element required");
    for (int a = 0; a < ord; ++a) {
        if (static_cast<int>(action_[a].size()) != nb + 1)
            throw invalid_input("GSpace: table level count mismatch");
        for (int n = 0; n <= nb; ++n) {
            if (static_cast<int>(action_[a][n].size()) != space_.count(n))
                throw invalid_input("GSpace: table size mismatch at a level");
            for (int v : action_[a][n])
                if (v < 0 || v >= space_.count(n))
                    throw invalid_input("GSpace: table entry out of range");
        }
    }
    const int e = group_.identity();
    for (int n = 0; n <= nb; ++n)
        for (int i = 0; i < space_.count(n); ++i)
            if (action_[e][n][i] != i)
                throw invalid_input("GSpace: identity must act trivially");
    for (int a = 0; a < ord; ++a)
        for (int b = 0; b < ord; ++b) {
            const int ab = group_.op(a, b);
            for (int n = 0; n <= nb; ++n)
                for (int i = 0; i < space_.count(n); ++i)
                    if (action_[a][n][action_[b][n][i]] != action_[ab][n][i])
                        throw invalid_input("GSpace: composition law fails");
        }
    for (int a = 0; a < ord; ++a)
        for (int n = 0; n <= nb; ++n)
            for (int i = 0; i < space_.count(n); ++i) {
                if (n >= 1)
                    for (int k = 0; k <= n; ++k)
                        if (space_.face(n, action_[a][n][i], k) !=
                            action_[a][n - 1][space_.face(n, i, k)])
                            throw invalid_input("GSpace: action does not commute with faces");
                if (n < nb)
                    for (int k = 0; k <= n; ++k)
                        if (space_.degen_of(n, action_[a][n][i], k) !=
                            action_[a][n + 1][space_.degen_of(n, i, k)])
                            throw invalid_input(
                                "GSpace: action does not commute with degeneracies");
            }
}

GSpace trivial_gspace(const FiniteGroup& g, SimplicialSet x) {
    std::vector<std::vector<std::vector<int>>> act(g.order());
    for (int a = 0; a < g.order(); ++a) {
        act[a].resize(x.dim_bound() + 1);
        for (int n = 0; n <= x.dim_bound(); ++n) {
            act[a][n].resize(x.count(n));
            std::iota(act[a][n].begin(), act[a][n].end(), 0);
        }
    }
    return GSpace(g, std::move(x), std::move(act));
}

std::vector<int> eg_tuple(int order, int level, int index) {
    std::vector<int> t(level + 1);
    for (int k = level; k >= 0; --k) {
        t[k] = index % order;
        index /= order;
    }
    return t;
}

int eg_index(int order, const std::vector<int>& tuple) {
    int v = 0;
    for (int c : tuple) v = v * order + c;
    return v;
}

GSpace eg_space(const FiniteGroup& g, int dim_bound, std::int64_t simplex_budget) {
    if (dim_bound < 0) throw invalid_input("eg_space: negative bound");
    const int ord = g.order();
    BudgetMeter meter(simplex_budget, "simplex_budget");
    SimplicialData d;
    d.dim_bound = dim_bound;
    d.counts.resize(dim_bound + 1);
    long long c = 1;
    for (int n = 0; n <= dim_bound; ++n) {
        c *= ord;
        meter.charge(c);
        d.counts[n] = static_cast<int>(c);
    }
    d.faces.resize(dim_bound + 1);
    d.degen.resize(dim_bound + 1);
    for (int n = 0; n <= dim_bound; ++n) {
        d.faces[n].resize(d.counts[n]);
        d.degen[n].resize(d.counts[n]);
        for (int i = 0; i < d.counts[n]; ++i) {
            const auto t = eg_tuple(ord, n, i);
            if (n >= 1) {
                d.faces[n][i].resize(n + 1);
                for (int k = 0; k <= n; ++k) {
                    auto f = t;
                    f.erase(f.begin() + k);
                    d.faces[n][i][k] = eg_index(ord, f);
                }
            }
            if (n < dim_bound) {
                d.degen[n][i].resize(n + 1);
                for (int k = 0; k <= n; ++k) {
                    auto s = t;
                    s.insert(s.begin() + k, t[k]);
                    d.degen[n][i][k] = eg_index(ord, s);
                }
            }
        }
    }
    std::vector<std::vector<std::vector<int>>> act(
        ord, std::vector<std::vector<int>>(dim_bound + 1));
    for (int a = 0; a < ord; ++a)
        for (int n = 0; n <= dim_bound; ++n) {
            act[a][n].resize(d.counts[n]);
            for (int i = 0; i < d.counts[n]; ++i) {
                auto t = eg_tuple(ord, n, i);
                for (int& c2 : t) c2 = g.op(a, c2);
                act[a][n][i] = eg_index(ord, t);
            }
        }
    return GSpace(g, SimplicialSet(std::move(d)), std::move(act));
}

Groupoid one_object_groupoid(const FiniteGroup& g) {
    std::vector<Groupoid::Mor> mors(g.order());
    std::vector<std::vector<int>> comp(g.order(), std::vector<int>(g.order()));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) comp[a][b] = g.op(a, b);
    return Groupoid(1, std::move(mors), std::move(comp), {g.identity()});
}

SimplicialSet bg_space(const FiniteGroup& g, int dim_bound, std::int64_t simplex_budget) {
    return quotient_space(eg_space(g, dim_bound, simplex_budget)).space;
}

SimplicialMap QuotientSpace::projection(int up_to) const {
    SimplicialMap f;
    f.values.assign(orbit_of.begin(), orbit_of.begin() + up_to + 1);
    return f;
}

namespace {

QuotientSpace quotient_by(const GSpace& x, const std::vector<int>& elems) {
    const int nb = x.space().dim_bound();
    QuotientSpace q;
    q.orbit_of.resize(nb + 1);
    q.rep_of.resize(nb + 1);
    for (int n = 0; n <= nb; ++n) {
        q.orbit_of[n].assign(x.space().count(n), -1);
        for (int i = 0; i < x.space().count(n); ++i) {
            if (q.orbit_of[n][i] >= 0) continue;
            const int id = static_cast<int>(q.rep_of[n].size());
            q.rep_of[n].push_back(i);
            for (int a : elems) q.orbit_of[n][x.act(a, n, i)] = id;
            if (q.orbit_of[n][i] != id)
                throw invariant_violation("quotient: element list does not cover orbits");
        }
    }
    SimplicialData d;
    d.dim_bound = nb;
    d.counts.resize(nb + 1);
    d.faces.resize(nb + 1);
    d.degen.resize(nb + 1);
    for (int n = 0; n <= nb; ++n) {
        d.counts[n] = static_cast<int>(q.rep_of[n].size());
        d.faces[n].resize(d.counts[n]);
        d.degen[n].resize(d.counts[n]);
        for (int o = 0; o < d.counts[n]; ++o) {
            const int r = q.rep_of[n][o];
            if (n >= 1) {
                d.faces[n][o].resize(n + 1);
                for (int k = 0; k <= n; ++k)
                    d.faces[n][o][k] = q.orbit_of[n - 1][x.space().face(n, r, k)];
            }
            if (n < nb) {
                d.degen[n][o].resize(n + 1);
                for (int k = 0; k <= n; ++k)
                    d.degen[n][o][k] = q.orbit_of[n + 1][x.space().degen_of(n, r, k)];
            }
        }
    }
    q.space = SimplicialSet(std::move(d));
    return q;
}

std::vector<int> all_elements(const FiniteGroup& g) {
    std::vector<int> v(g.order());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

QuotientSpace quotient_space(const GSpace& x) {
    return quotient_by(x, all_elements(x.group()));
}

GSpace product_gspace(const GSpace& x, const GSpace& y, int dim_bound,
                      std::int64_t simplex_budget) {
    if (x.group().table() != y.group().table() ||
        x.group().identity() != y.group().identity())
        throw invalid_input("product_gspace: factors carry different groups");
    SimplicialSet p = product(x.space(), y.space(), dim_bound, simplex_budget);
    const int ord = x.group().order();
    std::vector<std::vector<std::vector<int>>> act(
        ord, std::vector<std::vector<int>>(dim_bound + 1));
    for (int a = 0; a < ord; ++a)
        for (int n = 0; n <= dim_bound; ++n) {
            const int cy = y.space().count(n);
            act[a][n].resize(p.count(n));
            for (int i = 0; i < p.count(n); ++i)
                act[a][n][i] = x.act(a, n, i / cy) * cy + y.act(a, n, i % cy);
        }
    return GSpace(x.group(), std::move(p), std::move(act));
}

GSpace truncate_gspace(const GSpace& x, int n) {
    SimplicialSet t = truncate(x.space(), n);
    std::vector<std::vector<std::vector<int>>> act(x.group().order());
    for (int a = 0; a < x.group().order(); ++a)
        act[a].assign(x.action()[a].begin(), x.action()[a].begin() + n + 1);
    return GSpace(x.group(), std::move(t), std::move(act));
}

GSpace coskeleton_gspace(const GSpace& t, int dim_bound, std::int64_t simplex_budget) {
    const int tb = t.space().dim_bound();
    SimplicialSet cs = coskeleton_extend(t.space(), dim_bound, simplex_budget);
    const int ord = t.group().order();
    std::vector<std::vector<std::vector<int>>> act(
        ord, std::vector<std::vector<int>>(dim_bound + 1));
    for (int a = 0; a < ord; ++a)
        for (int n = 0; n <= std::min(tb, dim_bound); ++n) act[a][n] = t.action()[a][n];
    for (int m = tb + 1; m <= dim_bound; ++m) {
        std::map<std::vector<int>, int> by_tuple;
        for (int i = 0; i < cs.count(m); ++i) by_tuple[cs.boundary(m, i)] = i;
        for (int a = 0; a < ord; ++a) {
            act[a][m].resize(cs.count(m));
            for (int i = 0; i < cs.count(m); ++i) {
                std::vector<int> moved(m + 1);
                for (int k = 0; k <= m; ++k)
                    moved[k] = act[a][m - 1][cs.face(m, i, k)];
                auto it = by_tuple.find(moved);
                if (it == by_tuple.end())
                    throw invariant_violation("coskeleton action left the complex");
                act[a][m][i] = it->second;
            }
        }
    }
    return GSpace(t.group(), std::move(cs), std::move(act));
}

GSpace postnikov_gspace(const GSpace& x, int n, std::int64_t simplex_budget) {
    const int nb = x.space().dim_bound();
    const int m = std::min(n + 1, nb);
    return coskeleton_gspace(truncate_gspace(x, m), nb, simplex_budget);
}

SubcomplexResult fixed_points(const GSpace& x, const std::vector<int>& subgroup_elems) {
    const int nb = x.space().dim_bound();
    std::vector<std::vector<char>> keep(nb + 1);
    for (int n = 0; n <= nb; ++n) {
        keep[n].assign(x.space().count(n), 1);
        for (int i = 0; i < x.space().count(n); ++i)
            for (int a : subgroup_elems)
                if (x.act(a, n, i) != i) {
                    keep[n][i] = 0;
                    break;
                }
    }
    return subcomplex(x.space(), keep);
}

GSpace subcomplex_gspace(const GSpace& x, const SubcomplexResult& sub,
                         const FiniteGroup& new_group, const std::vector<int>& to_parent) {
    if (static_cast<int>(to_parent.size()) != new_group.order())
        throw invalid_input("subcomplex_gspace: one parent element per new element");
    for (int v : to_parent)
        if (v < 0 || v >= x.group().order())
            throw invalid_input("subcomplex_gspace: parent element out of range");
    const int nb = sub.space.dim_bound();
    std::vector<std::vector<std::vector<int>>> act(
        new_group.order(), std::vector<std::vector<int>>(nb + 1));
    for (int h = 0; h < new_group.order(); ++h)
        for (int n = 0; n <= nb; ++n) {
            act[h][n].resize(sub.space.count(n));
            for (int j = 0; j < sub.space.count(n); ++j) {
                const int img = x.act(to_parent[h], n, sub.old_index[n][j]);
                const int nj = sub.new_index[n][img];
                if (nj < 0)
                    throw invalid_input("subcomplex_gspace: subcomplex is not stable");
                act[h][n][j] = nj;
            }
        }
    return GSpace(new_group, sub.space, std::move(act));
}

GSpace induced_quotient_gspace(const GSpace& x, const std::vector<int>& k_elems,
                               const QuotientGroup& q) {
    if (!is_subgroup(x.group(), k_elems) || !is_normal(x.group(), k_elems))
        throw invalid_input("induced_quotient_gspace: need a normal subgroup");
    QuotientSpace qs = quotient_by(x, k_elems);
    const int nb = qs.space.dim_bound();
    std::vector<std::vector<std::vector<int>>> act(
        q.group.order(), std::vector<std::vector<int>>(nb + 1));
    for (int h = 0; h < q.group.order(); ++h)
        for (int n = 0; n <= nb; ++n) {
            act[h][n].resize(qs.space.count(n));
            for (int o = 0; o < qs.space.count(n); ++o)
                act[h][n][o] = qs.orbit_of[n][x.act(q.section[h], n, qs.rep_of[n][o])];
        }
    return GSpace(q.group, qs.space, std::move(act));
}

FreeActionReport is_free_action(const GSpace& x) {
    FreeActionReport r;
    const int e = x.group().identity();
    for (int a = 0; a < x.group().order(); ++a) {
        if (a == e) continue;
        for (int n = 0; n <= x.space().dim_bound(); ++n)
            for (int i = 0; i < x.space().count(n); ++i)
                if (x.act(a, n, i) == i) {
                    r.free = false;
                    r.witness_g = a;
                    r.witness_level = n;
                    r.witness_simplex = i;
                    return r;
                }
    }
    return r;
}

HomotopyQuotient homotopy_quotient(const GSpace& x, int dim_bound,
                                   std::int64_t simplex_budget) {
    if (dim_bound > x.space().dim_bound())
        throw invalid_input("homotopy_quotient: bound exceeds the space's bound");
    const GSpace xt =
        dim_bound == x.space().dim_bound() ? x : truncate_gspace(x, dim_bound);
    const GSpace eg = eg_space(x.group(), dim_bound, simplex_budget);
    const GSpace prod = product_gspace(xt, eg, dim_bound, simplex_budget);
    HomotopyQuotient h;
    h.orbit = quotient_space(prod);
    QuotientSpace qeg = quotient_space(eg);
    h.base = qeg.space;
    h.to_base.values.resize(dim_bound + 1);
    h.rep_pair.resize(dim_bound + 1);
    for (int n = 0; n <= dim_bound; ++n) {
        const int cy = eg.space().count(n);
        const int orbits = h.orbit.space.count(n);
        h.to_base.values[n].resize(orbits);
        h.rep_pair[n].resize(orbits);
        for (int o = 0; o < orbits; ++o) {
            const int r = h.orbit.rep_of[n][o];
            h.rep_pair[n][o] = {r / cy, r % cy};
            h.to_base.values[n][o] = qeg.orbit_of[n][r % cy];
        }
    }
    if (!is_simplicial_map(h.orbit.space, h.base, h.to_base, dim_bound))
        throw invariant_violation("homotopy quotient projection is not simplicial");
    return h;
}

namespace {

void require_verified_contractible(const SimplicialSet& s, int base_vertex,
                                   std::int64_t budget, Pi1Result* trivial_pi1) {
    if (s.dim_bound() < 2)
        throw invalid_input("contractibility check needs levels up to 2");
    if (pi0(s).count != 1)
        throw invalid_input("contractibility check: space is not connected");
    KanReport kan = check_kan(s, 2, budget);
    if (!kan.ok)
        throw invalid_input("contractibility check: horn filling fails by level 2");
    try {
        *trivial_pi1 = edge_path_pi1(s, base_vertex, 1);
    } catch (const cap_exceeded&) {
        throw invalid_input("contractibility check: path group is not trivial");
    }
    const auto hs = space_homology(s);
    if (hs[0].rank != 1 || !hs[0].torsion.empty())
        throw invalid_input("contractibility check: degree-0 homology is not free of rank 1");
    for (int i = 1; i + 1 <= s.dim_bound(); ++i)
        if (hs[i].rank != 0 || !hs[i].torsion.empty())
            throw invalid_input("contractibility check: reduced homology does not vanish");
}

}  // namespace

ContractibleQuotientResult pi1_of_contractible_quotient(const GSpace& x, int base_vertex,
                                                        int order_cap,
                                                        std::int64_t budget) {
    const SimplicialSet& s = x.space();
    if (base_vertex < 0 || base_vertex >= s.count(0))
        throw invalid_input("pi1_of_contractible_quotient: base vertex out of range");
    Pi1Result upstairs;
    require_verified_contractible(s, base_vertex, budget, &upstairs);

    const FiniteGroup& g = x.group();
    std::vector<int> stab;
    for (int v = 0; v < s.count(0); ++v)
        for (int a = 0; a < g.order(); ++a)
            if (a != g.identity() && x.act(a, 0, v) == v) stab.push_back(a);
    std::sort(stab.begin(), stab.end());
    stab.erase(std::unique(stab.begin(), stab.end()), stab.end());

    ContractibleQuotientResult r;
    r.kernel_elems = normal_closure(g, stab);
    r.g_mod_k = quotient_group(g, r.kernel_elems);

    QuotientSpace qs = quotient_space(x);
    r.quotient_pi1 = edge_path_pi1(qs.space, qs.orbit_of[0][base_vertex], order_cap);

    r.phi.resize(g.order());
    for (int a = 0; a < g.order(); ++a) {
        EdgePath up = path_from_base(upstairs, x.act(a, 0, base_vertex));
        EdgePath down;
        down.reserve(up.size());
        for (auto [e, dir] : up) down.emplace_back(qs.orbit_of[1][e], dir);
        r.phi[a] = path_class(r.quotient_pi1, down);
    }

    const FiniteGroup& pg = r.quotient_pi1.group;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (r.phi[g.op(a, b)] != pg.op(r.phi[a], r.phi[b]))
                throw invariant_violation("orbit path assignment is not a homomorphism");
    std::vector<int> ker;
    for (int a = 0; a < g.order(); ++a)
        if (r.phi[a] == pg.identity()) ker.push_back(a);
    if (ker != r.kernel_elems)
        throw invariant_violation(
            "kernel differs from the closure of the vertex stabilizers");
    std::vector<char> hit(pg.order(), 0);
    int image = 0;
    for (int a = 0; a < g.order(); ++a)
        if (!hit[r.phi[a]]) {
            hit[r.phi[a]] = 1;
            ++image;
        }
    if (image != pg.order())
        throw invariant_violation("orbit path assignment is not surjective");
    return r;
}

void validate_extension(const Extension& e) {
    if (static_cast<int>(e.inclusion.size()) != e.kernel.order() ||
        static_cast<int>(e.projection.size()) != e.total.order())
        throw invalid_input("extension: map sizes do not match the groups");
    if (!is_homomorphism(e.kernel, e.total, e.inclusion))
        throw invalid_input("extension: inclusion is not a homomorphism");
    if (!is_homomorphism(e.total, e.quotient, e.projection))
        throw invalid_input("extension: projection is not a homomorphism");
    std::vector<int> img = e.inclusion;
    std::sort(img.begin(), img.end());
    if (std::unique(img.begin(), img.end()) != img.end())
        throw invalid_input("extension: inclusion is not injective");
    std::vector<char> hitq(e.quotient.order(), 0);
    for (int v : e.projection) hitq[v] = 1;
    for (char c : hitq)
        if (!c) throw invalid_input("extension: projection is not surjective");
    std::vector<int> ker;
    for (int t = 0; t < e.total.order(); ++t)
        if (e.projection[t] == e.quotient.identity()) ker.push_back(t);
    if (ker != img)
        throw invalid_input("extension: inclusion image differs from projection kernel");
}

Extension make_extension(FiniteGroup total, FiniteGroup kernel, FiniteGroup quotient,
                         std::vector<int> inclusion, std::vector<int> projection) {
    Extension e{std::move(total), std::move(kernel), std::move(quotient),
                std::move(inclusion), std::move(projection)};
    validate_extension(e);
    return e;
}

int Pi1ExtensionData::edge_shift(int edge) const {
    const FiniteGroup& g = ext.quotient;
    const auto [a, t] = hq.rep_pair[1][edge];
    (void)a;
    const auto tup = eg_tuple(g.order(), 1, t);
    return g.op(g.inverse(tup[0]), tup[1]);
}

int Pi1ExtensionData::section_value(int x_edge, int g) const {
    const int ord = ext.quotient.order();
    const int e = ext.quotient.identity();
    const int egcount = ord * ord;
    const int pair = x_edge * egcount + eg_index(ord, {e, g});
    const int edge = hq.orbit.orbit_of[1][pair];
    return path_class(total_pi1, loop_of_edge(total_pi1, hq.orbit.space, edge));
}

Pi1ExtensionData pi1_extension_data(const GSpace& x, int base_vertex, int order_cap,
                                    std::int64_t budget) {
    const SimplicialSet& s = x.space();
    if (s.dim_bound() < 2)
        throw invalid_input("pi1_extension: need levels up to 2");
    if (base_vertex < 0 || base_vertex >= s.count(0))
        throw invalid_input("pi1_extension: base vertex out of range");
    if (pi0(s).count != 1)
        throw invalid_input("pi1_extension: space is not connected");

    const FiniteGroup& g = x.group();
    const int ord = g.order();
    Pi1Result px = edge_path_pi1(s, base_vertex, order_cap);
    HomotopyQuotient hq = homotopy_quotient(x, 2, budget);

    const int e = g.identity();
    const int tv = hq.orbit.orbit_of[0][base_vertex * ord + e];
    Pi1Result pt = edge_path_pi1(hq.orbit.space, tv, order_cap);

    SimplicialMap incl;
    incl.values.resize(3);
    for (int n = 0; n <= 2; ++n) {
        const int cn = eg_index(ord, std::vector<int>(n + 1, e));
        int egcount = 1;
        for (int k = 0; k <= n; ++k) egcount *= ord;
        incl.values[n].resize(s.count(n));
        for (int i = 0; i < s.count(n); ++i)
            incl.values[n][i] = hq.orbit.orbit_of[n][i * egcount + cn];
    }
    SimplicialSet xt2 = truncate(s, 2);
    if (!is_simplicial_map(xt2, hq.orbit.space, incl, 2))
        throw invariant_violation("pi1_extension: fiber inclusion is not simplicial");
    std::vector<int> inc = induced_pi1(px, xt2, hq.orbit.space, pt, incl);

    auto edge_shift = [&](int edge) {
        const auto [a, t] = hq.rep_pair[1][edge];
        (void)a;
        const auto tup = eg_tuple(ord, 1, t);
        return g.op(g.inverse(tup[0]), tup[1]);
    };
    const int ngen = static_cast<int>(pt.generator_edge.size());
    std::vector<int> gen_img(ngen);
    for (int i = 0; i < ngen; ++i) {
        EdgePath loop = loop_of_edge(pt, hq.orbit.space, pt.generator_edge[i]);
        int v = e;
        for (auto [ed, dir] : loop) {
            int dgel = edge_shift(ed);
            v = g.op(v, dir > 0 ? dgel : g.inverse(dgel));
        }
        gen_img[i] = v;
    }
    std::vector<int> proj(pt.group.order());
    for (int t = 0; t < pt.group.order(); ++t) {
        int v = e;
        for (int letter : pt.element_word[t]) {
            const int gi = gen_img[std::abs(letter) - 1];
            v = g.op(v, letter > 0 ? gi : g.inverse(gi));
        }
        proj[t] = v;
    }
    if (!is_homomorphism(pt.group, g, proj))
        throw invariant_violation("pi1_extension: shift map is not a homomorphism");

    Pi1ExtensionData r;
    r.ext = make_extension(pt.group, px.group, g, std::move(inc), std::move(proj));
    r.hq = std::move(hq);
    r.fiber_pi1 = std::move(px);
    r.total_pi1 = std::move(pt);
    r.base_vertex = base_vertex;
    return r;
}

Extension pi1_extension(const GSpace& x, int base_vertex, int order_cap,
                        std::int64_t budget) {
    return pi1_extension_data(x, base_vertex, order_cap, budget).ext;
}

}  // namespace eqsimp
