#include "eqsimp/descent.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

#include "eqsimp/config.hpp"

namespace eqsimp {

namespace {

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order() || a.identity() != b.identity()) return false;
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
            if (a.op(x, y) != b.op(x, y)) return false;
    return true;
}

void check_set_action(const FiniteGroup& g, const std::vector<std::vector<int>>& act, int n,
                      const std::string& what) {
    if (static_cast<int>(act.size()) != g.order())
        throw invalid_input(what + ": one table per group element required");
    for (const auto& t : act) {
        if (static_cast<int>(t.size()) != n) throw invalid_input(what + ": table size mismatch");
        std::vector<char> hit(n, 0);
        for (int v : t) {
            if (v < 0 || v >= n || hit[v]) throw invalid_input(what + ": not a permutation");
            hit[v] = 1;
        }
    }
    for (int x = 0; x < n; ++x)
        if (act[g.identity()][x] != x)
            throw invalid_input(what + ": identity must act trivially");
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            const int ab = g.op(a, b);
            for (int x = 0; x < n; ++x)
                if (act[a][act[b][x]] != act[ab][x])
                    throw invalid_input(what + ": composition law fails");
        }
}

void check_outer_action(const FiniteGroup& s, const FiniteGroup& g, const GroupOnGroup& act) {
    check_set_action(s, act.maps(), g.order(), "outer action");
    for (int u = 0; u < s.order(); ++u)
        for (int x = 0; x < g.order(); ++x)
            for (int y = 0; y < g.order(); ++y)
                if (act.apply(u, g.op(x, y)) != g.op(act.apply(u, x), act.apply(u, y)))
                    throw invalid_input("outer action: not by automorphisms");
}

void require_same_gspace(const GSpace& got, const GSpace& want, const std::string& what) {
    const SimplicialSet& a = got.space();
    const SimplicialSet& b = want.space();
    if (a.dim_bound() != b.dim_bound()) throw invalid_input(what);
    for (int n = 0; n <= a.dim_bound(); ++n) {
        if (a.count(n) != b.count(n)) throw invalid_input(what);
        for (int i = 0; i < a.count(n); ++i) {
            if (n >= 1)
                for (int k = 0; k <= n; ++k)
                    if (a.face(n, i, k) != b.face(n, i, k)) throw invalid_input(what);
            if (n < a.dim_bound())
                for (int k = 0; k <= n; ++k)
                    if (a.degen_of(n, i, k) != b.degen_of(n, i, k)) throw invalid_input(what);
        }
    }
    for (int s = 0; s < got.group().order(); ++s)
        for (int n = 0; n <= a.dim_bound(); ++n)
            for (int i = 0; i < a.count(n); ++i)
                if (got.act(s, n, i) != want.act(s, n, i)) throw invalid_input(what);
}

}  // namespace

void validate_torsor_data(const TorsorData& t) {
    if (t.components <= 0) throw invalid_input("torsor data: empty component set");
    check_set_action(t.structure_group, t.g_on_p, t.components, "structure action");
    check_set_action(t.galois, t.galois_on_p, t.components, "outer component action");
    check_outer_action(t.galois, t.structure_group, t.galois_on_g);
    for (int s = 0; s < t.galois.order(); ++s)
        for (int g = 0; g < t.structure_group.order(); ++g)
            for (int c = 0; c < t.components; ++c)
                if (t.galois_on_p[s][t.g_on_p[g][c]] !=
                    t.g_on_p[t.galois_on_g.apply(s, g)][t.galois_on_p[s][c]])
                    throw invalid_input("torsor data: actions are not compatible");
}

void validate_equivariant_groupoid(const EquivariantGroupoid& e) {
    const int nobj = e.gpd.objects();
    const int nmor = e.gpd.morphisms();
    check_set_action(e.galois, e.obj_act, nobj, "object action");
    check_set_action(e.galois, e.mor_act, nmor, "morphism action");
    check_outer_action(e.galois, e.structure_group, e.galois_on_g);
    if (static_cast<int>(e.mor_elem.size()) != nmor)
        throw invalid_input("equivariant groupoid: one label per morphism required");
    std::map<std::array<int, 3>, int> seen;
    for (int m = 0; m < nmor; ++m) {
        const int x = e.mor_elem[m];
        if (x < 0 || x >= e.structure_group.order())
            throw invalid_input("equivariant groupoid: label out of range");
        if (!seen.emplace(std::array<int, 3>{e.gpd.src(m), e.gpd.tgt(m), x}, m).second)
            throw invalid_input("equivariant groupoid: labels must embed each hom-set");
    }
    for (int o = 0; o < nobj; ++o)
        if (e.mor_elem[e.gpd.identity(o)] != e.structure_group.identity())
            throw invalid_input("equivariant groupoid: identity labels must be the identity");
    for (int g = 0; g < nmor; ++g)
        for (int f = 0; f < nmor; ++f) {
            if (e.gpd.src(g) != e.gpd.tgt(f)) continue;
            if (e.mor_elem[e.gpd.compose(g, f)] !=
                e.structure_group.op(e.mor_elem[g], e.mor_elem[f]))
                throw invalid_input("equivariant groupoid: labels must be functorial");
        }
    for (int u = 0; u < e.galois.order(); ++u) {
        for (int o = 0; o < nobj; ++o)
            if (e.mor_act[u][e.gpd.identity(o)] != e.gpd.identity(e.obj_act[u][o]))
                throw invalid_input("equivariant groupoid: action must preserve identities");
        for (int m = 0; m < nmor; ++m) {
            const int im = e.mor_act[u][m];
            if (e.gpd.src(im) != e.obj_act[u][e.gpd.src(m)] ||
                e.gpd.tgt(im) != e.obj_act[u][e.gpd.tgt(m)])
                throw invalid_input("equivariant groupoid: action must preserve endpoints");
            if (e.mor_elem[im] != e.galois_on_g.apply(u, e.mor_elem[m]))
                throw invalid_input("equivariant groupoid: action must transform labels");
        }
        for (int g = 0; g < nmor; ++g)
            for (int f = 0; f < nmor; ++f) {
                if (e.gpd.src(g) != e.gpd.tgt(f)) continue;
                if (e.mor_act[u][e.gpd.compose(g, f)] !=
                    e.gpd.compose(e.mor_act[u][g], e.mor_act[u][f]))
                    throw invalid_input("equivariant groupoid: action must preserve composition");
            }
    }
}

EquivariantGroupoid torsor_groupoid(const TorsorData& t) {
    validate_torsor_data(t);
    const int p = t.components;
    const int gm = t.structure_group.order();
    const int nmor = gm * p;
    std::vector<Groupoid::Mor> mors(nmor);
    for (int g = 0; g < gm; ++g)
        for (int c = 0; c < p; ++c) mors[g * p + c] = {c, t.g_on_p[g][c]};
    std::vector<std::vector<int>> comp(nmor, std::vector<int>(nmor, -1));
    for (int m2 = 0; m2 < nmor; ++m2)
        for (int m1 = 0; m1 < nmor; ++m1) {
            if (mors[m1].tgt != mors[m2].src) continue;
            comp[m2][m1] = t.structure_group.op(m2 / p, m1 / p) * p + mors[m1].src;
        }
    std::vector<int> ids(p);
    for (int c = 0; c < p; ++c) ids[c] = t.structure_group.identity() * p + c;
    EquivariantGroupoid e;
    e.gpd = Groupoid(p, std::move(mors), std::move(comp), std::move(ids));
    e.galois = t.galois;
    e.structure_group = t.structure_group;
    e.galois_on_g = t.galois_on_g;
    e.obj_act = t.galois_on_p;
    e.mor_act.assign(t.galois.order(), std::vector<int>(nmor));
    e.mor_elem.resize(nmor);
    for (int m = 0; m < nmor; ++m) e.mor_elem[m] = m / p;
    for (int s = 0; s < t.galois.order(); ++s)
        for (int m = 0; m < nmor; ++m)
            e.mor_act[s][m] = t.galois_on_g.apply(s, m / p) * p + t.galois_on_p[s][m % p];
    validate_equivariant_groupoid(e);
    return e;
}

EquivariantGroupoid one_object_equivariant(const FiniteGroup& galois, const FiniteGroup& g,
                                           const GroupOnGroup& act) {
    EquivariantGroupoid e;
    e.gpd = one_object_groupoid(g);
    e.galois = galois;
    e.structure_group = g;
    e.galois_on_g = act;
    e.obj_act.assign(galois.order(), std::vector<int>(1, 0));
    e.mor_act = act.maps();
    e.mor_elem.resize(g.order());
    for (int m = 0; m < g.order(); ++m) e.mor_elem[m] = m;
    validate_equivariant_groupoid(e);
    return e;
}

GSpace nerve_gspace(const EquivariantGroupoid& e, int dim_bound, std::int64_t simplex_budget) {
    validate_equivariant_groupoid(e);
    SimplicialSet nv = nerve(e.gpd, dim_bound, simplex_budget);
    const auto chains = nerve_chains(e.gpd, dim_bound, simplex_budget);
    std::vector<std::map<std::vector<int>, int>> index(dim_bound + 1);
    for (int n = 1; n <= dim_bound; ++n)
        for (int i = 0; i < static_cast<int>(chains[n].size()); ++i) index[n][chains[n][i]] = i;
    const int ord = e.galois.order();
    std::vector<std::vector<std::vector<int>>> action(ord);
    for (int s = 0; s < ord; ++s) {
        action[s].resize(dim_bound + 1);
        action[s][0] = e.obj_act[s];
        for (int n = 1; n <= dim_bound; ++n) {
            action[s][n].resize(chains[n].size());
            for (int i = 0; i < static_cast<int>(chains[n].size()); ++i) {
                std::vector<int> im(chains[n][i].size());
                for (std::size_t k = 0; k < im.size(); ++k)
                    im[k] = e.mor_act[s][chains[n][i][k]];
                action[s][n][i] = index[n].at(im);
            }
        }
    }
    return GSpace(e.galois, std::move(nv), std::move(action));
}

ClassifyingMapResult classifying_map(const TorsorData& t, int dim_bound,
                                     std::int64_t simplex_budget) {
    EquivariantGroupoid ty = torsor_groupoid(t);
    EquivariantGroupoid ob = one_object_equivariant(t.galois, t.structure_group, t.galois_on_g);
    ClassifyingMapResult r{nerve_gspace(ty, dim_bound, simplex_budget),
                           nerve_gspace(ob, dim_bound, simplex_budget), {}};
    const auto src_chains = nerve_chains(ty.gpd, dim_bound, simplex_budget);
    const auto dst_chains = nerve_chains(ob.gpd, dim_bound, simplex_budget);
    std::vector<std::map<std::vector<int>, int>> dst_index(dim_bound + 1);
    for (int n = 1; n <= dim_bound; ++n)
        for (int i = 0; i < static_cast<int>(dst_chains[n].size()); ++i)
            dst_index[n][dst_chains[n][i]] = i;
    r.map.values.resize(dim_bound + 1);
    r.map.values[0].assign(src_chains[0].size(), 0);
    for (int n = 1; n <= dim_bound; ++n) {
        r.map.values[n].resize(src_chains[n].size());
        for (int i = 0; i < static_cast<int>(src_chains[n].size()); ++i) {
            std::vector<int> im(src_chains[n][i].size());
            for (std::size_t k = 0; k < im.size(); ++k) im[k] = ty.mor_elem[src_chains[n][i][k]];
            r.map.values[n][i] = dst_index[n].at(im);
        }
    }
    if (!is_simplicial_map(r.nerve.space(), r.one_object.space(), r.map, dim_bound))
        throw invariant_violation("classifying map: label image must be simplicial");
    for (int s = 0; s < t.galois.order(); ++s)
        for (int n = 0; n <= dim_bound; ++n)
            for (int i = 0; i < r.nerve.space().count(n); ++i)
                if (r.map.values[n][r.nerve.act(s, n, i)] !=
                    r.one_object.act(s, n, r.map.values[n][i]))
                    throw invariant_violation("classifying map: label image must be equivariant");
    return r;
}

Cocycle1 cocycle_from_hfp(const FiniteGroup& galois, const FiniteGroup& a,
                          const GroupOnGroup& act, const GSpace& en, const GSpace& bg,
                          const SimplicialMap& h, std::int64_t budget) {
    if (!same_group(en.group(), galois) || !same_group(bg.group(), galois))
        throw invalid_input("cocycle extraction: both spaces must carry the outer group");
    require_same_gspace(en, eg_space(galois, en.space().dim_bound(), budget),
                        "cocycle extraction: source must be the translation space");
    require_same_gspace(
        bg, nerve_gspace(one_object_equivariant(galois, a, act), bg.space().dim_bound(), budget),
        "cocycle extraction: target must be the one-object nerve");
    const int up =
        std::min(h.levels(), std::min(en.space().dim_bound(), bg.space().dim_bound()));
    if (up < 1) throw invalid_input("cocycle extraction: edge images required");
    for (int n = 0; n <= up; ++n) {
        if (static_cast<int>(h.values[n].size()) != en.space().count(n))
            throw invalid_input("cocycle extraction: level size mismatch");
        for (int v : h.values[n])
            if (v < 0 || v >= bg.space().count(n))
                throw invalid_input("cocycle extraction: image out of range");
    }
    if (!is_simplicial_map(en.space(), bg.space(), h, up))
        throw invalid_input("cocycle extraction: map is not simplicial");
    for (int s = 0; s < galois.order(); ++s)
        for (int n = 0; n <= up; ++n)
            for (int i = 0; i < en.space().count(n); ++i)
                if (h.values[n][en.act(s, n, i)] != bg.act(s, n, h.values[n][i]))
                    throw invalid_input("cocycle extraction: map is not equivariant");
    Cocycle1 c;
    c.alpha.resize(galois.order());
    const int e = galois.identity();
    for (int s = 0; s < galois.order(); ++s)
        c.alpha[s] = a.inverse(h.values[1][eg_index(galois.order(), {e, s})]);
    validate_cocycle1(galois, a, act, c);
    return c;
}

void validate_principal_gset(const PrincipalGSet& p) {
    if (p.size <= 0) throw invalid_input("principal set: empty carrier");
    check_set_action(p.structure_group, p.g_act, p.size, "principal structure action");
    check_set_action(p.galois, p.galois_act, p.size, "principal outer action");
    check_outer_action(p.galois, p.structure_group, p.galois_on_g);
    if (p.size != p.structure_group.order())
        throw invalid_input("principal set: action is not simply transitive");
    for (int x = 0; x < p.size; ++x) {
        std::vector<char> hit(p.size, 0);
        for (int g = 0; g < p.structure_group.order(); ++g) {
            const int y = p.g_act[g][x];
            if (hit[y]) throw invalid_input("principal set: action is not simply transitive");
            hit[y] = 1;
        }
    }
    for (int s = 0; s < p.galois.order(); ++s)
        for (int g = 0; g < p.structure_group.order(); ++g)
            for (int y = 0; y < p.size; ++y)
                if (p.galois_act[s][p.g_act[g][y]] !=
                    p.g_act[p.galois_on_g.apply(s, g)][p.galois_act[s][y]])
                    throw invalid_input("principal set: actions are not compatible");
}

TorsorClass classify_torsor(const PrincipalGSet& p, std::int64_t budget) {
    validate_principal_gset(p);
    NonabelianH1 h1 = h1_nonabelian(p.galois, p.structure_group, p.galois_on_g, budget);
    std::map<std::vector<int>, int> pos;
    for (int i = 0; i < static_cast<int>(h1.cocycles.size()); ++i)
        pos[h1.cocycles[i].alpha] = i;
    BudgetMeter meter(budget, "enum_budget");
    TorsorClass out{{}, -1, {}};
    for (int y0 = 0; y0 < p.size; ++y0) {
        std::vector<int> from(p.size, -1);
        for (int g = 0; g < p.structure_group.order(); ++g) from[p.g_act[g][y0]] = g;
        Cocycle1 c;
        c.alpha.resize(p.galois.order());
        for (int s = 0; s < p.galois.order(); ++s) {
            meter.charge();
            c.alpha[s] = p.structure_group.inverse(from[p.galois_act[s][y0]]);
        }
        auto it = pos.find(c.alpha);
        if (it == pos.end())
            throw invariant_violation("torsor class: basepoint must read off a cocycle");
        if (y0 == 0) {
            out.cocycle = c;
            out.class_index = h1.class_of[it->second];
        } else if (h1.class_of[it->second] != out.class_index) {
            throw invariant_violation("torsor class: basepoints must agree on the class");
        }
    }
    out.h1 = std::move(h1);
    return out;
}

PrincipalGSet principal_from_cocycle(const FiniteGroup& galois, const FiniteGroup& g,
                                     const GroupOnGroup& act, const Cocycle1& alpha) {
    validate_cocycle1(galois, g, act, alpha);
    PrincipalGSet p;
    p.structure_group = g;
    p.galois = galois;
    p.size = g.order();
    p.g_act.assign(g.order(), std::vector<int>(g.order()));
    for (int a = 0; a < g.order(); ++a)
        for (int y = 0; y < g.order(); ++y) p.g_act[a][y] = g.op(a, y);
    p.galois_act.assign(galois.order(), std::vector<int>(g.order()));
    for (int s = 0; s < galois.order(); ++s)
        for (int y = 0; y < g.order(); ++y)
            p.galois_act[s][y] = g.op(act.apply(s, y), g.inverse(alpha.alpha[s]));
    p.galois_on_g = act;
    validate_principal_gset(p);
    return p;
}

TwistedProduct twist_torsor(const PrincipalGSet& p, const Cocycle1& alpha,
                            std::int64_t budget) {
    validate_principal_gset(p);
    validate_cocycle1(p.galois, p.structure_group, p.galois_on_g, alpha);
    const int no = p.galois.order();
    const int np = p.size;
    TwistedProduct r;
    r.first_size = no;
    r.second_size = np;
    r.twisted = p;
    for (int s = 0; s < no; ++s)
        for (int y = 0; y < np; ++y)
            r.twisted.galois_act[s][y] = p.g_act[alpha.alpha[s]][p.galois_act[s][y]];
    r.twisted.galois_on_g = twist_action(p.galois, p.structure_group, p.galois_on_g, alpha);
    validate_principal_gset(r.twisted);
    r.forward.resize(static_cast<std::size_t>(no) * np);
    r.src_act.assign(no, std::vector<int>(no * np));
    r.dst_act.assign(no, std::vector<int>(no * np));
    BudgetMeter meter(budget, "enum_budget");
    for (int t = 0; t < no; ++t)
        for (int y = 0; y < np; ++y) {
            const int i = t * np + y;
            r.forward[i] = t * np + p.g_act[alpha.alpha[t]][y];
            for (int s = 0; s < no; ++s) {
                meter.charge();
                r.src_act[s][i] = p.galois.op(s, t) * np + p.galois_act[s][y];
                r.dst_act[s][i] = p.galois.op(s, t) * np + r.twisted.galois_act[s][y];
            }
        }
    std::vector<char> hit(r.forward.size(), 0);
    for (int v : r.forward) {
        if (hit[v]) throw invariant_violation("product twist: forward map must be a bijection");
        hit[v] = 1;
    }
    for (int s = 0; s < no; ++s)
        for (int i = 0; i < no * np; ++i)
            if (r.dst_act[s][r.forward[i]] != r.forward[r.src_act[s][i]])
                throw invariant_violation("product twist: map must intertwine the actions");
    return r;
}

GroupoidTwist twist_groupoid_iso(const FiniteGroup& galois, const FiniteGroup& g,
                                 const GroupOnGroup& act, const Cocycle1& alpha,
                                 std::int64_t budget) {
    check_outer_action(galois, g, act);
    validate_cocycle1(galois, g, act, alpha);
    const int no = galois.order();
    const int mg = g.order();
    const int nmor = no * no * mg;
    BudgetMeter meter(budget, "enum_budget");
    meter.charge(static_cast<std::int64_t>(nmor) * nmor);
    const auto mid = [&](int s, int t, int x) { return (s * no + t) * mg + x; };
    std::vector<Groupoid::Mor> mors(nmor);
    for (int s = 0; s < no; ++s)
        for (int t = 0; t < no; ++t)
            for (int x = 0; x < mg; ++x) mors[mid(s, t, x)] = {s, t};
    std::vector<std::vector<int>> comp(nmor, std::vector<int>(nmor, -1));
    for (int m2 = 0; m2 < nmor; ++m2)
        for (int m1 = 0; m1 < nmor; ++m1) {
            if (mors[m1].tgt != mors[m2].src) continue;
            comp[m2][m1] = mid(mors[m1].src, mors[m2].tgt, g.op(m2 % mg, m1 % mg));
        }
    std::vector<int> ids(no);
    for (int s = 0; s < no; ++s) ids[s] = mid(s, s, g.identity());
    GroupoidTwist r;
    r.source.gpd = Groupoid(no, std::move(mors), std::move(comp), std::move(ids));
    r.source.galois = galois;
    r.source.structure_group = g;
    r.source.galois_on_g = act;
    r.source.obj_act.assign(no, std::vector<int>(no));
    r.source.mor_act.assign(no, std::vector<int>(nmor));
    r.source.mor_elem.resize(nmor);
    for (int m = 0; m < nmor; ++m) r.source.mor_elem[m] = m % mg;
    for (int u = 0; u < no; ++u) {
        for (int s = 0; s < no; ++s) r.source.obj_act[u][s] = galois.op(u, s);
        for (int m = 0; m < nmor; ++m) {
            const int s = m / (mg * no), t = (m / mg) % no, x = m % mg;
            r.source.mor_act[u][m] =
                mid(galois.op(u, s), galois.op(u, t), act.apply(u, x));
        }
    }
    r.target = r.source;
    r.target.galois_on_g = twist_action(galois, g, act, alpha);
    for (int u = 0; u < no; ++u)
        for (int m = 0; m < nmor; ++m) {
            const int s = m / (mg * no), t = (m / mg) % no, x = m % mg;
            r.target.mor_act[u][m] = mid(galois.op(u, s), galois.op(u, t),
                                         r.target.galois_on_g.apply(u, x));
        }
    validate_equivariant_groupoid(r.source);
    validate_equivariant_groupoid(r.target);
    r.mor_map.resize(nmor);
    for (int m = 0; m < nmor; ++m) {
        const int s = m / (mg * no), t = (m / mg) % no, x = m % mg;
        r.mor_map[m] =
            mid(s, t, g.op(g.op(alpha.alpha[t], x), g.inverse(alpha.alpha[s])));
    }
    std::vector<char> hit(nmor, 0);
    for (int v : r.mor_map) {
        if (hit[v]) throw invariant_violation("groupoid twist: hom-map must be a bijection");
        hit[v] = 1;
    }
    const Groupoid& gpd = r.source.gpd;
    for (int m = 0; m < nmor; ++m)
        if (gpd.src(r.mor_map[m]) != gpd.src(m) || gpd.tgt(r.mor_map[m]) != gpd.tgt(m))
            throw invariant_violation("groupoid twist: hom-map must fix endpoints");
    for (int o = 0; o < no; ++o)
        if (r.mor_map[gpd.identity(o)] != gpd.identity(o))
            throw invariant_violation("groupoid twist: hom-map must preserve identities");
    for (int m2 = 0; m2 < nmor; ++m2)
        for (int m1 = 0; m1 < nmor; ++m1) {
            if (gpd.tgt(m1) != gpd.src(m2)) continue;
            if (r.mor_map[gpd.compose(m2, m1)] !=
                gpd.compose(r.mor_map[m2], r.mor_map[m1]))
                throw invariant_violation("groupoid twist: hom-map must be functorial");
        }
    for (int u = 0; u < no; ++u)
        for (int m = 0; m < nmor; ++m)
            if (r.mor_map[r.source.mor_act[u][m]] != r.target.mor_act[u][r.mor_map[m]])
                throw invariant_violation(
                    "groupoid twist: hom-map must intertwine the outer actions");
    NonabelianH1 h1 = h1_nonabelian(galois, g, act, budget);
    NonabelianH1 h2 = h1_nonabelian(galois, g, r.target.galois_on_g, budget);
    std::map<std::vector<int>, int> pos1, pos2;
    for (int i = 0; i < static_cast<int>(h1.cocycles.size()); ++i)
        pos1[h1.cocycles[i].alpha] = i;
    for (int i = 0; i < static_cast<int>(h2.cocycles.size()); ++i)
        pos2[h2.cocycles[i].alpha] = i;
    const int e = galois.identity();
    std::vector<int> image_class(h1.cocycles.size(), -1);
    for (std::size_t bi = 0; bi < h1.cocycles.size(); ++bi) {
        const auto& beta = h1.cocycles[bi];
        meter.charge(static_cast<std::int64_t>(no) * no * no);
        std::vector<int> f(no * no);
        for (int a = 0; a < no; ++a)
            for (int b = 0; b < no; ++b)
                f[a * no + b] =
                    act.apply(a, g.inverse(beta.alpha[galois.op(galois.inverse(a), b)]));
        for (int a = 0; a < no; ++a)
            for (int b = 0; b < no; ++b) {
                for (int c = 0; c < no; ++c)
                    if (f[a * no + c] != g.op(f[b * no + c], f[a * no + b]))
                        throw invariant_violation(
                            "groupoid twist: section data must be functorial");
                for (int u = 0; u < no; ++u)
                    if (f[galois.op(u, a) * no + galois.op(u, b)] !=
                        act.apply(u, f[a * no + b]))
                        throw invariant_violation(
                            "groupoid twist: section data must be equivariant");
            }
        Cocycle1 out;
        out.alpha.resize(no);
        for (int s = 0; s < no; ++s)
            out.alpha[s] = g.inverse(r.mor_map[mid(e, s, f[e * no + s])] % mg);
        const Cocycle1 tt = tau_twist(galois, g, alpha, beta);
        if (out.alpha != tt.alpha)
            throw invariant_violation(
                "groupoid twist: induced map must match the cochain twist");
        auto it = pos2.find(out.alpha);
        if (it == pos2.end())
            throw invariant_violation("groupoid twist: image must be a twisted cocycle");
        image_class[bi] = h2.class_of[it->second];
    }
    if (h1.reps.size() != h2.reps.size())
        throw invariant_violation("groupoid twist: class counts must match");
    std::vector<int> class_image(h1.reps.size(), -1);
    for (std::size_t i = 0; i < h1.cocycles.size(); ++i) {
        int& ci = class_image[h1.class_of[i]];
        if (ci < 0)
            ci = image_class[i];
        else if (ci != image_class[i])
            throw invariant_violation("groupoid twist: induced map must be constant on classes");
    }
    std::vector<char> seen(h2.reps.size(), 0);
    for (int c : class_image) {
        if (seen[c])
            throw invariant_violation("groupoid twist: induced map must separate classes");
        seen[c] = 1;
    }
    Cocycle1 triv;
    triv.alpha.assign(no, g.identity());
    if (class_image[h1.class_of[pos1.at(alpha.alpha)]] != h2.class_of[pos2.at(triv.alpha)])
        throw invariant_violation("groupoid twist: the twisting class must land on neutral");
    return r;
}

}  // namespace eqsimp
