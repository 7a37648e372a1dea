#include "eqsimp/hfp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>

#include "eqsimp/config.hpp"
#include "eqsimp/fp_group.hpp"

namespace eqsimp {

namespace {

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order() || a.identity() != b.identity()) return false;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (a.op(i, j) != b.op(i, j)) return false;
    return true;
}

std::int64_t ab_order(const FinGenAb& m) {
    if (m.rank != 0) throw invalid_input("expected a finite abelian group");
    std::int64_t n = 1;
    for (const auto& t : m.torsion) {
        n *= t.get_si();
        if (n <= 0 || n > (std::int64_t{1} << 40))
            throw cap_exceeded("order_cap", "abelian group order overflows the cap");
    }
    return n;
}

// Verify the source really is the translation space of the group, so that
// tuple arithmetic on its indices is valid.
void require_translation_space(const GSpace& eg, int up_to) {
    const FiniteGroup& g = eg.group();
    const SimplicialSet& s = eg.space();
    if (s.dim_bound() < up_to)
        throw invalid_input("translation-space source stops below the needed level");
    std::int64_t c = g.order();
    for (int n = 0; n <= up_to; ++n, c *= g.order())
        if (s.count(n) != c)
            throw invalid_input("source does not have translation-space level counts");
}

// Complete level n of a partial equivariant map out of the translation
// space: degenerate simplices from their cores, then translates of the
// leading-identity representatives.  Slots already >= 0 are kept.
void fill_level_translates(const GSpace& eg, const GSpace& x,
                           std::vector<std::vector<int>>& values, int n) {
    const SimplicialSet& es = eg.space();
    const SimplicialSet& xs = x.space();
    const FiniteGroup& g = eg.group();
    const int ord = g.order();
    for (int i = 0; i < es.count(n); ++i) {
        if (values[n][i] >= 0 || !es.degenerate(n, i)) continue;
        const int cd = es.core_dim(n, i);
        values[n][i] = xs.apply_op(cd, values[cd][es.core_idx(n, i)], es.surj(n, i));
    }
    for (int i = 0; i < es.count(n); ++i) {
        if (values[n][i] >= 0) continue;
        const auto tup = eg_tuple(ord, n, i);
        const int g0inv = g.inverse(tup[0]);
        std::vector<int> rt(n + 1);
        for (int k = 0; k <= n; ++k) rt[k] = g.op(g0inv, tup[k]);
        const int rep = values[n][eg_index(ord, rt)];
        if (rep < 0) throw invariant_violation("translation fill hit an unassigned slot");
        values[n][i] = x.act(tup[0], n, rep);
    }
}

void check_equivariant(const GSpace& src, const GSpace& dst,
                       const std::vector<std::vector<int>>& values, int up_to,
                       const char* who) {
    for (int g = 0; g < src.group().order(); ++g)
        for (int n = 0; n <= up_to; ++n)
            for (int i = 0; i < src.space().count(n); ++i)
                if (values[n][src.act(g, n, i)] != dst.act(g, n, values[n][i]))
                    throw invalid_input(std::string(who) + ": map is not equivariant");
}

std::map<std::array<int, 3>, int> boundary_keys2(const SimplicialSet& x) {
    std::map<std::array<int, 3>, int> key;
    for (int z = 0; z < x.count(2); ++z)
        key.emplace(std::array<int, 3>{x.face(2, z, 0), x.face(2, z, 1), x.face(2, z, 2)}, z);
    return key;
}

std::map<std::array<int, 4>, int> boundary_keys3(const SimplicialSet& x) {
    std::map<std::array<int, 4>, int> key;
    for (int z = 0; z < x.count(3); ++z)
        key.emplace(std::array<int, 4>{x.face(3, z, 0), x.face(3, z, 1), x.face(3, z, 2),
                                       x.face(3, z, 3)},
                    z);
    return key;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_coskeletal_above(const SimplicialSet& x, int level, std::int64_t budget) {
    if (level < 0 || level > x.dim_bound())
        throw invalid_input("is_coskeletal_above: level out of range");
    if (level == x.dim_bound()) return true;
    SimplicialSet c = coskeleton_extend(truncate(x, level), x.dim_bound(), budget);
    std::vector<std::vector<int>> phi(x.dim_bound() + 1);
    for (int n = 0; n <= level; ++n) {
        if (c.count(n) != x.count(n)) return false;
        phi[n].resize(x.count(n));
        std::iota(phi[n].begin(), phi[n].end(), 0);
    }
    for (int n = level + 1; n <= x.dim_bound(); ++n) {
        if (c.count(n) != x.count(n)) return false;
        std::map<std::vector<int>, int> key;
        for (int j = 0; j < c.count(n); ++j) {
            std::vector<int> b(n + 1);
            for (int k = 0; k <= n; ++k) b[k] = c.face(n, j, k);
            if (!key.emplace(std::move(b), j).second)
                throw invariant_violation("right extension has colliding boundaries");
        }
        phi[n].assign(x.count(n), -1);
        std::vector<char> hit(c.count(n), 0);
        for (int i = 0; i < x.count(n); ++i) {
            std::vector<int> b(n + 1);
            for (int k = 0; k <= n; ++k) b[k] = phi[n - 1][x.face(n, i, k)];
            auto it = key.find(b);
            if (it == key.end() || hit[it->second]) return false;
            hit[it->second] = 1;
            phi[n][i] = it->second;
        }
    }
    for (int n = 0; n < x.dim_bound(); ++n)
        for (int i = 0; i < x.count(n); ++i)
            for (int k = 0; k <= n; ++k)
                if (phi[n + 1][x.degen_of(n, i, k)] != c.degen_of(n, phi[n][i], k))
                    return false;
    return true;
}

Pi2Data pi2_coskeletal(const GSpace& x, std::int64_t budget) {
    if (!is_coskeletal_above(x.space(), 2, budget))
        throw invalid_input(
            "pi2_coskeletal: space does not match the extension of its 2-truncation");
    Pi2Data d;
    d.module = GModule::trivial(x.group(), FinGenAb{});
    d.sphere_class = [](const std::array<int, 4>&) { return ZVec(); };
    d.add_to_simplex = [](int i, const ZVec&) { return i; };
    return d;
}

Pi2Data pi2_of_em(const GSpace& x, const GModule& m) {
    const SimplicialSet& s = x.space();
    if (!same_group(x.group(), m.glen()))
        throw invalid_input("pi2_of_em: module group differs from the acting group");
    if (s.dim_bound() < 3) throw invalid_input("pi2_of_em: need levels up to 3");
    const FinGenAb& mm = m.mod();
    const std::int64_t msize = ab_order(mm);
    if (s.count(0) != 1 || s.count(1) != 1 || s.count(2) != msize ||
        s.count(3) != msize * msize * msize)
        throw invalid_input("pi2_of_em: level counts do not match the module");
    for (int g = 0; g < x.group().order(); ++g)
        for (int i = 0; i < s.count(2); ++i)
            if (x.act(g, 2, i) != element_index(mm, m.act(g, element_at(mm, i))))
                throw invalid_input("pi2_of_em: level-2 action does not match the module");
    std::set<std::array<int, 4>> keys;
    for (int z = 0; z < s.count(3); ++z) {
        std::array<int, 4> y;
        for (int k = 0; k < 4; ++k) y[k] = s.face(3, z, k);
        ZVec v = mm.add(element_at(mm, y[0]), mm.neg(element_at(mm, y[1])));
        v = mm.add(v, element_at(mm, y[2]));
        v = mm.add(v, mm.neg(element_at(mm, y[3])));
        if (!mm.is_zero_elem(v))
            throw invalid_input("pi2_of_em: a level-3 boundary has nonzero alternating sum");
        if (!keys.insert(y).second)
            throw invalid_input("pi2_of_em: colliding level-3 boundaries");
    }
    Pi2Data d;
    d.module = m;
    const FinGenAb mod = mm;
    d.sphere_class = [mod](const std::array<int, 4>& y) {
        ZVec v = mod.add(element_at(mod, y[0]), mod.neg(element_at(mod, y[1])));
        v = mod.add(v, element_at(mod, y[2]));
        return mod.add(v, mod.neg(element_at(mod, y[3])));
    };
    d.add_to_simplex = [mod](int i, const ZVec& v) {
        return element_index(mod, mod.add(element_at(mod, i), v));
    };
    return d;
}

Pi2Data pi2_of_product(const GSpace& xy, const GSpace& x, const GSpace& y,
                       const Pi2Data& px, const Pi2Data& py) {
    if (!same_group(xy.group(), x.group()) || !same_group(xy.group(), y.group()))
        throw invalid_input("pi2_of_product: factors carry different groups");
    const SimplicialSet& sp = xy.space();
    const SimplicialSet& sx = x.space();
    const SimplicialSet& sy = y.space();
    const int ord = xy.group().order();
    for (int n = 0; n <= sp.dim_bound(); ++n) {
        if (n > sx.dim_bound() || n > sy.dim_bound())
            throw invalid_input("pi2_of_product: factors stop below the product bound");
        if (sp.count(n) != sx.count(n) * sy.count(n))
            throw invalid_input("pi2_of_product: level counts do not factor");
        const int yc = sy.count(n);
        for (int i = 0; i < sp.count(n); ++i) {
            const int a = i / yc, b = i % yc;
            if (n >= 1)
                for (int k = 0; k <= n; ++k)
                    if (sp.face(n, i, k) !=
                        sx.face(n, a, k) * sy.count(n - 1) + sy.face(n, b, k))
                        throw invalid_input("pi2_of_product: faces are not componentwise");
            for (int g = 0; g < ord; ++g)
                if (xy.act(g, n, i) != x.act(g, n, a) * yc + y.act(g, n, b))
                    throw invalid_input("pi2_of_product: action is not componentwise");
        }
    }
    DirectSum ds = direct_sum({&px.module.mod(), &py.module.mod()});
    std::vector<ZMat> act(ord);
    for (int g = 0; g < ord; ++g) {
        ZMat a(ds.sum.coords(), ds.sum.coords());
        add_mapped(a, ds.cmap[0], ds.cmap[0], px.module.matrix(g));
        add_mapped(a, ds.cmap[1], ds.cmap[1], py.module.matrix(g));
        act[g] = std::move(a);
    }
    Pi2Data d;
    d.module = GModule(xy.group(), ds.sum, std::move(act));
    const int yc2 = sy.count(2);
    const FinGenAb sum = ds.sum;
    const auto cmap = ds.cmap;
    const auto sa = px.sphere_class;
    const auto sb = py.sphere_class;
    d.sphere_class = [sa, sb, cmap, sum, yc2](const std::array<int, 4>& q) {
        std::array<int, 4> qa, qb;
        for (int k = 0; k < 4; ++k) {
            qa[k] = q[k] / yc2;
            qb[k] = q[k] % yc2;
        }
        const ZVec va = sa(qa), vb = sb(qb);
        ZVec v = sum.zero();
        for (size_t j = 0; j < va.size(); ++j) v[cmap[0][j]] = va[j];
        for (size_t j = 0; j < vb.size(); ++j) v[cmap[1][j]] = vb[j];
        return sum.reduce(v);
    };
    if (px.add_to_simplex && py.add_to_simplex) {
        const auto aa = px.add_to_simplex;
        const auto ab = py.add_to_simplex;
        const int na = px.module.mod().coords(), nb = py.module.mod().coords();
        d.add_to_simplex = [aa, ab, cmap, yc2, na, nb](int i, const ZVec& v) {
            ZVec va(na), vb(nb);
            for (int j = 0; j < na; ++j) va[j] = v[cmap[0][j]];
            for (int j = 0; j < nb; ++j) vb[j] = v[cmap[1][j]];
            return aa(i / yc2, va) * yc2 + ab(i % yc2, vb);
        };
    }
    return d;
}

Pi2Data pi2_by_hurewicz(const GSpace& x, int order_cap, std::int64_t budget) {
    const SimplicialSet& s = x.space();
    if (s.dim_bound() < 3) throw invalid_input("pi2_by_hurewicz: need levels up to 3");
    if (pi0(s).count != 1) throw invalid_input("pi2_by_hurewicz: space is not connected");
    KanReport kan = check_kan(s, std::min(2, s.dim_bound() - 1), budget);
    if (!kan.ok) throw invalid_input("pi2_by_hurewicz: space does not fill horns");
    Pi1Result p1 = edge_path_pi1(s, 0, order_cap);
    if (p1.group.order() != 1)
        throw invalid_input("pi2_by_hurewicz: path group is not trivial");
    SpaceChains ch = normalized_chains(s);
    const Subquotient h2 = homology_at(ch.complex, 2);
    const int n2 = static_cast<int>(ch.nondeg[2].size());
    const int hc = h2.group().coords();
    const int ord = x.group().order();
    std::vector<ZMat> act(ord);
    for (int g = 0; g < ord; ++g) {
        ZMat a(hc, hc);
        for (int j = 0; j < hc; ++j) {
            ZVec cls(hc, 0);
            cls[j] = 1;
            const ZVec chain = h2.lift(cls);
            ZVec moved(n2, 0);
            for (int t = 0; t < n2; ++t) {
                if (chain[t] == 0) continue;
                const int p = ch.pos[2][x.act(g, 2, ch.nondeg[2][t])];
                if (p < 0)
                    throw invariant_violation(
                        "pi2_by_hurewicz: action degenerates a nondegenerate simplex");
                moved[p] += chain[t];
            }
            a.set_col(j, h2.project(moved));
        }
        act[g] = std::move(a);
    }
    Pi2Data d;
    d.module = GModule(x.group(), h2.group(), std::move(act));
    const auto pos2 = ch.pos[2];
    d.sphere_class = [h2, pos2, n2](const std::array<int, 4>& q) {
        ZVec chain(n2, 0);
        int sign = 1;
        for (int k = 0; k < 4; ++k, sign = -sign) {
            const int p = pos2[q[k]];
            if (p >= 0) chain[p] += sign;
        }
        return h2.project(chain);
    };
    return d;
}

MapClasses hfp_bruteforce(const GSpace& x, int level, std::int64_t budget) {
    const SimplicialSet& s = x.space();
    if (level < 1 || level > s.dim_bound())
        throw invalid_input("hfp_bruteforce: level out of range");
    KanReport kan = check_kan(s, std::min(level, s.dim_bound() - 1), budget);
    if (!kan.ok) throw invalid_input("hfp_bruteforce: target does not fill horns");
    GSpace eg = eg_space(x.group(), level, budget);
    return equivariant_homotopy_classes(eg, truncate_gspace(x, level), level, budget);
}

SectionSet section_classes(const Extension& e, std::int64_t budget) {
    BudgetMeter meter(budget, "enum_budget");
    const FiniteGroup& t = e.total;
    const FiniteGroup& q = e.quotient;
    const std::vector<int> gens = q.generating_set();
    std::vector<std::vector<int>> word(q.order());
    {
        std::vector<char> seen(q.order(), 0);
        std::vector<int> bfs{q.identity()};
        seen[q.identity()] = 1;
        for (size_t h = 0; h < bfs.size(); ++h)
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                const int w = q.op(bfs[h], gens[gi]);
                if (seen[w]) continue;
                seen[w] = 1;
                word[w] = word[bfs[h]];
                word[w].push_back(static_cast<int>(gi));
                bfs.push_back(w);
            }
    }
    std::vector<std::vector<int>> pre(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi)
        for (int v = 0; v < t.order(); ++v)
            if (e.projection[v] == gens[gi]) pre[gi].push_back(v);

    SectionSet out;
    std::vector<int> img(gens.size(), -1);
    std::vector<int> sec(q.order());
    auto build = [&]() {
        for (int v = 0; v < q.order(); ++v) {
            int acc = t.identity();
            for (int letter : word[v]) acc = t.op(acc, img[letter]);
            sec[v] = acc;
        }
        for (int v = 0; v < q.order(); ++v) {
            if (e.projection[sec[v]] != v) return false;
            for (int w = 0; w < q.order(); ++w)
                if (sec[q.op(v, w)] != t.op(sec[v], sec[w])) return false;
        }
        return true;
    };
    std::function<void(size_t)> dfs = [&](size_t at) {
        if (at == gens.size()) {
            meter.charge(static_cast<std::int64_t>(q.order()) * q.order());
            if (build()) out.sections.push_back(sec);
            return;
        }
        for (int cand : pre[at]) {
            meter.charge(1);
            img[at] = cand;
            dfs(at + 1);
        }
    };
    dfs(0);

    const int ns = static_cast<int>(out.sections.size());
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < ns; ++i) idx.emplace(out.sections[i], i);
    Dsu dsu(ns);
    for (int i = 0; i < ns; ++i)
        for (int k = 0; k < e.kernel.order(); ++k) {
            const int tk = e.inclusion[k];
            std::vector<int> conj(q.order());
            for (int v = 0; v < q.order(); ++v)
                conj[v] = t.op(t.op(tk, out.sections[i][v]), t.inverse(tk));
            auto it = idx.find(conj);
            if (it == idx.end())
                throw invariant_violation("section_classes: kernel conjugate is not a section");
            dsu.unite(i, it->second);
        }
    out.class_of.assign(ns, -1);
    for (int i = 0; i < ns; ++i) {
        const int r = dsu.find(i);
        if (out.class_of[r] < 0) {
            out.class_of[r] = static_cast<int>(out.reps.size());
            out.reps.push_back(i);
        }
        out.class_of[i] = out.class_of[r];
    }
    return out;
}

ObstructionClass obstruction_class(const GSpace& eg, const GSpace& x, const Pi2Data& pi2,
                                   const SimplicialMap& partial, std::int64_t budget) {
    const SimplicialSet& es = eg.space();
    const SimplicialSet& xs = x.space();
    if (!same_group(eg.group(), x.group()) || !same_group(eg.group(), pi2.module.glen()))
        throw invalid_input("obstruction_class: mismatched groups");
    require_translation_space(eg, 3);
    if (xs.dim_bound() < 3) throw invalid_input("obstruction_class: need levels up to 3");
    if (partial.values.size() < 3)
        throw invalid_input("obstruction_class: partial map must cover levels 0..2");
    SimplicialMap wit;
    wit.values.assign(4, {});
    for (int n = 0; n <= 2; ++n) wit.values[n] = partial.values[n];
    {
        SimplicialMap low;
        low.values = {wit.values[0], wit.values[1], wit.values[2]};
        if (!is_simplicial_map(truncate(es, 2), truncate(xs, 2), low, 2))
            throw invalid_input("obstruction_class: partial map is not simplicial");
    }
    check_equivariant(eg, x, wit.values, 2, "obstruction_class");

    const FiniteGroup& g = eg.group();
    const int ord = g.order();
    const int e = g.identity();
    const auto filler = boundary_keys3(xs);
    BudgetMeter meter(budget, "enum_budget");
    const int mcoords = pi2.module.mod().coords();
    std::vector<ZVec> cochain(static_cast<size_t>(ord) * ord * ord,
                              pi2.module.mod().zero());
    bool all_filled = true;

    wit.values[3].assign(es.count(3), -1);
    for (int i = 0; i < es.count(3); ++i) {
        if (es.degenerate(3, i)) continue;
        const auto tup = eg_tuple(ord, 3, i);
        if (tup[0] != e) continue;
        meter.charge(1);
        std::array<int, 4> key;
        for (int k = 0; k < 4; ++k) key[k] = wit.values[2][es.face(3, i, k)];
        const ZVec cls = pi2.sphere_class(key);
        const bool zero = pi2.module.mod().is_zero_elem(cls);
        const auto it = filler.find(key);
        if (it != filler.end()) {
            if (!zero)
                throw invariant_violation(
                    "obstruction_class: a filled boundary has nonzero class");
            wit.values[3][i] = it->second;
        } else {
            if (zero)
                throw invariant_violation(
                    "obstruction_class: a class-zero boundary has no filler");
            all_filled = false;
            const int h1 = tup[1];
            const int h2 = g.op(g.inverse(tup[1]), tup[2]);
            const int h3 = g.op(g.inverse(tup[2]), tup[3]);
            cochain[(static_cast<size_t>(h1) * ord + h2) * ord + h3] = cls;
        }
    }

    ObstructionClass out;
    out.degree = 2;
    if (all_filled) {
        fill_level_translates(eg, x, wit.values, 3);
        if (!is_simplicial_map(truncate(es, 3), truncate(xs, 3), wit, 3))
            throw invariant_violation("obstruction_class: witness is not simplicial");
        check_equivariant(eg, x, wit.values, 3, "obstruction_class witness");
        out.extended = true;
        out.vanishes = true;
        out.witness = std::move(wit);
        return out;
    }

    BarComplex bar(pi2.module, 4);
    ZVec flat(bar.cochain_dim(3), 0);
    for (size_t b = 0; b < cochain.size(); ++b)
        for (int j = 0; j < mcoords; ++j) flat[b * mcoords + j] = cochain[b][j];
    const ZVec im = bar.delta(3).apply(flat);
    for (long long b = 0; b < bar.block_count(4); ++b) {
        ZVec v(mcoords);
        for (int j = 0; j < mcoords; ++j) v[j] = im[b * mcoords + j];
        if (!pi2.module.mod().is_zero_elem(pi2.module.mod().reduce(v)))
            throw invariant_violation("obstruction_class: failure cochain is not a cocycle");
    }
    const Subquotient h3 = bar.cohomology(3);
    out.extended = false;
    out.cochain = std::move(cochain);
    out.cls = h3.project(flat);
    out.vanishes = h3.group().is_zero_elem(out.cls);
    return out;
}

SimplicialMap add_cocycle_to_map(const GSpace& eg, const GSpace& x, const Pi2Data& pi2,
                                 const SimplicialMap& f, const std::vector<ZVec>& c2,
                                 std::int64_t budget) {
    if (!pi2.add_to_simplex)
        throw invalid_input("add_cocycle_to_map: metadata has no level-2 shift");
    const FiniteGroup& g = eg.group();
    const int ord = g.order();
    const int e = g.identity();
    require_translation_space(eg, 3);
    if (static_cast<int>(c2.size()) != ord * ord)
        throw invalid_input("add_cocycle_to_map: cochain needs one block per pair");
    if (f.values.size() < 3)
        throw invalid_input("add_cocycle_to_map: map must cover levels 0..2");
    const SimplicialSet& es = eg.space();
    const FinGenAb& mm = pi2.module.mod();

    // normalize: subtract the coboundary of the constant cochain at c2(e,e),
    // after which blocks with an identity entry vanish
    const ZVec base = mm.reduce(c2[static_cast<size_t>(e) * ord + e]);
    std::vector<ZVec> cn(c2.size());
    for (int h1 = 0; h1 < ord; ++h1)
        for (int h2 = 0; h2 < ord; ++h2) {
            ZVec v = mm.add(c2[static_cast<size_t>(h1) * ord + h2],
                            mm.neg(pi2.module.act(h1, base)));
            if (h1 == e || h2 == e) {
                if (!mm.is_zero_elem(v))
                    throw invalid_input(
                        "add_cocycle_to_map: cochain does not normalize; not a cocycle");
                v = mm.zero();
            }
            cn[static_cast<size_t>(h1) * ord + h2] = std::move(v);
        }

    SimplicialMap p;
    p.values.assign(3, {});
    p.values[0] = f.values[0];
    p.values[1] = f.values[1];
    p.values[2].assign(es.count(2), -1);
    for (int i = 0; i < es.count(2); ++i) {
        if (es.degenerate(2, i)) continue;
        const auto tup = eg_tuple(ord, 2, i);
        if (tup[0] != e) continue;
        const int h1 = tup[1];
        const int h2 = g.op(g.inverse(tup[1]), tup[2]);
        p.values[2][i] =
            pi2.add_to_simplex(f.values[2][i], cn[static_cast<size_t>(h1) * ord + h2]);
    }
    fill_level_translates(eg, x, p.values, 2);
    ObstructionClass ob = obstruction_class(eg, x, pi2, p, budget);
    if (!ob.extended)
        throw invalid_input("add_cocycle_to_map: shifted map does not extend over level 3");
    return ob.witness;
}

namespace {

// Try to realize a partial equivariant map on levels 0..2 whose level-1
// classes match the given section, landing in the component of the base
// vertex; any exact triangle fillers are accepted.
std::optional<SimplicialMap> realize_section(
    const GSpace& eg, const GSpace& x, const GSpace& xc, const SubcomplexResult& sub,
    const Pi1ExtensionData& ed, const std::vector<int>& sigma, int base_local,
    int base_global, const std::map<std::array<int, 3>, int>& filler2,
    BudgetMeter& meter) {
    const FiniteGroup& g = eg.group();
    const int ord = g.order();
    const int e = g.identity();
    const SimplicialSet& cs = xc.space();
    const SimplicialSet& es = eg.space();

    std::vector<std::vector<int>> cand(ord);
    for (int h = 0; h < ord; ++h) {
        if (h == e) continue;
        const int tgt = xc.act(h, 0, base_local);
        for (int le = 0; le < cs.count(1); ++le)
            if (cs.face(1, le, 1) == base_local && cs.face(1, le, 0) == tgt &&
                ed.section_value(le, h) == sigma[h])
                cand[h].push_back(le);
        if (cand[h].empty()) return std::nullopt;
    }

    std::vector<int> eta(ord, -1);
    eta[e] = sub.old_index[1].empty()
                 ? -1
                 : sub.old_index[1][cs.degen_of(0, base_local, 0)];
    std::vector<int> elems;
    for (int h = 0; h < ord; ++h)
        if (h != e) elems.push_back(h);

    auto pair_ok = [&](int g1, int g2) {
        if (g1 == e || g2 == g1) return true;  // degenerate, forced
        const int h = g.op(g.inverse(g1), g2);
        if (eta[g1] < 0 || eta[g2] < 0 || eta[h] < 0) return true;  // not decided yet
        const std::array<int, 3> key{x.act(g1, 1, eta[h]), eta[g2], eta[g1]};
        return filler2.count(key) > 0;
    };
    std::function<bool(size_t)> dfs = [&](size_t at) -> bool {
        if (at == elems.size()) return true;
        const int h = elems[at];
        for (int le : cand[h]) {
            meter.charge(1);
            eta[h] = sub.old_index[1][le];
            bool ok = true;
            for (int g1 = 0; g1 < ord && ok; ++g1)
                for (int g2 = 0; g2 < ord && ok; ++g2)
                    ok = pair_ok(g1, g2);
            if (ok && dfs(at + 1)) return true;
            eta[h] = -1;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;

    SimplicialMap u;
    u.values.assign(3, {});
    u.values[0].resize(ord);
    for (int g0 = 0; g0 < ord; ++g0) u.values[0][g0] = x.act(g0, 0, base_global);
    u.values[1].assign(es.count(1), -1);
    for (int i = 0; i < es.count(1); ++i) {
        const auto tup = eg_tuple(ord, 1, i);
        if (tup[0] == e) u.values[1][i] = eta[tup[1]];
    }
    fill_level_translates(eg, x, u.values, 1);
    u.values[2].assign(es.count(2), -1);
    for (int i = 0; i < es.count(2); ++i) {
        if (es.degenerate(2, i)) continue;
        const auto tup = eg_tuple(ord, 2, i);
        if (tup[0] != e) continue;
        const int g1 = tup[1], g2 = tup[2];
        const int h = g.op(g.inverse(g1), g2);
        const std::array<int, 3> key{x.act(g1, 1, eta[h]), eta[g2], eta[g1]};
        u.values[2][i] = filler2.at(key);
    }
    fill_level_translates(eg, x, u.values, 2);
    return u;
}

}  // namespace

HfpReport hfp_postnikov(const GSpace& x, const Pi2Data& pi2, int order_cap,
                        std::int64_t budget) {
    const SimplicialSet& s = x.space();
    if (s.dim_bound() < 3) throw invalid_input("hfp_postnikov: need levels up to 3");
    if (!same_group(x.group(), pi2.module.glen()))
        throw invalid_input("hfp_postnikov: metadata group differs from the acting group");
    const FiniteGroup& g = x.group();
    const int ord = g.order();
    const int e = g.identity();

    HfpReport rep;
    rep.components = pi0(s);
    for (int c = 0; c < rep.components.count; ++c) {
        bool inv = true;
        for (int gg = 0; gg < ord && inv; ++gg)
            inv = rep.components.component[x.act(gg, 0, rep.components.rep[c])] == c;
        if (inv) rep.invariant_components.push_back(c);
    }
    rep.brute = hfp_bruteforce(x, 3, budget);
    rep.total = static_cast<int>(rep.brute.reps.size());

    GSpace eg = eg_space(g, 3, budget);
    const auto filler2 = boundary_keys2(s);
    BudgetMeter meter(budget, "enum_budget");

    // per invariant component: extension data, sections, and one cell per
    // section class
    struct CompData {
        SubcomplexResult sub;
        GSpace xc;
        Pi1ExtensionData ed;
        SectionSet ss;
        int cell_base = 0;
    };
    std::map<int, CompData> comps;
    for (int c : rep.invariant_components) {
        CompData cd;
        cd.sub = component_of(s, rep.components.rep[c]);
        std::vector<std::vector<std::vector<int>>> act(
            ord, std::vector<std::vector<int>>(cd.sub.space.dim_bound() + 1));
        for (int gg = 0; gg < ord; ++gg)
            for (int n = 0; n <= cd.sub.space.dim_bound(); ++n) {
                act[gg][n].resize(cd.sub.space.count(n));
                for (int i = 0; i < cd.sub.space.count(n); ++i) {
                    const int im = cd.sub.new_index[n][x.act(gg, n, cd.sub.old_index[n][i])];
                    if (im < 0)
                        throw invariant_violation(
                            "hfp_postnikov: invariant component is not stable");
                    act[gg][n][i] = im;
                }
            }
        cd.xc = GSpace(g, cd.sub.space, std::move(act));
        const int base_local = cd.sub.new_index[0][rep.components.rep[c]];
        cd.ed = pi1_extension_data(cd.xc, base_local, order_cap, budget);
        cd.ss = section_classes(cd.ed.ext, budget);
        cd.cell_base = static_cast<int>(rep.cells.size());
        for (size_t sc = 0; sc < cd.ss.reps.size(); ++sc) {
            HfpCell cell;
            cell.component = c;
            cell.section_class = static_cast<int>(sc);
            std::optional<SimplicialMap> partial;
            for (int si = 0; si < static_cast<int>(cd.ss.sections.size()) && !partial;
                 ++si) {
                if (cd.ss.class_of[si] != static_cast<int>(sc)) continue;
                partial = realize_section(eg, x, cd.xc, cd.sub, cd.ed,
                                          cd.ss.sections[si], base_local,
                                          rep.components.rep[c], filler2, meter);
            }
            if (!partial)
                throw invariant_violation(
                    "hfp_postnikov: no partial map realizes a section class");
            cell.obstruction = obstruction_class(eg, x, pi2, *partial, budget);
            rep.cells.push_back(std::move(cell));
        }
        comps.emplace(c, std::move(cd));
    }

    // match every enumerated class to its cell
    for (int k = 0; k < rep.total; ++k) {
        const SimplicialMap& f = rep.brute.maps[rep.brute.reps[k]];
        const int v0 = f.values[0][e];
        const int c = rep.components.component[v0];
        auto it = comps.find(c);
        if (it == comps.end())
            throw invariant_violation(
                "hfp_postnikov: an enumerated class lands in a non-invariant component");
        const CompData& cd = it->second;
        const int v_local = cd.sub.new_index[0][v0];
        const EdgePath to_v = path_from_base(cd.ed.fiber_pi1, v_local);
        const int egsq = ord * ord;
        const int const_e = eg_index(ord, {e, e});
        std::vector<int> sig(ord);
        for (int h = 0; h < ord; ++h) {
            EdgePath path;
            for (const auto& [le, dir] : to_v)
                path.emplace_back(cd.ed.hq.orbit.orbit_of[1][le * egsq + const_e], dir);
            const int f_edge = cd.sub.new_index[1][f.values[1][eg_index(ord, {e, h})]];
            path.emplace_back(
                cd.ed.hq.orbit.orbit_of[1][f_edge * egsq + eg_index(ord, {e, h})], 1);
            for (auto rit = to_v.rbegin(); rit != to_v.rend(); ++rit)
                path.emplace_back(
                    cd.ed.hq.orbit.orbit_of[1][rit->first * egsq + const_e],
                    -rit->second);
            sig[h] = path_class(cd.ed.total_pi1, path);
        }
        int found = -1;
        for (size_t si = 0; si < cd.ss.sections.size() && found < 0; ++si)
            if (cd.ss.sections[si] == sig) found = static_cast<int>(si);
        if (found < 0)
            throw invariant_violation(
                "hfp_postnikov: an enumerated class induces an unlisted section");
        rep.cells[cd.cell_base + cd.ss.class_of[found]].classes.push_back(k);
    }

    int sum = 0;
    for (const auto& cell : rep.cells) {
        sum += static_cast<int>(cell.classes.size());
        if (cell.obstruction.vanishes != !cell.classes.empty())
            throw invariant_violation(
                "hfp_postnikov: obstruction and enumeration disagree on a cell");
    }
    if (sum != rep.total)
        throw invariant_violation("hfp_postnikov: cells do not partition the classes");
    return rep;
}

FinGenAb em_fixed_points(const GModule& m, int n) {
    if (n < 0) throw invalid_input("em_fixed_points: negative degree");
    return group_cohomology(m, n).group();
}

AbelianPresentation abelian_presentation(const FiniteGroup& a) {
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (a.op(i, j) != a.op(j, i))
                throw invalid_input("abelian_presentation: group is not abelian");
    AbelianPresentation out;
    out.gens = a.generating_set();
    const int k = static_cast<int>(out.gens.size());
    std::vector<ZVec> r(a.order(), ZVec(k, 0));
    {
        std::vector<char> seen(a.order(), 0);
        std::vector<int> bfs{a.identity()};
        seen[a.identity()] = 1;
        for (size_t h = 0; h < bfs.size(); ++h)
            for (int gi = 0; gi < k; ++gi) {
                const int w = a.op(bfs[h], out.gens[gi]);
                if (seen[w]) continue;
                seen[w] = 1;
                r[w] = r[bfs[h]];
                r[w][gi] += 1;
                bfs.push_back(w);
            }
    }
    ZMat rel(k, a.order() * k);
    for (int v = 0; v < a.order(); ++v)
        for (int gi = 0; gi < k; ++gi) {
            const int w = a.op(v, out.gens[gi]);
            for (int j = 0; j < k; ++j)
                rel.at(j, v * k + gi) = r[v][j] - r[w][j] + (j == gi ? 1 : 0);
        }
    out.pres = cokernel(rel);
    if (ab_order(out.pres.group()) != a.order())
        throw invariant_violation("abelian_presentation: presented order mismatch");
    out.coords_of.resize(a.order());
    out.elem_of.assign(a.order(), -1);
    for (int v = 0; v < a.order(); ++v) {
        out.coords_of[v] = out.pres.project(r[v]);
        const int idx = element_index(out.pres.group(), out.coords_of[v]);
        if (out.elem_of[idx] >= 0)
            throw invariant_violation("abelian_presentation: coordinates collide");
        out.elem_of[idx] = v;
    }
    return out;
}

E2Page e2_page(const GSpace& x, const SimplicialMap& base, const Pi2Data& pi2,
               int s_max, int t_max, int order_cap, std::int64_t budget) {
    if (s_max < 0 || t_max < 0) throw invalid_input("e2_page: negative extent");
    if (s_max > 2) throw invalid_input("e2_page: homotopy metadata stops at degree 2");
    const SimplicialSet& s = x.space();
    const FiniteGroup& g = x.group();
    const int ord = g.order();
    const int e = g.identity();
    if (base.values.empty() || static_cast<int>(base.values[0].size()) != ord)
        throw invalid_input("e2_page: base map must cover the translation vertices");

    E2Page page;
    page.s_max = s_max;
    page.t_max = t_max;
    page.entry.assign(s_max + 1, std::vector<E2Entry>(t_max + 1));
    for (int ss = 0; ss <= s_max; ++ss)
        for (int tt = 0; tt <= t_max; ++tt) page.entry[ss][tt].in_region = ss >= tt - 1;

    {
        const Pi0 p0 = pi0(s);
        int inv = 0;
        for (int c = 0; c < p0.count; ++c) {
            bool fixed = true;
            for (int gg = 0; gg < ord && fixed; ++gg)
                fixed = p0.component[x.act(gg, 0, p0.rep[c])] == c;
            if (fixed) ++inv;
        }
        page.entry[0][0].computed = true;
        page.entry[0][0].set_size = inv;
    }

    if (s_max >= 1) {
        if (base.values.size() < 2 || static_cast<int>(base.values[1].size()) != ord * ord)
            throw invalid_input("e2_page: base map must cover the translation edges");
        const int v0 = base.values[0][e];
        const Pi1Result p1 = edge_path_pi1(s, v0, order_cap);
        const int n1 = p1.group.order();
        auto realize = [&](int t) {
            EdgePath loop;
            for (int letter : p1.element_word[t]) {
                EdgePath part =
                    loop_of_edge(p1, s, p1.generator_edge[std::abs(letter) - 1]);
                if (letter > 0)
                    loop.insert(loop.end(), part.begin(), part.end());
                else
                    for (auto rit = part.rbegin(); rit != part.rend(); ++rit)
                        loop.emplace_back(rit->first, -rit->second);
            }
            return loop;
        };
        std::vector<std::vector<int>> auts(ord, std::vector<int>(n1));
        for (int gg = 0; gg < ord; ++gg) {
            const int te = base.values[1][eg_index(ord, {e, gg})];
            for (int t = 0; t < n1; ++t) {
                EdgePath path{{te, 1}};
                for (const auto& [ed, dir] : realize(t))
                    path.emplace_back(x.act(gg, 1, ed), dir);
                path.emplace_back(te, -1);
                auts[gg][t] = path_class(p1, path);
            }
        }
        for (int a = 0; a < ord; ++a)
            for (int b = 0; b < ord; ++b)
                for (int t = 0; t < n1; ++t)
                    if (auts[g.op(a, b)][t] != auts[a][auts[b][t]])
                        throw invariant_violation(
                            "e2_page: transported action is not an action");
        if (t_max >= 0) {
            int fixed = 0;
            for (int t = 0; t < n1; ++t) {
                bool f = true;
                for (int gg = 0; gg < ord && f; ++gg) f = auts[gg][t] == t;
                if (f) ++fixed;
            }
            page.entry[1][0].computed = true;
            page.entry[1][0].set_size = fixed;
        }
        if (t_max >= 1) {
            const GroupOnGroup act(g, p1.group, auts);
            const NonabelianH1 h1 = h1_nonabelian(g, p1.group, act, budget);
            page.entry[1][1].computed = true;
            page.entry[1][1].set_size = static_cast<std::int64_t>(h1.reps.size());
        }
        if (t_max >= 2) {
            bool abelian = true;
            for (int i = 0; i < n1 && abelian; ++i)
                for (int j = 0; j < n1 && abelian; ++j)
                    abelian = p1.group.op(i, j) == p1.group.op(j, i);
            if (abelian) {
                const AbelianPresentation ap = abelian_presentation(p1.group);
                const int nc = ap.pres.group().coords();
                std::vector<ZMat> mats(ord);
                for (int gg = 0; gg < ord; ++gg) {
                    ZMat mat(nc, nc);
                    for (int j = 0; j < nc; ++j) {
                        ZVec unit(nc, 0);
                        unit[j] = 1;
                        const int elem =
                            ap.elem_of[element_index(ap.pres.group(),
                                                     ap.pres.group().reduce(unit))];
                        mat.set_col(j, ap.coords_of[auts[gg][elem]]);
                    }
                    mats[gg] = std::move(mat);
                }
                const GModule mod(g, ap.pres.group(), std::move(mats));
                page.entry[1][2].computed = true;
                page.entry[1][2].set_size = ab_order(group_cohomology(mod, 2).group());
            }
        }
    }

    if (s_max >= 2)
        for (int tt = 0; tt <= std::min(t_max, 3); ++tt) {
            page.entry[2][tt].computed = true;
            page.entry[2][tt].is_group = true;
            page.entry[2][tt].group = group_cohomology(pi2.module, tt).group();
            page.entry[2][tt].set_size = ab_order(page.entry[2][tt].group);
        }
    return page;
}

}  // namespace eqsimp
