#include "eqsimp/homalg.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "eqsimp/config.hpp"

namespace eqsimp {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
        if (r > (1LL << 40)) throw cap_exceeded("enum_budget", "power overflow");
    }
    return r;
}

void add_block(ZMat& m, int r0, int c0, const ZMat& b, int sign) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (b.at(i, j) != 0) m.at(r0 + i, c0 + j) += sign * b.at(i, j);
}

}  // namespace

ZMat torsion_relations(const FinGenAb& m) {
    ZMat r(m.coords(), static_cast<int>(m.torsion.size()));
    for (size_t i = 0; i < m.torsion.size(); ++i) r.at(static_cast<int>(i), static_cast<int>(i)) = m.torsion[i];
    return r;
}

// ---- chain complexes ----

ChainComplex make_chain_complex(int lo, std::vector<FinGenAb> groups, std::vector<ZMat> d) {
    ChainComplex c;
    c.lo = lo;
    c.groups = std::move(groups);
    c.d = std::move(d);
    if (c.d.size() != c.groups.size())
        throw invalid_input("chain complex: one differential slot per degree");
    for (size_t i = 1; i < c.groups.size(); ++i) {
        const FinGenAb& src = c.groups[i];
        const FinGenAb& dst = c.groups[i - 1];
        if (c.d[i].rows() != dst.coords() || c.d[i].cols() != src.coords())
            throw invalid_input("chain complex: differential shape mismatch");
        for (size_t j = 0; j < src.torsion.size(); ++j) {
            ZVec v(src.coords(), 0);
            v[j] = src.torsion[j];
            if (!dst.is_zero_elem(c.d[i].apply(v)))
                throw invalid_input("chain complex: differential does not respect torsion");
        }
    }
    for (size_t i = 2; i < c.groups.size(); ++i) {
        ZMat dd = c.d[i - 1] * c.d[i];
        if (!same_module_map(c.groups[i], c.groups[i - 2], dd,
                             ZMat(c.groups[i - 2].coords(), c.groups[i].coords())))
            throw invalid_input("chain complex: differentials do not square to zero");
    }
    return c;
}

ChainComplex suspend(const ChainComplex& c, int shift) {
    ChainComplex r = c;
    r.lo += shift;
    return r;
}

ChainComplex truncate_above(const ChainComplex& c, int k) {
    ChainComplex r;
    r.lo = c.lo;
    if (k < c.lo) {
        r.lo = k + 1;
        return r;
    }
    const int keep = std::min(k, c.hi()) - c.lo + 1;
    r.groups.assign(c.groups.begin(), c.groups.begin() + keep);
    r.d.assign(c.d.begin(), c.d.begin() + keep);
    return r;
}

ChainComplex truncate_below(const ChainComplex& c, int k) {
    if (k <= c.lo) return c;
    ChainComplex r;
    r.lo = k;
    if (k > c.hi()) return r;
    r.groups.assign(c.groups.begin() + (k - c.lo), c.groups.end());
    r.d.assign(c.d.begin() + (k - c.lo), c.d.end());
    if (!r.d.empty()) r.d[0] = ZMat();
    return r;
}

Subquotient cochain_cohomology(int ambient_dim, const ZMat& rel_here, const ZMat& d_in,
                               const ZMat& d_out, const ZMat& rel_next) {
    ZMat numerator;
    if (d_out.rows() == 0) {
        numerator = ZMat::identity(ambient_dim);
    } else {
        ZMat stacked = ZMat::hcat(d_out, rel_next);
        ZMat kb = kernel_basis(smith_normal_form(stacked));
        numerator = ZMat(ambient_dim, kb.cols());
        for (int i = 0; i < ambient_dim; ++i)
            for (int j = 0; j < kb.cols(); ++j) numerator.at(i, j) = kb.at(i, j);
    }
    ZMat denominator = ZMat::hcat(d_in, rel_here);
    return Subquotient(ambient_dim, numerator, denominator);
}

Subquotient homology_at(const ChainComplex& c, int n) {
    if (!c.in_range(n)) return Subquotient(0, ZMat(0, 0), ZMat(0, 0));
    const int ambient = c.at(n).coords();
    const ZMat rel_here = torsion_relations(c.at(n));
    const ZMat d_in = c.in_range(n + 1) ? c.diff(n + 1) : ZMat(ambient, 0);
    const ZMat d_out = c.in_range(n - 1) ? c.diff(n) : ZMat(0, ambient);
    const ZMat rel_next =
        c.in_range(n - 1) ? torsion_relations(c.at(n - 1)) : ZMat(0, 0);
    return cochain_cohomology(ambient, rel_here, d_in, d_out, rel_next);
}

std::vector<FinGenAb> chain_homology(const ChainComplex& c) {
    std::vector<FinGenAb> out;
    for (int n = c.lo; n <= c.hi(); ++n) out.push_back(homology_at(c, n).group());
    return out;
}

ZMat induced_on_classes(const Subquotient& src, const Subquotient& dst, const ZMat& f) {
    const int sc = src.group().coords();
    ZMat m(dst.group().coords(), sc);
    for (int j = 0; j < sc; ++j) {
        ZVec e(sc, 0);
        e[j] = 1;
        ZVec img = dst.project(f.apply(src.lift(e)));
        for (int i = 0; i < dst.group().coords(); ++i) m.at(i, j) = img[i];
    }
    return m;
}

bool subgroup_contains(const FinGenAb& m, const ZMat& gens, const ZMat& sub) {
    SmithForm s = smith_normal_form(ZMat::hcat(gens, torsion_relations(m)));
    for (int j = 0; j < sub.cols(); ++j) {
        ZVec col(sub.rows());
        for (int i = 0; i < sub.rows(); ++i) col[i] = sub.at(i, j);
        if (!solve_linear(s, col)) return false;
    }
    return true;
}

// ---- equivariant complexes ----

GComplex make_gcomplex(FiniteGroup g, int lo, std::vector<GModule> groups,
                       std::vector<ZMat> d) {
    GComplex c;
    c.g = std::move(g);
    c.lo = lo;
    c.groups = std::move(groups);
    c.d = std::move(d);
    std::vector<FinGenAb> plain;
    for (const auto& m : c.groups) {
        if (m.glen().table() != c.g.table())
            throw invalid_input("equivariant complex: module over a different group");
        plain.push_back(m.mod());
    }
    make_chain_complex(lo, plain, c.d);
    for (size_t i = 1; i < c.groups.size(); ++i)
        for (int a = 0; a < c.g.order(); ++a)
            if (!same_module_map(c.groups[i].mod(), c.groups[i - 1].mod(),
                                 c.d[i] * c.groups[i].matrix(a),
                                 c.groups[i - 1].matrix(a) * c.d[i]))
                throw invalid_input("equivariant complex: differential is not equivariant");
    return c;
}

GComplex concentrated_gcomplex(const GModule& m, int degree) {
    GComplex c;
    c.g = m.glen();
    c.lo = degree;
    c.groups = {m};
    c.d = {ZMat()};
    return c;
}

ChainComplex underlying_complex(const GComplex& c) {
    std::vector<FinGenAb> plain;
    for (const auto& m : c.groups) plain.push_back(m.mod());
    return make_chain_complex(c.lo, std::move(plain), c.d);
}

GComplex suspend(const GComplex& c, int shift) {
    GComplex r = c;
    r.lo += shift;
    return r;
}

GComplex truncate_above(const GComplex& c, int k) {
    GComplex r;
    r.g = c.g;
    r.lo = c.lo;
    if (k < c.lo) {
        r.lo = k + 1;
        return r;
    }
    const int keep = std::min(k, c.hi()) - c.lo + 1;
    r.groups.assign(c.groups.begin(), c.groups.begin() + keep);
    r.d.assign(c.d.begin(), c.d.begin() + keep);
    return r;
}

GComplex truncate_below(const GComplex& c, int k) {
    if (k <= c.lo) return c;
    GComplex r;
    r.g = c.g;
    r.lo = k;
    if (k > c.hi()) return r;
    r.groups.assign(c.groups.begin() + (k - c.lo), c.groups.end());
    r.d.assign(c.d.begin() + (k - c.lo), c.d.end());
    if (!r.d.empty()) r.d[0] = ZMat();
    return r;
}

// ---- bar resolution cochains ----

namespace {

int bar_block_of(int ord, const std::vector<int>& tuple) {
    long long v = 0;
    for (int t : tuple) v = v * ord + t;
    return static_cast<int>(v);
}

std::vector<int> bar_tuple_of(int ord, int block, int n) {
    std::vector<int> t(n);
    for (int i = n - 1; i >= 0; --i) {
        t[i] = block % ord;
        block /= ord;
    }
    return t;
}

// C^p -> C^{p+1} for inhomogeneous cochains with module values.
ZMat bar_delta(const GModule& m, int p) {
    const FiniteGroup& g = m.glen();
    const int ord = g.order();
    const int c = m.mod().coords();
    const long long src_blocks = ipow(ord, p);
    const long long dst_blocks = ipow(ord, p + 1);
    if (static_cast<long long>(c) * dst_blocks * c * src_blocks > 50000000LL)
        throw cap_exceeded("enum_budget", "cochain matrix too large");
    ZMat d(static_cast<int>(c * dst_blocks), static_cast<int>(c * src_blocks));
    for (long long bt = 0; bt < dst_blocks; ++bt) {
        const auto t = bar_tuple_of(ord, static_cast<int>(bt), p + 1);
        const int r0 = static_cast<int>(bt) * c;
        std::vector<int> tail(t.begin() + 1, t.end());
        add_block(d, r0, bar_block_of(ord, tail) * c, m.matrix(t[0]), 1);
        for (int j = 0; j + 1 <= p; ++j) {
            auto s = t;
            s[j] = g.op(t[j], t[j + 1]);
            s.erase(s.begin() + j + 1);
            const int sign = (j % 2 == 0) ? -1 : 1;
            for (int i = 0; i < c; ++i) d.at(r0 + i, bar_block_of(ord, s) * c + i) += sign;
        }
        std::vector<int> head(t.begin(), t.end() - 1);
        const int sign = ((p + 1) % 2 == 0) ? 1 : -1;
        for (int i = 0; i < c; ++i) d.at(r0 + i, bar_block_of(ord, head) * c + i) += sign;
    }
    return d;
}

ZMat bar_relations(const GModule& m, int p) {
    const int ord = m.glen().order();
    const int c = m.mod().coords();
    const int t = static_cast<int>(m.mod().torsion.size());
    const long long blocks = ipow(ord, p);
    ZMat r(static_cast<int>(c * blocks), static_cast<int>(t * blocks));
    for (long long b = 0; b < blocks; ++b)
        for (int i = 0; i < t; ++i)
            r.at(static_cast<int>(b) * c + i, static_cast<int>(b) * t + i) = m.mod().torsion[i];
    return r;
}

}  // namespace

BarComplex::BarComplex(GModule m, int max_n) : m_(std::move(m)), max_n_(max_n) {
    if (max_n_ < 0) throw invalid_input("bar cochains: negative degree");
    delta_.reserve(max_n_ + 1);
    for (int n = 0; n <= max_n_; ++n) delta_.push_back(bar_delta(m_, n));
}

long long BarComplex::block_count(int n) const { return ipow(m_.glen().order(), n); }

int BarComplex::cochain_dim(int n) const {
    return static_cast<int>(m_.mod().coords() * block_count(n));
}

int BarComplex::block_of(const std::vector<int>& tuple) const {
    return bar_block_of(m_.glen().order(), tuple);
}

std::vector<int> BarComplex::tuple_of(int block, int n) const {
    return bar_tuple_of(m_.glen().order(), block, n);
}

Subquotient BarComplex::cohomology(int n) const {
    if (n < 0 || n > max_n_)
        throw invalid_input("bar cochains: degree outside the built range");
    const int dim = cochain_dim(n);
    const ZMat d_in = n >= 1 ? delta_[n - 1] : ZMat(dim, 0);
    return cochain_cohomology(dim, bar_relations(m_, n), d_in, delta_[n],
                              bar_relations(m_, n + 1));
}

Subquotient group_cohomology(const GModule& m, int n) {
    if (n < 0) throw invalid_input("group cohomology: negative degree");
    const int dim = static_cast<int>(m.mod().coords() * ipow(m.glen().order(), n));
    const ZMat d_in = n >= 1 ? bar_delta(m, n - 1) : ZMat(dim, 0);
    return cochain_cohomology(dim, bar_relations(m, n), d_in, bar_delta(m, n),
                              bar_relations(m, n + 1));
}

// ---- nonabelian degree one ----

void validate_cocycle1(const FiniteGroup& g, const FiniteGroup& a, const GroupOnGroup& act,
                       const Cocycle1& c) {
    if (static_cast<int>(c.alpha.size()) != g.order())
        throw invalid_input("cocycle: one value per group element required");
    for (int v : c.alpha)
        if (v < 0 || v >= a.order()) throw invalid_input("cocycle: value out of range");
    for (int s = 0; s < g.order(); ++s)
        for (int t = 0; t < g.order(); ++t)
            if (c.alpha[g.op(s, t)] != a.op(c.alpha[s], act.apply(s, c.alpha[t])))
                throw invalid_input("cocycle: twisted product law fails");
}

NonabelianH1 h1_nonabelian(const FiniteGroup& g, const FiniteGroup& a,
                           const GroupOnGroup& act, std::int64_t budget) {
    const std::vector<int> gens = g.generating_set();
    const int ng = static_cast<int>(gens.size());
    BudgetMeter meter(budget, "enum_budget");

    // breadth-first words: each element as (previous element, generator index)
    std::vector<std::pair<int, int>> reach(g.order(), {-1, -1});
    std::vector<int> order_in;
    order_in.push_back(g.identity());
    reach[g.identity()] = {g.identity(), -1};
    for (size_t h = 0; h < order_in.size(); ++h)
        for (int s = 0; s < ng; ++s) {
            const int nxt = g.op(order_in[h], gens[s]);
            if (reach[nxt].first < 0) {
                reach[nxt] = {order_in[h], s};
                order_in.push_back(nxt);
            }
        }
    if (static_cast<int>(order_in.size()) != g.order())
        throw invariant_violation("generating set does not generate");

    NonabelianH1 out;
    std::vector<int> img(ng, 0);
    std::vector<int> alpha(g.order());
    while (true) {
        meter.charge(g.order() * g.order());
        alpha[g.identity()] = a.identity();
        for (size_t h = 1; h < order_in.size(); ++h) {
            const int elt = order_in[h];
            const auto [prev, s] = reach[elt];
            alpha[elt] = a.op(alpha[prev], act.apply(prev, img[s]));
        }
        bool ok = true;
        for (int s = 0; s < g.order() && ok; ++s)
            for (int t = 0; t < g.order(); ++t)
                if (alpha[g.op(s, t)] != a.op(alpha[s], act.apply(s, alpha[t]))) {
                    ok = false;
                    break;
                }
        if (ok) out.cocycles.push_back(Cocycle1{alpha});
        int i = ng - 1;
        while (i >= 0) {
            img[i] += 1;
            if (img[i] < a.order()) break;
            img[i] = 0;
            --i;
        }
        if (i < 0) break;
    }

    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < out.cocycles.size(); ++i) index[out.cocycles[i].alpha] = static_cast<int>(i);
    out.class_of.assign(out.cocycles.size(), -1);
    for (size_t i = 0; i < out.cocycles.size(); ++i) {
        if (out.class_of[i] >= 0) continue;
        const int cls = static_cast<int>(out.reps.size());
        out.reps.push_back(static_cast<int>(i));
        for (int b = 0; b < a.order(); ++b) {
            std::vector<int> tw(g.order());
            for (int s = 0; s < g.order(); ++s)
                tw[s] = a.op(a.op(a.inverse(b), out.cocycles[i].alpha[s]), act.apply(s, b));
            auto it = index.find(tw);
            if (it == index.end())
                throw invariant_violation("twisting left the cocycle set");
            out.class_of[it->second] = cls;
        }
    }
    return out;
}

GroupOnGroup twist_action(const FiniteGroup& g, const FiniteGroup& a,
                          const GroupOnGroup& act, const Cocycle1& alpha) {
    validate_cocycle1(g, a, act, alpha);
    std::vector<std::vector<int>> maps(g.order(), std::vector<int>(a.order()));
    for (int s = 0; s < g.order(); ++s)
        for (int x = 0; x < a.order(); ++x)
            maps[s][x] = a.op(a.op(alpha.alpha[s], act.apply(s, x)), a.inverse(alpha.alpha[s]));
    return GroupOnGroup(g, a, std::move(maps));
}

Cocycle1 tau_twist(const FiniteGroup& g, const FiniteGroup& a, const Cocycle1& alpha,
                   const Cocycle1& beta) {
    Cocycle1 c;
    c.alpha.resize(g.order());
    for (int s = 0; s < g.order(); ++s)
        c.alpha[s] = a.op(beta.alpha[s], a.inverse(alpha.alpha[s]));
    return c;
}

// ---- simplicial abelian groups ----

DirectSum direct_sum(const std::vector<const FinGenAb*>& parts) {
    DirectSum ds;
    int t_total = 0;
    for (const auto* p : parts) t_total += static_cast<int>(p->torsion.size());
    ds.cmap.resize(parts.size());
    int t_acc = 0, r_acc = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        const auto& p = *parts[i];
        const int pt = static_cast<int>(p.torsion.size());
        ds.cmap[i].resize(p.coords());
        for (int j = 0; j < p.coords(); ++j)
            ds.cmap[i][j] = j < pt ? t_acc + j : t_total + r_acc + (j - pt);
        for (const auto& d : p.torsion) ds.sum.torsion.push_back(d);
        t_acc += pt;
        r_acc += p.rank;
    }
    ds.sum.rank = r_acc;
    return ds;
}

void add_mapped(ZMat& m, const std::vector<int>& rmap, const std::vector<int>& cmap,
                const ZMat& b) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (b.at(i, j) != 0) m.at(rmap[i], cmap[j]) += b.at(i, j);
}

SimplicialAbGroup make_simplicial_ab(int dim_bound, std::vector<FinGenAb> groups,
                                     std::vector<std::vector<ZMat>> face,
                                     std::vector<std::vector<ZMat>> degen) {
    SimplicialAbGroup s;
    s.dim_bound = dim_bound;
    s.groups = std::move(groups);
    s.face = std::move(face);
    s.degen = std::move(degen);
    if (static_cast<int>(s.groups.size()) != dim_bound + 1 ||
        static_cast<int>(s.face.size()) != dim_bound + 1 ||
        static_cast<int>(s.degen.size()) != dim_bound + 1)
        throw invalid_input("simplicial group: level count mismatch");
    for (int n = 0; n <= dim_bound; ++n) {
        if (static_cast<int>(s.face[n].size()) != (n >= 1 ? n + 1 : 0))
            throw invalid_input("simplicial group: face operator count mismatch");
        if (static_cast<int>(s.degen[n].size()) != (n < dim_bound ? n + 1 : 0))
            throw invalid_input("simplicial group: degeneracy operator count mismatch");
        for (int k = 0; n >= 1 && k <= n; ++k)
            if (s.face[n][k].rows() != s.groups[n - 1].coords() ||
                s.face[n][k].cols() != s.groups[n].coords())
                throw invalid_input("simplicial group: face shape mismatch");
        for (int k = 0; n < dim_bound && k <= n; ++k)
            if (s.degen[n][k].rows() != s.groups[n + 1].coords() ||
                s.degen[n][k].cols() != s.groups[n].coords())
                throw invalid_input("simplicial group: degeneracy shape mismatch");
    }
    auto eq = [&](const FinGenAb& src, const FinGenAb& dst, const ZMat& x, const ZMat& y) {
        return same_module_map(src, dst, x, y);
    };
    for (int n = 2; n <= dim_bound; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (!eq(s.groups[n], s.groups[n - 2], s.face[n - 1][i] * s.face[n][j],
                        s.face[n - 1][j - 1] * s.face[n][i]))
                    throw invalid_input("simplicial group: face identity fails");
    for (int n = 0; n + 2 <= dim_bound; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (!eq(s.groups[n], s.groups[n + 2], s.degen[n + 1][i] * s.degen[n][j],
                        s.degen[n + 1][j + 1] * s.degen[n][i]))
                    throw invalid_input("simplicial group: degeneracy identity fails");
    for (int n = 0; n + 1 <= dim_bound; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                const ZMat lhs = s.face[n + 1][i] * s.degen[n][j];
                if (i == j || i == j + 1) {
                    if (!eq(s.groups[n], s.groups[n], lhs, ZMat::identity(s.groups[n].coords())))
                        throw invalid_input("simplicial group: mixed identity fails");
                } else if (i < j) {
                    if (n == 0) throw invariant_violation("mixed identity below level 1");
                    if (!eq(s.groups[n], s.groups[n], lhs, s.degen[n - 1][j - 1] * s.face[n][i]))
                        throw invalid_input("simplicial group: mixed identity fails");
                } else {
                    if (n == 0) throw invariant_violation("mixed identity below level 1");
                    if (!eq(s.groups[n], s.groups[n], lhs, s.degen[n - 1][j] * s.face[n][i - 1]))
                        throw invalid_input("simplicial group: mixed identity fails");
                }
            }
    return s;
}

SimplicialGAb make_simplicial_gab(SimplicialAbGroup ab, FiniteGroup g,
                                  std::vector<std::vector<ZMat>> action) {
    SimplicialGAb s;
    s.ab = std::move(ab);
    s.g = std::move(g);
    s.action = std::move(action);
    if (static_cast<int>(s.action.size()) != s.g.order())
        throw invalid_input("equivariant simplicial group: one table per element");
    for (int a = 0; a < s.g.order(); ++a)
        if (static_cast<int>(s.action[a].size()) != s.ab.dim_bound + 1)
            throw invalid_input("equivariant simplicial group: level count mismatch");
    for (int n = 0; n <= s.ab.dim_bound; ++n) {
        std::vector<ZMat> level;
        for (int a = 0; a < s.g.order(); ++a) level.push_back(s.action[a][n]);
        GModule check(s.g, s.ab.groups[n], std::move(level));
        for (int a = 0; a < s.g.order(); ++a) {
            if (n >= 1)
                for (int k = 0; k <= n; ++k)
                    if (!same_module_map(s.ab.groups[n], s.ab.groups[n - 1],
                                         s.ab.face[n][k] * s.action[a][n],
                                         s.action[a][n - 1] * s.ab.face[n][k]))
                        throw invalid_input(
                            "equivariant simplicial group: action not compatible with faces");
            if (n < s.ab.dim_bound)
                for (int k = 0; k <= n; ++k)
                    if (!same_module_map(s.ab.groups[n], s.ab.groups[n + 1],
                                         s.ab.degen[n][k] * s.action[a][n],
                                         s.action[a][n + 1] * s.ab.degen[n][k]))
                        throw invalid_input(
                            "equivariant simplicial group: action not compatible with "
                            "degeneracies");
        }
    }
    return s;
}

SimplicialGAb free_abelianization(const GSpace& x) {
    const SimplicialSet& sp = x.space();
    const int nb = sp.dim_bound();
    BudgetMeter meter(global_caps().enum_budget, "enum_budget");
    std::vector<FinGenAb> groups(nb + 1);
    std::vector<std::vector<ZMat>> face(nb + 1), degen(nb + 1);
    for (int n = 0; n <= nb; ++n) {
        groups[n].rank = sp.count(n);
        if (n >= 1) {
            meter.charge(static_cast<long long>(sp.count(n)) * sp.count(n - 1) * (n + 1));
            face[n].assign(n + 1, ZMat(sp.count(n - 1), sp.count(n)));
            for (int i = 0; i < sp.count(n); ++i)
                for (int k = 0; k <= n; ++k) face[n][k].at(sp.face(n, i, k), i) = 1;
        }
        if (n < nb) {
            meter.charge(static_cast<long long>(sp.count(n)) * sp.count(n + 1) * (n + 1));
            degen[n].assign(n + 1, ZMat(sp.count(n + 1), sp.count(n)));
            for (int i = 0; i < sp.count(n); ++i)
                for (int k = 0; k <= n; ++k) degen[n][k].at(sp.degen_of(n, i, k), i) = 1;
        }
    }
    std::vector<std::vector<ZMat>> action(x.group().order());
    for (int a = 0; a < x.group().order(); ++a) {
        action[a].resize(nb + 1);
        for (int n = 0; n <= nb; ++n) {
            action[a][n] = ZMat(sp.count(n), sp.count(n));
            for (int i = 0; i < sp.count(n); ++i) action[a][n].at(x.act(a, n, i), i) = 1;
        }
    }
    return make_simplicial_gab(
        make_simplicial_ab(nb, std::move(groups), std::move(face), std::move(degen)),
        x.group(), std::move(action));
}

mpz_class augmentation(const ZVec& chain0) {
    mpz_class s = 0;
    for (const auto& c : chain0) s += c;
    return s;
}

ChainComplex moore_underline(const SimplicialAbGroup& s) {
    std::vector<ZMat> d(s.dim_bound + 1);
    for (int n = 1; n <= s.dim_bound; ++n) {
        ZMat acc(s.groups[n - 1].coords(), s.groups[n].coords());
        for (int k = 0; k <= n; ++k) acc = (k % 2 == 0) ? acc + s.face[n][k] : acc - s.face[n][k];
        d[n] = std::move(acc);
    }
    return make_chain_complex(0, s.groups, std::move(d));
}

GComplex moore_underline_g(const SimplicialGAb& s) {
    ChainComplex plain = moore_underline(s.ab);
    std::vector<GModule> mods;
    for (int n = 0; n <= s.ab.dim_bound; ++n) {
        std::vector<ZMat> level;
        for (int a = 0; a < s.g.order(); ++a) level.push_back(s.action[a][n]);
        mods.emplace_back(s.g, s.ab.groups[n], std::move(level));
    }
    return make_gcomplex(s.g, 0, std::move(mods), std::move(plain.d));
}

namespace {

struct OverlineLevel {
    std::vector<std::pair<int, Monotone>> summands;
    std::map<std::pair<int, Monotone>, int> index;
    DirectSum ds;
};

std::vector<OverlineLevel> overline_levels(const ChainComplex& c, int dim_bound) {
    std::vector<OverlineLevel> levels(dim_bound + 1);
    for (int n = 0; n <= dim_bound; ++n) {
        auto& L = levels[n];
        std::vector<const FinGenAb*> parts;
        for (int k = std::max(0, c.lo); k <= std::min(n, c.hi()); ++k)
            for (auto& eta : all_surjections(n, k)) {
                L.index[{k, eta}] = static_cast<int>(L.summands.size());
                L.summands.emplace_back(k, eta);
                parts.push_back(&c.at(k));
            }
        L.ds = direct_sum(parts);
    }
    return levels;
}

// The operator of theta: [target] -> [n] out of level n.
ZMat overline_op(const ChainComplex& c, const std::vector<OverlineLevel>& levels, int n,
                 const Monotone& theta, int target) {
    const auto& src = levels[n];
    const auto& dst = levels[target];
    ZMat m(dst.ds.sum.coords(), src.ds.sum.coords());
    for (size_t si = 0; si < src.summands.size(); ++si) {
        const auto& [k, eta] = src.summands[si];
        Monotone f = compose_monotone(eta, theta);
        Monotone epi, mono;
        epi_mono_factor(f, k, epi, mono);
        const int kp = static_cast<int>(mono.size()) - 1;
        bool identity_mono = kp == k;
        bool miss_top = kp == k - 1;
        if (miss_top)
            for (int i = 0; i <= kp; ++i)
                if (mono[i] != i) {
                    miss_top = false;
                    break;
                }
        if (!identity_mono && !miss_top) continue;
        if (miss_top && !c.in_range(k - 1)) continue;
        auto it = dst.index.find({kp, epi});
        if (it == dst.index.end())
            throw invariant_violation("overline: factor summand missing");
        const auto& rmap = dst.ds.cmap[it->second];
        const auto& cmap = src.ds.cmap[si];
        if (identity_mono) {
            for (int j = 0; j < c.at(k).coords(); ++j) m.at(rmap[j], cmap[j]) += 1;
        } else {
            add_mapped(m, rmap, cmap, c.diff(k));
        }
    }
    return m;
}

}  // namespace

SimplicialAbGroup dold_kan_overline(const ChainComplex& c, int dim_bound) {
    if (c.lo < 0)
        throw invalid_input("overline: complex must be concentrated in nonnegative degrees");
    auto levels = overline_levels(c, dim_bound);
    std::vector<FinGenAb> groups(dim_bound + 1);
    std::vector<std::vector<ZMat>> face(dim_bound + 1), degen(dim_bound + 1);
    for (int n = 0; n <= dim_bound; ++n) {
        groups[n] = levels[n].ds.sum;
        if (n >= 1) {
            face[n].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                face[n][i] = overline_op(c, levels, n, coface(n, i), n - 1);
        }
        if (n < dim_bound) {
            degen[n].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                degen[n][i] = overline_op(c, levels, n, codegeneracy(n, i), n + 1);
        }
    }
    return make_simplicial_ab(dim_bound, std::move(groups), std::move(face), std::move(degen));
}

SimplicialGAb dold_kan_overline_g(const GComplex& c, int dim_bound) {
    SimplicialAbGroup ab = dold_kan_overline(underlying_complex(c), dim_bound);
    auto levels = overline_levels(underlying_complex(c), dim_bound);
    std::vector<std::vector<ZMat>> action(c.g.order());
    for (int a = 0; a < c.g.order(); ++a) {
        action[a].resize(dim_bound + 1);
        for (int n = 0; n <= dim_bound; ++n) {
            ZMat m(ab.groups[n].coords(), ab.groups[n].coords());
            for (size_t si = 0; si < levels[n].summands.size(); ++si) {
                const int k = levels[n].summands[si].first;
                add_mapped(m, levels[n].ds.cmap[si], levels[n].ds.cmap[si],
                           c.at(k).matrix(a));
            }
            action[a][n] = std::move(m);
        }
    }
    return make_simplicial_gab(std::move(ab), c.g, std::move(action));
}

int element_index(const FinGenAb& m, const ZVec& reduced) {
    long long idx = 0;
    for (size_t i = 0; i < m.torsion.size(); ++i)
        idx = idx * m.torsion[i].get_si() + reduced[i].get_si();
    return static_cast<int>(idx);
}

ZVec element_at(const FinGenAb& m, int index) {
    ZVec v(m.coords(), 0);
    for (int i = static_cast<int>(m.torsion.size()) - 1; i >= 0; --i) {
        const int t = static_cast<int>(m.torsion[i].get_si());
        v[i] = index % t;
        index = index / t;
    }
    return v;
}

GSpace to_gsimplicial(const SimplicialGAb& s, std::int64_t budget) {
    const int nb = s.ab.dim_bound;
    BudgetMeter meter(budget, "simplex_budget");
    SimplicialData d;
    d.dim_bound = nb;
    d.counts.resize(nb + 1);
    for (int n = 0; n <= nb; ++n) {
        if (s.ab.groups[n].rank > 0)
            throw invalid_input("pointwise simplicial set needs finite levels");
        const mpz_class ord = s.ab.groups[n].order();
        if (ord > budget)
            throw cap_exceeded("simplex_budget", "pointwise level too large");
        meter.charge(ord.get_si());
        d.counts[n] = static_cast<int>(ord.get_si());
    }
    d.faces.resize(nb + 1);
    d.degen.resize(nb + 1);
    for (int n = 0; n <= nb; ++n) {
        d.faces[n].resize(d.counts[n]);
        d.degen[n].resize(d.counts[n]);
        for (int i = 0; i < d.counts[n]; ++i) {
            const ZVec v = element_at(s.ab.groups[n], i);
            if (n >= 1) {
                d.faces[n][i].resize(n + 1);
                for (int k = 0; k <= n; ++k)
                    d.faces[n][i][k] = element_index(
                        s.ab.groups[n - 1], s.ab.groups[n - 1].reduce(s.ab.face[n][k].apply(v)));
            }
            if (n < nb) {
                d.degen[n][i].resize(n + 1);
                for (int k = 0; k <= n; ++k)
                    d.degen[n][i][k] = element_index(
                        s.ab.groups[n + 1], s.ab.groups[n + 1].reduce(s.ab.degen[n][k].apply(v)));
            }
        }
    }
    SimplicialSet space(std::move(d));
    std::vector<std::vector<std::vector<int>>> act(
        s.g.order(), std::vector<std::vector<int>>(nb + 1));
    for (int a = 0; a < s.g.order(); ++a)
        for (int n = 0; n <= nb; ++n) {
            act[a][n].resize(space.count(n));
            for (int i = 0; i < space.count(n); ++i)
                act[a][n][i] = element_index(
                    s.ab.groups[n],
                    s.ab.groups[n].reduce(s.action[a][n].apply(element_at(s.ab.groups[n], i))));
        }
    return GSpace(s.g, std::move(space), std::move(act));
}

GSpace em_gspace(const GModule& m, int n, int dim_bound, std::int64_t budget) {
    if (n < 0 || n > dim_bound) throw invalid_input("em_gspace: degree out of range");
    if (m.mod().rank > 0) throw invalid_input("em_gspace: module must be finite");
    return to_gsimplicial(dold_kan_overline_g(concentrated_gcomplex(m, n), dim_bound),
                          budget);
}

// ---- space homology ----

SpaceChains normalized_chains(const SimplicialSet& x) {
    SpaceChains sc;
    const int nb = x.dim_bound();
    sc.nondeg.resize(nb + 1);
    sc.pos.resize(nb + 1);
    for (int n = 0; n <= nb; ++n) {
        sc.pos[n].assign(x.count(n), -1);
        for (int i = 0; i < x.count(n); ++i)
            if (!x.degenerate(n, i)) {
                sc.pos[n][i] = static_cast<int>(sc.nondeg[n].size());
                sc.nondeg[n].push_back(i);
            }
    }
    std::vector<FinGenAb> groups(nb + 1);
    std::vector<ZMat> d(nb + 1);
    for (int n = 0; n <= nb; ++n) {
        groups[n].rank = static_cast<int>(sc.nondeg[n].size());
        if (n >= 1) {
            d[n] = ZMat(static_cast<int>(sc.nondeg[n - 1].size()),
                        static_cast<int>(sc.nondeg[n].size()));
            for (size_t j = 0; j < sc.nondeg[n].size(); ++j)
                for (int k = 0; k <= n; ++k) {
                    const int fk = x.face(n, sc.nondeg[n][j], k);
                    if (sc.pos[n - 1][fk] < 0) continue;
                    d[n].at(sc.pos[n - 1][fk], static_cast<int>(j)) += (k % 2 == 0) ? 1 : -1;
                }
        }
    }
    sc.complex = make_chain_complex(0, std::move(groups), std::move(d));
    return sc;
}

std::vector<FinGenAb> space_homology(const SimplicialSet& x) {
    return chain_homology(normalized_chains(x).complex);
}

// ---- hypercohomology ----

TotalDegreeLayout total_layout(const GComplex& c, int n) {
    TotalDegreeLayout l;
    const int ord = c.g.order();
    for (int q = c.lo; q <= c.hi(); ++q) {
        const int p = n + q;
        if (p < 0) continue;
        l.qs.push_back(q);
        l.offset.push_back(l.dim);
        const long long block = c.at(q).mod().coords() * ipow(ord, p);
        if (l.dim + block > 200000LL)
            throw cap_exceeded("enum_budget", "total complex too large");
        l.dim += static_cast<int>(block);
    }
    return l;
}

ZMat total_relations(const GComplex& c, int n) {
    const int ord = c.g.order();
    TotalDegreeLayout l = total_layout(c, n);
    int cols = 0;
    for (int q : l.qs)
        cols += static_cast<int>(c.at(q).mod().torsion.size() * ipow(ord, n + q));
    ZMat r(l.dim, cols);
    int col = 0;
    for (size_t bi = 0; bi < l.qs.size(); ++bi) {
        const int q = l.qs[bi];
        const auto& mod = c.at(q).mod();
        const int cc = mod.coords();
        const int t = static_cast<int>(mod.torsion.size());
        const long long blocks = ipow(ord, n + q);
        for (long long b = 0; b < blocks; ++b)
            for (int i = 0; i < t; ++i) {
                r.at(l.offset[bi] + static_cast<int>(b) * cc + i, col) = mod.torsion[i];
                ++col;
            }
    }
    return r;
}

ZMat total_differential(const GComplex& c, int n) {
    const int ord = c.g.order();
    TotalDegreeLayout src = total_layout(c, n);
    TotalDegreeLayout dst = total_layout(c, n + 1);
    auto dst_block = [&](int q) {
        for (size_t i = 0; i < dst.qs.size(); ++i)
            if (dst.qs[i] == q) return static_cast<int>(i);
        return -1;
    };
    ZMat m(dst.dim, src.dim);
    for (size_t bi = 0; bi < src.qs.size(); ++bi) {
        const int q = src.qs[bi];
        const int p = n + q;
        const int up = dst_block(q);
        if (up >= 0) add_block(m, dst.offset[up], src.offset[bi], bar_delta(c.at(q), p), 1);
        if (c.in_range(q - 1)) {
            const int side = dst_block(q - 1);
            if (side >= 0) {
                const int sign = (p % 2 == 0) ? 1 : -1;
                const int cs = c.at(q).mod().coords();
                const int cd = c.at(q - 1).mod().coords();
                const long long blocks = ipow(ord, p);
                for (long long b = 0; b < blocks; ++b)
                    add_block(m, dst.offset[side] + static_cast<int>(b) * cd,
                              src.offset[bi] + static_cast<int>(b) * cs, c.diff(q), sign);
            }
        }
    }
    return m;
}

Subquotient hypercohomology(const GComplex& c, int n) {
    TotalDegreeLayout l = total_layout(c, n);
    ZMat d_out = total_differential(c, n);
    TotalDegreeLayout prev = total_layout(c, n - 1);
    ZMat d_in = prev.dim > 0 ? total_differential(c, n - 1) : ZMat(l.dim, 0);
    return cochain_cohomology(l.dim, total_relations(c, n), d_in, d_out,
                              total_relations(c, n + 1));
}

// ---- long exact sequences ----

namespace {

ZMat total_map(const GComplex& src, const GComplex& dst, const std::vector<ZMat>& maps,
               int n) {
    const int ord = src.g.order();
    TotalDegreeLayout ls = total_layout(src, n);
    TotalDegreeLayout ld = total_layout(dst, n);
    ZMat m(ld.dim, ls.dim);
    for (size_t bi = 0; bi < ls.qs.size(); ++bi) {
        const int q = ls.qs[bi];
        const int p = n + q;
        const ZMat& f = maps[q - src.lo];
        const int cs = src.at(q).mod().coords();
        const int cd = dst.at(q).mod().coords();
        const long long blocks = ipow(ord, p);
        for (long long b = 0; b < blocks; ++b)
            add_block(m, ld.offset[bi] + static_cast<int>(b) * cd,
                      ls.offset[bi] + static_cast<int>(b) * cs, f, 1);
    }
    return m;
}

ZVec head(const ZVec& v, int k) { return ZVec(v.begin(), v.begin() + k); }

}  // namespace

SesOfGComplexes make_ses(GComplex a, GComplex b, GComplex c, std::vector<ZMat> f,
                         std::vector<ZMat> g) {
    SesOfGComplexes s{std::move(a), std::move(b), std::move(c), std::move(f), std::move(g)};
    if (s.a.g.table() != s.b.g.table() || s.b.g.table() != s.c.g.table())
        throw invalid_input("exact sequence: different groups");
    if (s.a.lo != s.b.lo || s.b.lo != s.c.lo || s.a.groups.size() != s.b.groups.size() ||
        s.b.groups.size() != s.c.groups.size())
        throw invalid_input("exact sequence: degree ranges differ");
    const int len = static_cast<int>(s.a.groups.size());
    if (static_cast<int>(s.f.size()) != len || static_cast<int>(s.g.size()) != len)
        throw invalid_input("exact sequence: one map per degree required");
    for (int i = 0; i < len; ++i) {
        const FinGenAb& ma = s.a.groups[i].mod();
        const FinGenAb& mb = s.b.groups[i].mod();
        const FinGenAb& mc = s.c.groups[i].mod();
        if (s.f[i].rows() != mb.coords() || s.f[i].cols() != ma.coords() ||
            s.g[i].rows() != mc.coords() || s.g[i].cols() != mb.coords())
            throw invalid_input("exact sequence: map shape mismatch");
        for (size_t j = 0; j < ma.torsion.size(); ++j) {
            ZVec v(ma.coords(), 0);
            v[j] = ma.torsion[j];
            if (!mb.is_zero_elem(s.f[i].apply(v)))
                throw invalid_input("exact sequence: first map does not respect torsion");
        }
        for (size_t j = 0; j < mb.torsion.size(); ++j) {
            ZVec v(mb.coords(), 0);
            v[j] = mb.torsion[j];
            if (!mc.is_zero_elem(s.g[i].apply(v)))
                throw invalid_input("exact sequence: second map does not respect torsion");
        }
        for (int e = 0; e < s.a.g.order(); ++e) {
            if (!same_module_map(ma, mb, s.f[i] * s.a.groups[i].matrix(e),
                                 s.b.groups[i].matrix(e) * s.f[i]))
                throw invalid_input("exact sequence: first map is not equivariant");
            if (!same_module_map(mb, mc, s.g[i] * s.b.groups[i].matrix(e),
                                 s.c.groups[i].matrix(e) * s.g[i]))
                throw invalid_input("exact sequence: second map is not equivariant");
        }
        if (i >= 1) {
            if (!same_module_map(s.a.groups[i].mod(), s.b.groups[i - 1].mod(),
                                 s.f[i - 1] * s.a.d[i], s.b.d[i] * s.f[i]))
                throw invalid_input("exact sequence: first map is not a chain map");
            if (!same_module_map(s.b.groups[i].mod(), s.c.groups[i - 1].mod(),
                                 s.g[i - 1] * s.b.d[i], s.c.d[i] * s.g[i]))
                throw invalid_input("exact sequence: second map is not a chain map");
        }
        // injectivity of f
        ZMat kb = kernel_basis(smith_normal_form(ZMat::hcat(s.f[i], torsion_relations(mb))));
        for (int j = 0; j < kb.cols(); ++j) {
            ZVec v(ma.coords());
            for (int r = 0; r < ma.coords(); ++r) v[r] = kb.at(r, j);
            if (!ma.is_zero_elem(v))
                throw invalid_input("exact sequence: first map is not injective");
        }
        // surjectivity of g
        SmithForm gs = smith_normal_form(ZMat::hcat(s.g[i], torsion_relations(mc)));
        for (int j = 0; j < mc.coords(); ++j) {
            ZVec e(mc.coords(), 0);
            e[j] = 1;
            if (!solve_linear(gs, e))
                throw invalid_input("exact sequence: second map is not surjective");
        }
        // g . f = 0
        if (!same_module_map(ma, mc, s.g[i] * s.f[i], ZMat(mc.coords(), ma.coords())))
            throw invalid_input("exact sequence: composite is not zero");
        // kernel of g inside image of f
        ZMat kg = kernel_basis(smith_normal_form(ZMat::hcat(s.g[i], torsion_relations(mc))));
        SmithForm fs = smith_normal_form(ZMat::hcat(s.f[i], torsion_relations(mb)));
        for (int j = 0; j < kg.cols(); ++j) {
            ZVec v(mb.coords());
            for (int r = 0; r < mb.coords(); ++r) v[r] = kg.at(r, j);
            if (!solve_linear(fs, v))
                throw invalid_input("exact sequence: middle level is not exact");
        }
    }
    return s;
}

LesReport les_check(const SesOfGComplexes& s, int n_lo, int n_hi) {
    LesReport rep;
    const int lo = n_lo - 1, hi = n_hi + 1;
    const int cnt = hi - lo + 1;
    std::vector<Subquotient> ha(cnt), hb(cnt), hc(cnt);
    std::vector<ZMat> fs(cnt), gs(cnt), del(cnt);  // del[i]: hc[i] -> ha[i+1]
    for (int i = 0; i < cnt; ++i) {
        const int n = lo + i;
        ha[i] = hypercohomology(s.a, n);
        hb[i] = hypercohomology(s.b, n);
        hc[i] = hypercohomology(s.c, n);
        fs[i] = induced_on_classes(ha[i], hb[i], total_map(s.a, s.b, s.f, n));
        gs[i] = induced_on_classes(hb[i], hc[i], total_map(s.b, s.c, s.g, n));
    }
    for (int i = 0; i + 1 < cnt; ++i) {
        const int n = lo + i;
        const ZMat gt = total_map(s.b, s.c, s.g, n);
        const ZMat ft = total_map(s.a, s.b, s.f, n + 1);
        const ZMat db = total_differential(s.b, n);
        const SmithForm gsn =
            smith_normal_form(ZMat::hcat(gt, total_relations(s.c, n)));
        const SmithForm fsn =
            smith_normal_form(ZMat::hcat(ft, total_relations(s.b, n + 1)));
        const int cc = hc[i].group().coords();
        del[i] = ZMat(ha[i + 1].group().coords(), cc);
        for (int j = 0; j < cc; ++j) {
            ZVec e(cc, 0);
            e[j] = 1;
            ZVec z = hc[i].lift(e);
            auto y = solve_linear(gsn, z);
            if (!y) throw invariant_violation("connecting map: lift failed");
            ZVec w = db.apply(head(*y, gt.cols()));
            auto x = solve_linear(fsn, w);
            if (!x) throw invariant_violation("connecting map: pullback failed");
            ZVec acl = ha[i + 1].project(head(*x, ft.cols()));
            for (int r = 0; r < ha[i + 1].group().coords(); ++r) del[i].at(r, j) = acl[r];
        }
    }

    auto kernel_gens = [&](const ZMat& phi, const FinGenAb& target, int src_coords) {
        ZMat kb = kernel_basis(smith_normal_form(ZMat::hcat(phi, torsion_relations(target))));
        ZMat out(src_coords, kb.cols());
        for (int i = 0; i < src_coords; ++i)
            for (int j = 0; j < kb.cols(); ++j) out.at(i, j) = kb.at(i, j);
        return out;
    };
    auto same_subgroup = [&](const FinGenAb& amb, const ZMat& x, const ZMat& y) {
        return subgroup_contains(amb, x, y) && subgroup_contains(amb, y, x);
    };

    for (int n = n_lo; n <= n_hi && rep.exact; ++n) {
        const int i = n - lo;
        rep.ha.push_back(ha[i].group());
        rep.hb.push_back(hb[i].group());
        rep.hc.push_back(hc[i].group());
        // at the first group: image of the connecting map vs kernel of f
        {
            ZMat ker = kernel_gens(fs[i], hb[i].group(), ha[i].group().coords());
            if (!same_subgroup(ha[i].group(), del[i - 1], ker)) {
                rep.exact = false;
                rep.fail_degree = n;
                rep.fail_slot = "first";
                break;
            }
        }
        // at the middle group
        {
            ZMat ker = kernel_gens(gs[i], hc[i].group(), hb[i].group().coords());
            if (!same_subgroup(hb[i].group(), fs[i], ker)) {
                rep.exact = false;
                rep.fail_degree = n;
                rep.fail_slot = "middle";
                break;
            }
        }
        // at the third group: image of g vs kernel of the connecting map
        {
            ZMat ker = kernel_gens(del[i], ha[i + 1].group(), hc[i].group().coords());
            if (!same_subgroup(hc[i].group(), gs[i], ker)) {
                rep.exact = false;
                rep.fail_degree = n;
                rep.fail_slot = "third";
                break;
            }
        }
    }
    return rep;
}

}  // namespace eqsimp
