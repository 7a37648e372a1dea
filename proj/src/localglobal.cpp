#include "eqsimp/localglobal.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "eqsimp/config.hpp"
#include "eqsimp/hfp.hpp"

namespace eqsimp {

namespace {

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order() == b.order() && a.identity() == b.identity() && a.table() == b.table();
}

void check_subset(const std::vector<int>& inner, const std::vector<int>& outer,
                  const std::string& what) {
    for (int x : inner)
        if (!std::binary_search(outer.begin(), outer.end(), x))
            throw invalid_input(what + " is not contained in the decomposition subgroup");
}

std::vector<int> to_subgroup_coords(const SubgroupGroup& sub, const std::vector<int>& elems) {
    std::vector<int> out;
    out.reserve(elems.size());
    for (int x : elems) {
        if (x < 0 || x >= static_cast<int>(sub.index_in.size()) || sub.index_in[x] < 0)
            throw invalid_input("element lies outside the subgroup");
        out.push_back(sub.index_in[x]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// maps of the subgroup's translation space indexed against a lookup table
std::map<SimplicialMap, int> map_lookup(const std::vector<SimplicialMap>& maps) {
    std::map<SimplicialMap, int> pos;
    for (int i = 0; i < static_cast<int>(maps.size()); ++i) pos.emplace(maps[i], i);
    return pos;
}

}  // namespace

void validate_place_family(const PlaceFamily& f) {
    if (f.group.order() == 0) throw invalid_input("place family needs a group");
    if (f.ramified.size() != f.places.size())
        throw invalid_input("ramified mask length must match the place count");
    for (const Place& p : f.places) {
        if (!is_subgroup(f.group, p.decomposition))
            throw invalid_input("decomposition entry is not a subgroup");
        if (!is_subgroup(f.group, p.inertia))
            throw invalid_input("inertia entry is not a subgroup");
        check_subset(p.inertia, p.decomposition, "inertia subgroup");
        for (int h : p.decomposition)
            for (int i : p.inertia)
                if (!std::binary_search(p.inertia.begin(), p.inertia.end(),
                                        f.group.op(f.group.op(h, i), f.group.inverse(h))))
                    throw invalid_input("inertia subgroup is not normal in its place");
    }
}

GSpace restrict_gspace(const GSpace& x, const SubgroupGroup& h) {
    const FiniteGroup& g = x.group();
    for (int a = 0; a < h.group.order(); ++a) {
        if (h.embed[a] < 0 || h.embed[a] >= g.order())
            throw invalid_input("subgroup embedding is out of range");
        for (int b = 0; b < h.group.order(); ++b)
            if (g.op(h.embed[a], h.embed[b]) != h.embed[h.group.op(a, b)])
                throw invalid_input("subgroup embedding does not respect the product");
    }
    std::vector<std::vector<std::vector<int>>> action(h.group.order());
    for (int a = 0; a < h.group.order(); ++a) action[a] = x.action()[h.embed[a]];
    return GSpace(h.group, x.space(), std::move(action));
}

SimplicialMap restrict_translation_map(const FiniteGroup& ambient, const SubgroupGroup& h,
                                       const SimplicialMap& f) {
    SimplicialMap r;
    r.values.resize(f.values.size());
    for (int n = 0; n < static_cast<int>(f.values.size()); ++n) {
        long long want = 1;
        for (int k = 0; k <= n; ++k) want *= ambient.order();
        if (static_cast<long long>(f.values[n].size()) != want)
            throw invalid_input("map is not defined on the full translation space");
        long long cnt = 1;
        for (int k = 0; k <= n; ++k) cnt *= h.group.order();
        r.values[n].resize(cnt);
        for (long long j = 0; j < cnt; ++j) {
            std::vector<int> tup = eg_tuple(h.group.order(), n, static_cast<int>(j));
            for (int& e : tup) e = h.embed[e];
            r.values[n][j] = f.values[n][eg_index(ambient.order(), tup)];
        }
    }
    return r;
}

LocalClasses local_classes(const GSpace& x, const std::vector<int>& subgroup, int level,
                           std::int64_t budget) {
    if (!is_subgroup(x.group(), subgroup)) throw invalid_input("not a subgroup");
    LocalClasses out;
    out.sub = subgroup_as_group(x.group(), subgroup);
    out.space = restrict_gspace(x, out.sub);
    out.classes = hfp_bruteforce(out.space, level, budget);
    return out;
}

int restrict_class(const GSpace& x, const SimplicialMap& f, const LocalClasses& loc) {
    const SimplicialMap r = restrict_translation_map(x.group(), loc.sub, f);
    for (int i = 0; i < static_cast<int>(loc.classes.maps.size()); ++i)
        if (loc.classes.maps[i] == r) return loc.classes.class_of[i];
    throw invalid_input("restriction is not among the enumerated maps");
}

UnramifiedResult unramified_classes(const GSpace& x, const std::vector<int>& inertia,
                                    const MapClasses& ambient_classes, int level,
                                    std::int64_t budget) {
    const FiniteGroup& h = x.group();
    if (!is_subgroup(h, inertia)) throw invalid_input("inertia is not a subgroup");
    for (int a = 0; a < h.order(); ++a)
        for (int i : inertia)
            if (!std::binary_search(inertia.begin(), inertia.end(),
                                    h.op(h.op(a, i), h.inverse(a))))
                throw invalid_input("inertia subgroup is not normal");

    UnramifiedResult out;
    out.fixed = fixed_points(x, inertia);
    out.quo = quotient_group(h, inertia);
    out.fixed_space = subcomplex_gspace(x, out.fixed, out.quo.group, out.quo.section);
    out.inner = hfp_bruteforce(out.fixed_space, level, budget);

    const auto pos = map_lookup(ambient_classes.maps);
    const int qo = out.quo.group.order();
    out.forward.assign(out.inner.reps.size(), -1);
    for (int m = 0; m < static_cast<int>(out.inner.maps.size()); ++m) {
        const SimplicialMap& f = out.inner.maps[m];
        SimplicialMap g;
        g.values.resize(f.values.size());
        for (int n = 0; n < static_cast<int>(f.values.size()); ++n) {
            long long cnt = 1;
            for (int k = 0; k <= n; ++k) cnt *= h.order();
            g.values[n].resize(cnt);
            for (long long j = 0; j < cnt; ++j) {
                std::vector<int> tup = eg_tuple(h.order(), n, static_cast<int>(j));
                for (int& e : tup) e = out.quo.proj[e];
                const int v = f.values[n][eg_index(qo, tup)];
                g.values[n][j] = out.fixed.old_index[n][v];
            }
        }
        const auto it = pos.find(g);
        if (it == pos.end())
            throw invariant_violation("image of an inner map is not an enumerated map");
        const int cls = ambient_classes.class_of[it->second];
        int& slot = out.forward[out.inner.class_of[m]];
        if (slot < 0)
            slot = cls;
        else if (slot != cls)
            throw invariant_violation("inner class has an ill-defined image class");
    }
    out.image = out.forward;
    std::sort(out.image.begin(), out.image.end());
    out.image.erase(std::unique(out.image.begin(), out.image.end()), out.image.end());
    return out;
}

LocalizationData localize(const GSpace& x, const PlaceFamily& family, int level,
                          std::int64_t budget) {
    validate_place_family(family);
    if (!same_group(x.group(), family.group))
        throw invalid_input("family group must match the acting group");
    if (level < 1 || level > x.space().dim_bound())
        throw invalid_input("localization level is out of range");

    LocalizationData d;
    d.family = family;
    d.level = level;
    d.global = hfp_bruteforce(x, level, budget);

    BudgetMeter meter(budget, "enum_budget");
    for (const Place& p : family.places) {
        LocalClasses loc = local_classes(x, p.decomposition, level, budget);
        const std::vector<int> inertia_h = to_subgroup_coords(loc.sub, p.inertia);
        d.unram.push_back(
            unramified_classes(loc.space, inertia_h, loc.classes, level, budget));
        d.local.push_back(std::move(loc));
    }

    d.loc_of.assign(d.global.reps.size(), std::vector<int>(family.places.size(), -1));
    for (int v = 0; v < static_cast<int>(family.places.size()); ++v) {
        const auto pos = map_lookup(d.local[v].classes.maps);
        for (int m = 0; m < static_cast<int>(d.global.maps.size()); ++m) {
            meter.charge();
            const SimplicialMap r =
                restrict_translation_map(x.group(), d.local[v].sub, d.global.maps[m]);
            const auto it = pos.find(r);
            if (it == pos.end())
                throw invariant_violation("restriction is not an enumerated local map");
            const int cls = d.local[v].classes.class_of[it->second];
            int& slot = d.loc_of[d.global.class_of[m]][v];
            if (slot < 0)
                slot = cls;
            else if (slot != cls)
                throw invariant_violation("global class has an ill-defined restriction");
        }
    }
    return d;
}

void validate_adelic_tuple(const LocalizationData& d, const AdelicClassTuple& t) {
    const int np = static_cast<int>(d.family.places.size());
    if (static_cast<int>(t.local_class.size()) != np ||
        static_cast<int>(t.unramified_witness.size()) != np)
        throw invalid_input("tuple length must match the place count");
    for (int v = 0; v < np; ++v) {
        const int c = t.local_class[v];
        if (c < 0 || c >= static_cast<int>(d.local[v].classes.reps.size()))
            throw invalid_input("local class is out of range");
        if (d.family.ramified[v]) {
            if (t.unramified_witness[v] != -1)
                throw invalid_input("ramified place must not carry a witness");
        } else {
            const int w = t.unramified_witness[v];
            if (w < 0 || w >= static_cast<int>(d.unram[v].forward.size()) ||
                d.unram[v].forward[w] != c)
                throw invalid_input("local class lacks an unramified witness");
        }
    }
}

std::vector<AdelicClassTuple> adelic_set(const LocalizationData& d, std::int64_t budget) {
    const int np = static_cast<int>(d.family.places.size());
    std::vector<std::vector<int>> allowed(np);
    for (int v = 0; v < np; ++v) {
        if (d.family.ramified[v]) {
            allowed[v].resize(d.local[v].classes.reps.size());
            for (int c = 0; c < static_cast<int>(allowed[v].size()); ++c) allowed[v][c] = c;
        } else {
            allowed[v] = d.unram[v].image;
        }
    }
    auto witness_for = [&](int v, int cls) -> int {
        if (d.family.ramified[v]) return -1;
        for (int w = 0; w < static_cast<int>(d.unram[v].forward.size()); ++w)
            if (d.unram[v].forward[w] == cls) return w;
        return -1;
    };

    BudgetMeter meter(budget, "enum_budget");
    std::vector<AdelicClassTuple> out;
    std::vector<int> pick(np, 0);
    while (true) {
        meter.charge();
        AdelicClassTuple t;
        t.local_class.resize(np);
        t.unramified_witness.resize(np);
        bool ok = true;
        for (int v = 0; v < np; ++v) {
            if (allowed[v].empty()) {
                ok = false;
                break;
            }
            t.local_class[v] = allowed[v][pick[v]];
            t.unramified_witness[v] = witness_for(v, t.local_class[v]);
        }
        if (!ok) break;
        validate_adelic_tuple(d, t);
        out.push_back(std::move(t));
        int v = np - 1;
        while (v >= 0 && ++pick[v] == static_cast<int>(allowed[v].size())) pick[v--] = 0;
        if (v < 0) break;
    }
    return out;
}

AdelicClassTuple loc_map(const LocalizationData& d, int global_class) {
    if (global_class < 0 || global_class >= static_cast<int>(d.global.reps.size()))
        throw invalid_input("global class is out of range");
    const int np = static_cast<int>(d.family.places.size());
    AdelicClassTuple t;
    t.local_class = d.loc_of[global_class];
    t.unramified_witness.assign(np, -1);
    for (int v = 0; v < np; ++v) {
        if (d.family.ramified[v]) continue;
        for (int w = 0; w < static_cast<int>(d.unram[v].forward.size()); ++w)
            if (d.unram[v].forward[w] == t.local_class[v]) {
                t.unramified_witness[v] = w;
                break;
            }
    }
    return t;
}

std::vector<int> loc_fiber(const LocalizationData& d, const AdelicClassTuple& y) {
    const int np = static_cast<int>(d.family.places.size());
    if (static_cast<int>(y.local_class.size()) != np)
        throw invalid_input("tuple length must match the place count");
    for (int v = 0; v < np; ++v)
        if (y.local_class[v] < 0 ||
            y.local_class[v] >= static_cast<int>(d.local[v].classes.reps.size()))
            throw invalid_input("local class is out of range");
    std::vector<int> out;
    for (int g = 0; g < static_cast<int>(d.global.reps.size()); ++g)
        if (d.loc_of[g] == y.local_class) out.push_back(g);
    return out;
}

std::vector<SurvivingPoint> obstruction_set(const LocalizationData& d,
                                            const std::vector<AdelicClassTuple>& points) {
    std::vector<SurvivingPoint> out;
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
        validate_adelic_tuple(d, points[i]);
        const std::vector<int> fib = loc_fiber(d, points[i]);
        if (!fib.empty()) out.push_back({i, fib.front()});
    }
    return out;
}

Subquotient kernel_subquotient(const FinGenAb& a, const FinGenAb& b, const ZMat& f) {
    if (f.rows() != b.coords() || f.cols() != a.coords())
        throw invalid_input("kernel map shape does not match the groups");
    const ZMat rel_a = torsion_relations(a);
    if (b.coords() == 0 || a.coords() == 0)
        return Subquotient(a.coords(), ZMat::identity(a.coords()), rel_a);
    const ZMat joint = ZMat::hcat(f, torsion_relations(b));
    const ZMat ker = kernel_basis(smith_normal_form(joint));
    ZMat num(a.coords(), ker.cols() + rel_a.cols());
    for (int j = 0; j < ker.cols(); ++j)
        for (int i = 0; i < a.coords(); ++i) num.at(i, j) = ker.at(i, j);
    for (int j = 0; j < rel_a.cols(); ++j)
        for (int i = 0; i < a.coords(); ++i) num.at(i, ker.cols() + j) = rel_a.at(i, j);
    return Subquotient(a.coords(), num, rel_a);
}

ShaResult sha_kernel(const GModule& m, int n, const PlaceFamily& family,
                     std::int64_t budget) {
    validate_place_family(family);
    if (!same_group(m.glen(), family.group))
        throw invalid_input("family group must match the module group");
    if (n < 0) throw invalid_input("cohomology degree must be nonnegative");

    const int mc = m.mod().coords();
    BudgetMeter meter(budget, "enum_budget");
    long long blocks = 1;
    for (int k = 0; k <= n; ++k) {
        blocks *= family.group.order();
        meter.charge(blocks * std::max(mc, 1));
    }

    ShaResult out;
    BarComplex bar(m, n + 1);
    out.global = bar.cohomology(n);

    DirectSum joint_target;
    std::vector<const FinGenAb*> parts;
    std::vector<FinGenAb> local_groups;
    for (const Place& p : family.places) {
        const SubgroupGroup sub = subgroup_as_group(family.group, p.decomposition);
        std::vector<ZMat> act;
        act.reserve(sub.group.order());
        for (int a = 0; a < sub.group.order(); ++a) act.push_back(m.matrix(sub.embed[a]));
        const GModule mh(sub.group, m.mod(), std::move(act));
        BarComplex barh(mh, n + 1);
        Subquotient localq = barh.cohomology(n);

        ZMat res(barh.cochain_dim(n), bar.cochain_dim(n));
        for (long long b = 0; b < barh.block_count(n); ++b) {
            meter.charge(std::max(mc, 1));
            std::vector<int> tup = barh.tuple_of(static_cast<int>(b), n);
            for (int& e : tup) e = sub.embed[e];
            const long long bg = bar.block_of(tup);
            for (int c = 0; c < mc; ++c)
                res.at(static_cast<int>(b) * mc + c, static_cast<int>(bg) * mc + c) = 1;
        }
        out.restriction.push_back(induced_on_classes(out.global, localq, res));
        out.local.push_back(std::move(localq));
        local_groups.push_back(out.local.back().group());
    }
    for (const FinGenAb& g : local_groups) parts.push_back(&g);
    joint_target = direct_sum(parts);

    ZMat stacked(joint_target.sum.coords(), out.global.group().coords());
    for (int v = 0; v < static_cast<int>(family.places.size()); ++v) {
        std::vector<int> cols(out.global.group().coords());
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) cols[j] = j;
        add_mapped(stacked, joint_target.cmap[v], cols, out.restriction[v]);
    }
    out.kernel = kernel_subquotient(out.global.group(), joint_target.sum, stacked);

    for (int i = 0; i < out.kernel.group().coords(); ++i) {
        ZVec e = out.kernel.group().zero();
        e[i] = 1;
        out.cocycle_reps.push_back(out.global.lift(out.kernel.lift(e)));
    }
    return out;
}

void validate_tower(const Tower& t) {
    if (t.sizes.empty()) {
        if (!t.maps.empty()) throw invalid_input("empty tower must have no maps");
        return;
    }
    if (t.maps.size() + 1 != t.sizes.size())
        throw invalid_input("tower needs one map per adjacent pair");
    for (int s : t.sizes)
        if (s < 0) throw invalid_input("tower sizes must be nonnegative");
    for (int k = 0; k < static_cast<int>(t.maps.size()); ++k) {
        if (static_cast<int>(t.maps[k].size()) != t.sizes[k + 1])
            throw invalid_input("tower map length must match its source");
        for (int v : t.maps[k])
            if (v < 0 || v >= t.sizes[k]) throw invalid_input("tower map value out of range");
    }
}

TowerLimit inverse_limit_tower(const Tower& t, std::int64_t budget) {
    validate_tower(t);
    TowerLimit out;
    if (t.sizes.empty()) {
        out.threads = {{}};
        out.nonempty = true;
        return out;
    }
    const int len = static_cast<int>(t.sizes.size());
    BudgetMeter meter(budget, "enum_budget");
    for (int top = 0; top < t.sizes.back(); ++top) {
        meter.charge();
        std::vector<int> thread(len);
        thread[len - 1] = top;
        for (int k = len - 2; k >= 0; --k) thread[k] = t.maps[k][thread[k + 1]];
        out.threads.push_back(std::move(thread));
    }
    std::sort(out.threads.begin(), out.threads.end());
    out.nonempty = !out.threads.empty();
    if (out.nonempty) out.witness = out.threads.front();
    return out;
}

}  // namespace eqsimp
