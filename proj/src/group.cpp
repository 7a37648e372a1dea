#include "eqsimp/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace eqsimp {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul, int identity,
                         std::vector<std::string> names)
    : mul_(std::move(mul)), id_(identity), names_(std::move(names)) {
    const int n = static_cast<int>(mul_.size());
    if (n == 0) throw invalid_input("group: empty multiplication table");
    if (id_ < 0 || id_ >= n) throw invalid_input("group: identity index out of range");
    for (const auto& row : mul_) {
        if (static_cast<int>(row.size()) != n)
            throw invalid_input("group: ragged multiplication table");
        for (int v : row)
            if (v < 0 || v >= n) throw invalid_input("group: table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (mul_[id_][a] != a || mul_[a][id_] != a)
            throw invalid_input("group: identity law fails");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul_[a][b] == id_ && mul_[b][a] == id_) { inv_[a] = b; break; }
        if (inv_[a] < 0) throw invalid_input("group: element without inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    throw invalid_input("group: associativity fails");
    if (names_.empty()) {
        names_.resize(n);
        for (int a = 0; a < n; ++a) names_[a] = "e" + std::to_string(a);
    }
    if (static_cast<int>(names_.size()) != n)
        throw invalid_input("group: name count mismatch");
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != id_) { x = op(x, a); ++k; }
    return k;
}

bool FiniteGroup::is_abelian() const {
    const int n = order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

int FiniteGroup::power(int a, long long k) const {
    int ord = element_order(a);
    long long r = ((k % ord) + ord) % ord;
    int x = id_;
    for (long long i = 0; i < r; ++i) x = op(x, a);
    return x;
}

std::vector<int> FiniteGroup::generating_set() const {
    std::vector<int> gens;
    std::vector<char> got(order(), 0);
    got[id_] = 1;
    int covered = 1;
    while (covered < order()) {
        int pick = -1;
        for (int a = 0; a < order(); ++a)
            if (!got[a]) { pick = a; break; }
        gens.push_back(pick);
        // close
        std::vector<int> frontier{pick};
        got[pick] = 1;
        ++covered;
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier)
                for (int a = 0; a < order(); ++a)
                    if (got[a]) {
                        for (int y : {op(x, a), op(a, x)})
                            if (!got[y]) { got[y] = 1; ++covered; next.push_back(y); }
                    }
            frontier = std::move(next);
        }
    }
    return gens;
}

FiniteGroup trivial_group() {
    return FiniteGroup({{0}}, 0, {"1"});
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw invalid_input("cyclic_group: n must be positive");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) {
        names[a] = "r" + std::to_string(a);
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    }
    names[0] = "1";
    return FiniteGroup(std::move(mul), 0, std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int n = a.order(), m = b.order();
    auto enc = [m](int x, int y) { return x * m + y; };
    std::vector<std::vector<int>> mul(n * m, std::vector<int>(n * m));
    std::vector<std::string> names(n * m);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < m; ++y) {
            names[enc(x, y)] = "(" + a.name(x) + "," + b.name(y) + ")";
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < m; ++v)
                    mul[enc(x, y)][enc(u, v)] = enc(a.op(x, u), b.op(y, v));
        }
    return FiniteGroup(std::move(mul), enc(a.identity(), b.identity()), std::move(names));
}

namespace {

std::vector<std::vector<int>> perms_of(int n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::string perm_name(const std::vector<int>& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i]);
    }
    return s + "]";
}

FiniteGroup group_from_perm_list(std::vector<std::vector<int>> elems) {
    std::sort(elems.begin(), elems.end());
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    const int n = static_cast<int>(elems.size());
    const int m = static_cast<int>(elems[0].size());
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    int id = -1;
    std::vector<int> ident(m);
    std::iota(ident.begin(), ident.end(), 0);
    for (int i = 0; i < n; ++i) {
        names[i] = perm_name(elems[i]);
        if (elems[i] == ident) id = i;
        for (int j = 0; j < n; ++j) {
            std::vector<int> comp(m);
            for (int x = 0; x < m; ++x) comp[x] = elems[i][elems[j][x]];
            auto it = index.find(comp);
            if (it == index.end())
                throw invalid_input("permutation set not closed under composition");
            mul[i][j] = it->second;
        }
    }
    if (id < 0) throw invalid_input("permutation set lacks the identity");
    return FiniteGroup(std::move(mul), id, std::move(names));
}

}  // namespace

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 5) throw invalid_input("symmetric_group: supported degrees 1..5");
    return group_from_perm_list(perms_of(n));
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw invalid_input("dihedral_group: n must be positive");
    // rotations r^k, reflections s r^k acting on Z/n
    std::vector<std::vector<int>> elems;
    for (int k = 0; k < n; ++k) {
        std::vector<int> rot(n), ref(n);
        for (int x = 0; x < n; ++x) {
            rot[x] = (x + k) % n;
            ref[x] = ((k - x) % n + n) % n;
        }
        elems.push_back(rot);
        if (n > 2) elems.push_back(ref);
    }
    if (n <= 2) {
        // the reflection action coincides with a rotation; use an explicit
        // product model instead
        return n == 1 ? cyclic_group(2)
                      : direct_product(cyclic_group(2), cyclic_group(2));
    }
    return group_from_perm_list(std::move(elems));
}

FiniteGroup quaternion_group() {
    // {1,-1,i,-i,j,-j,k,-k} indexed 0..7
    const int P = 0, M = 1;  // sign
    auto enc = [](int axis, int sign) { return axis * 2 + sign; };  // axis 0=1,1=i,2=j,3=k
    auto mulq = [&](int a, int b) {
        int ax = a / 2, sa = a % 2, bx = b / 2, sb = b % 2;
        static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {{P, P, P, P}, {P, M, P, M}, {P, M, M, P}, {P, P, M, M}};
        // sign[i][j]: sign of basis product e_i e_j (e.g. i*i=-1, i*j=k, j*i=-k)
        static const int sg2[4][4] = {{P, P, P, P}, {P, M, P, M}, {P, M, M, P}, {P, P, M, M}};
        (void)sign;
        int s = (sa + sb + sg2[ax][bx]) % 2;
        return enc(axis[ax][bx], s);
    };
    std::vector<std::vector<int>> mul(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) mul[a][b] = mulq(a, b);
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return FiniteGroup(std::move(mul), 0, std::move(names));
}

FiniteGroup permutation_group(int m, const std::vector<std::vector<int>>& gens,
                              std::int64_t order_cap) {
    std::set<std::vector<int>> seen;
    std::vector<int> ident(m);
    std::iota(ident.begin(), ident.end(), 0);
    seen.insert(ident);
    std::vector<std::vector<int>> frontier{ident};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                std::vector<int> q(m);
                for (int x = 0; x < m; ++x) q[x] = g[p[x]];
                if (seen.insert(q).second) {
                    if (static_cast<std::int64_t>(seen.size()) > order_cap)
                        throw cap_exceeded("order_cap", "permutation_group: closure exceeds order cap");
                    next.push_back(std::move(q));
                }
            }
        frontier = std::move(next);
    }
    return group_from_perm_list(std::vector<std::vector<int>>(seen.begin(), seen.end()));
}

std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens) {
    std::set<int> have{g.identity()};
    std::vector<int> frontier{g.identity()};
    for (int x : gens)
        if (have.insert(x).second) frontier.push_back(x);
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int y : std::vector<int>(have.begin(), have.end())) {
                for (int z : {g.op(x, y), g.op(y, x), g.inverse(x)})
                    if (have.insert(z).second) next.push_back(z);
            }
        frontier = std::move(next);
    }
    return std::vector<int>(have.begin(), have.end());
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
    std::set<int> s(h.begin(), h.end());
    if (!s.count(g.identity())) return false;
    for (int a : h)
        for (int b : h)
            if (!s.count(g.op(a, b))) return false;
    for (int a : h)
        if (!s.count(g.inverse(a))) return false;
    return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& h) {
    std::set<int> s(h.begin(), h.end());
    for (int x = 0; x < g.order(); ++x)
        for (int a : h)
            if (!s.count(g.op(g.op(x, a), g.inverse(x)))) return false;
    return true;
}

std::vector<int> normal_closure(const FiniteGroup& g, const std::vector<int>& seed) {
    std::vector<int> gens;
    for (int a : seed)
        for (int x = 0; x < g.order(); ++x)
            gens.push_back(g.op(g.op(x, a), g.inverse(x)));
    return subgroup_closure(g, gens);
}

QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<int>& k) {
    if (!is_subgroup(g, k) || !is_normal(g, k))
        throw invalid_input("quotient_group: subgroup is not normal");
    std::set<int> ks(k.begin(), k.end());
    const int n = g.order();
    std::vector<int> coset(n, -1);
    std::vector<int> reps;
    for (int a = 0; a < n; ++a) {
        if (coset[a] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int x : k) coset[g.op(a, x)] = c;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> mul(q, std::vector<int>(q));
    std::vector<std::string> names(q);
    for (int i = 0; i < q; ++i) {
        names[i] = "[" + g.name(reps[i]) + "]";
        for (int j = 0; j < q; ++j) mul[i][j] = coset[g.op(reps[i], reps[j])];
    }
    QuotientGroup out;
    out.group = FiniteGroup(std::move(mul), coset[g.identity()], std::move(names));
    out.proj = std::move(coset);
    out.section = std::move(reps);
    return out;
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& h) {
    if (!is_subgroup(g, h)) throw invalid_input("subgroup_as_group: not a subgroup");
    std::vector<int> embed(h.begin(), h.end());
    std::sort(embed.begin(), embed.end());
    std::vector<int> index(g.order(), -1);
    for (size_t i = 0; i < embed.size(); ++i) index[embed[i]] = static_cast<int>(i);
    const int m = static_cast<int>(embed.size());
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) {
        names[i] = g.name(embed[i]);
        for (int j = 0; j < m; ++j) mul[i][j] = index[g.op(embed[i], embed[j])];
    }
    SubgroupGroup out;
    out.group = FiniteGroup(std::move(mul), index[g.identity()], std::move(names));
    out.embed = std::move(embed);
    out.index_in = std::move(index);
    return out;
}

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst,
                     const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != src.order()) return false;
    for (int a = 0; a < src.order(); ++a)
        for (int b = 0; b < src.order(); ++b)
            if (map[src.op(a, b)] != dst.op(map[a], map[b])) return false;
    return true;
}

namespace {

// Extend a partial map on generators to the whole group by closing products;
// returns the full map or nullopt on contradiction.
std::optional<std::vector<int>> close_hom(const FiniteGroup& src, const FiniteGroup& dst,
                                          const std::vector<int>& gens,
                                          const std::vector<int>& images) {
    std::vector<int> map(src.order(), -1);
    map[src.identity()] = dst.identity();
    std::vector<int> known{src.identity()};
    for (size_t i = 0; i < gens.size(); ++i) {
        if (map[gens[i]] >= 0) {
            if (map[gens[i]] != images[i]) return std::nullopt;
            continue;
        }
        map[gens[i]] = images[i];
        known.push_back(gens[i]);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<int> snapshot = known;
        for (int a : snapshot)
            for (int b : snapshot) {
                int ab = src.op(a, b);
                int im = dst.op(map[a], map[b]);
                if (map[ab] < 0) {
                    map[ab] = im;
                    known.push_back(ab);
                    grew = true;
                } else if (map[ab] != im) {
                    return std::nullopt;
                }
            }
    }
    for (int a = 0; a < src.order(); ++a)
        if (map[a] < 0) throw invariant_violation("close_hom: generators do not generate");
    if (!is_homomorphism(src, dst, map)) return std::nullopt;
    return map;
}

}  // namespace

std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& src,
                                                const FiniteGroup& dst,
                                                std::int64_t budget) {
    std::vector<int> gens = src.generating_set();
    if (gens.empty()) return {std::vector<int>(src.order(), dst.identity())};
    BudgetMeter meter(budget, "enum_budget");
    std::vector<std::vector<int>> out;
    std::vector<int> images(gens.size(), 0);
    // pre-filter candidate images by element-order divisibility
    std::vector<std::vector<int>> cand(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int o = src.element_order(gens[i]);
        for (int y = 0; y < dst.order(); ++y)
            if (o % dst.element_order(y) == 0) cand[i].push_back(y);
    }
    std::vector<size_t> pos(gens.size(), 0);
    size_t depth = 0;
    while (true) {
        if (pos[depth] == cand[depth].size()) {
            if (depth == 0) break;
            pos[depth] = 0;
            --depth;
            ++pos[depth];
            continue;
        }
        images[depth] = cand[depth][pos[depth]];
        meter.charge();
        if (depth + 1 < gens.size()) {
            ++depth;
            continue;
        }
        if (auto m = close_hom(src, dst, gens, images)) out.push_back(*m);
        ++pos[depth];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return std::nullopt;
    std::vector<int> gens = a.generating_set();
    if (gens.empty()) return std::vector<int>{b.identity()};
    std::vector<std::vector<int>> cand(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int o = a.element_order(gens[i]);
        for (int y = 0; y < b.order(); ++y)
            if (b.element_order(y) == o) cand[i].push_back(y);
    }
    std::vector<int> images(gens.size(), 0);
    std::vector<size_t> pos(gens.size(), 0);
    size_t depth = 0;
    while (true) {
        if (pos[depth] == cand[depth].size()) {
            if (depth == 0) return std::nullopt;
            pos[depth] = 0;
            --depth;
            ++pos[depth];
            continue;
        }
        images[depth] = cand[depth][pos[depth]];
        if (depth + 1 < gens.size()) {
            ++depth;
            continue;
        }
        if (auto m = close_hom(a, b, gens, images)) {
            std::vector<char> hit(b.order(), 0);
            bool bij = true;
            for (int v : *m) {
                if (hit[v]) { bij = false; break; }
                hit[v] = 1;
            }
            if (bij) return m;
        }
        ++pos[depth];
    }
}

std::vector<std::vector<std::vector<int>>> homomorphisms_up_to_conjugacy(
    const FiniteGroup& src, const FiniteGroup& dst, std::int64_t budget) {
    auto homs = all_homomorphisms(src, dst, budget);
    std::vector<char> used(homs.size(), 0);
    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < homs.size(); ++i) index[homs[i]] = i;
    std::vector<std::vector<std::vector<int>>> classes;
    for (size_t i = 0; i < homs.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::vector<int>> cls;
        for (int t = 0; t < dst.order(); ++t) {
            std::vector<int> conj(src.order());
            for (int x = 0; x < src.order(); ++x)
                conj[x] = dst.op(dst.op(t, homs[i][x]), dst.inverse(t));
            size_t j = index.at(conj);
            if (!used[j]) {
                used[j] = 1;
                cls.push_back(std::move(conj));
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

GroupOnGroup::GroupOnGroup(const FiniteGroup& g, const FiniteGroup& a,
                           std::vector<std::vector<int>> maps)
    : maps_(std::move(maps)) {
    if (static_cast<int>(maps_.size()) != g.order())
        throw invalid_input("GroupOnGroup: one map per group element required");
    for (const auto& m : maps_) {
        if (static_cast<int>(m.size()) != a.order())
            throw invalid_input("GroupOnGroup: map size mismatch");
        std::vector<char> hit(a.order(), 0);
        for (int v : m) {
            if (v < 0 || v >= a.order() || hit[v])
                throw invalid_input("GroupOnGroup: map is not a bijection");
            hit[v] = 1;
        }
        for (int x = 0; x < a.order(); ++x)
            for (int y = 0; y < a.order(); ++y)
                if (m[a.op(x, y)] != a.op(m[x], m[y]))
                    throw invalid_input("GroupOnGroup: map is not an automorphism");
    }
    for (int g1 = 0; g1 < g.order(); ++g1)
        for (int g2 = 0; g2 < g.order(); ++g2)
            for (int x = 0; x < a.order(); ++x)
                if (maps_[g.op(g1, g2)][x] != maps_[g1][maps_[g2][x]])
                    throw invalid_input("GroupOnGroup: assignment is not an action");
}

GroupOnGroup GroupOnGroup::trivial(const FiniteGroup& g, const FiniteGroup& a) {
    std::vector<int> ident(a.order());
    std::iota(ident.begin(), ident.end(), 0);
    return GroupOnGroup(g, a, std::vector<std::vector<int>>(g.order(), ident));
}

FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& h,
                               const GroupOnGroup& h_on_a) {
    const int m = a.order(), n = h.order();
    auto enc = [&](int x, int y) { return x * n + y; };
    std::vector<std::vector<int>> mul(m * n, std::vector<int>(m * n));
    std::vector<std::string> names(m * n);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < n; ++y) {
            names[enc(x, y)] = a.name(x) + "|" + h.name(y);
            for (int u = 0; u < m; ++u)
                for (int v = 0; v < n; ++v)
                    mul[enc(x, y)][enc(u, v)] =
                        enc(a.op(x, h_on_a.apply(y, u)), h.op(y, v));
        }
    return FiniteGroup(std::move(mul), enc(a.identity(), h.identity()),
                       std::move(names));
}

}  // namespace eqsimp
