#include "eqsimp/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

namespace eqsimp {

Monotone monotone_identity(int m) {
    Monotone f(m + 1);
    std::iota(f.begin(), f.end(), 0);
    return f;
}

Monotone coface(int n, int i) {
    Monotone f;
    f.reserve(n);
    for (int v = 0; v <= n; ++v)
        if (v != i) f.push_back(v);
    return f;
}

Monotone codegeneracy(int n, int i) {
    Monotone f;
    f.reserve(n + 2);
    for (int v = 0; v <= n; ++v) {
        f.push_back(v);
        if (v == i) f.push_back(v);
    }
    return f;
}

Monotone compose_monotone(const Monotone& after, const Monotone& before) {
    Monotone r(before.size());
    for (size_t x = 0; x < before.size(); ++x) {
        if (before[x] < 0 || before[x] >= static_cast<int>(after.size()))
            throw invariant_violation("compose_monotone: maps not composable");
        r[x] = after[before[x]];
    }
    return r;
}

void epi_mono_factor(const Monotone& f, int target, Monotone& epi, Monotone& mono) {
    mono.clear();
    for (int v : f)
        if (mono.empty() || mono.back() != v) mono.push_back(v);
    (void)target;
    epi.resize(f.size());
    for (size_t x = 0; x < f.size(); ++x)
        epi[x] = static_cast<int>(std::lower_bound(mono.begin(), mono.end(), f[x]) - mono.begin());
}

std::vector<Monotone> all_monotone(int m, int n) {
    std::vector<Monotone> out;
    if (n < 0) return out;
    Monotone cur(m + 1, 0);
    while (true) {
        out.push_back(cur);
        int i = m;
        while (i >= 0) {
            ++cur[i];
            if (cur[i] <= n) {
                for (int j = i + 1; j <= m; ++j) cur[j] = cur[i];
                break;
            }
            --i;
        }
        if (i < 0) break;
    }
    // the counter above emits every monotone sequence in lexicographic order
    return out;
}

std::vector<Monotone> all_surjections(int m, int k) {
    std::vector<Monotone> out;
    for (auto& f : all_monotone(m, k)) {
        bool surj = f[0] == 0 && f[m] == k;
        for (size_t x = 0; surj && x + 1 < f.size(); ++x)
            if (f[x + 1] - f[x] > 1) surj = false;
        if (surj) out.push_back(f);
    }
    return out;
}

long long SimplicialSet::total_simplices() const {
    long long t = 0;
    for (int c : d_.counts) t += c;
    return t;
}

int SimplicialSet::nondegenerate_count(int n) const {
    int c = 0;
    for (int i = 0; i < count(n); ++i)
        if (!degenerate(n, i)) ++c;
    return c;
}

SimplicialSet::SimplicialSet(SimplicialData d) : d_(std::move(d)) {
    const int nb = d_.dim_bound;
    if (nb < 0) throw invalid_input("SimplicialSet: negative dimension bound");
    if (static_cast<int>(d_.counts.size()) != nb + 1)
        throw invalid_input("SimplicialSet: counts must cover levels 0..dim_bound");
    if (static_cast<int>(d_.faces.size()) != nb + 1 ||
        static_cast<int>(d_.degen.size()) != nb + 1)
        throw invalid_input("SimplicialSet: faces/degen tables must cover all levels");
    validate();
    build_normal_forms();
}

void SimplicialSet::validate() const {
    const int nb = d_.dim_bound;
    for (int n = 0; n <= nb; ++n) {
        if (static_cast<int>(d_.faces[n].size()) != d_.counts[n] ||
            static_cast<int>(d_.degen[n].size()) != d_.counts[n])
            throw invalid_input("SimplicialSet: table size mismatch at level " + std::to_string(n));
        for (int i = 0; i < d_.counts[n]; ++i) {
            const auto& f = d_.faces[n][i];
            const auto& s = d_.degen[n][i];
            if (n == 0 && !f.empty())
                throw invalid_input("SimplicialSet: vertices have no faces");
            if (n >= 1 && static_cast<int>(f.size()) != n + 1)
                throw invalid_input("SimplicialSet: face arity mismatch");
            if (n < nb && static_cast<int>(s.size()) != n + 1)
                throw invalid_input("SimplicialSet: degeneracy arity mismatch");
            if (n == nb && !s.empty())
                throw invalid_input("SimplicialSet: top level has no degeneracies");
            for (int v : f)
                if (v < 0 || v >= d_.counts[n - 1])
                    throw invalid_input("SimplicialSet: face index out of range");
            for (int v : s)
                if (v < 0 || v >= d_.counts[n + 1])
                    throw invalid_input("SimplicialSet: degeneracy index out of range");
        }
    }
    auto df = [&](int n, int i, int k) { return d_.faces[n][i][k]; };
    auto ds = [&](int n, int i, int k) { return d_.degen[n][i][k]; };
    for (int n = 2; n <= nb; ++n)
        for (int i = 0; i < d_.counts[n]; ++i)
            for (int j = 0; j <= n; ++j)
                for (int k = 0; k < j; ++k)
                    if (df(n - 1, df(n, i, j), k) != df(n - 1, df(n, i, k), j - 1))
                        throw invalid_input("SimplicialSet: face identity fails");
    for (int n = 0; n + 2 <= nb; ++n)
        for (int i = 0; i < d_.counts[n]; ++i)
            for (int j = 0; j <= n; ++j)
                for (int k = 0; k <= j; ++k)
                    if (ds(n + 1, ds(n, i, j), k) != ds(n + 1, ds(n, i, k), j + 1))
                        throw invalid_input("SimplicialSet: degeneracy identity fails");
    for (int n = 1; n <= nb; ++n) {
        if (n > nb - 1) continue;
        // mixed identities: d_k s_j on level n
        for (int i = 0; i < d_.counts[n]; ++i)
            for (int j = 0; j <= n; ++j)
                for (int k = 0; k <= n + 1; ++k) {
                    int lhs = df(n + 1, ds(n, i, j), k);
                    int rhs;
                    if (k < j)
                        rhs = ds(n - 1, df(n, i, k), j - 1);
                    else if (k == j || k == j + 1)
                        rhs = i;
                    else
                        rhs = ds(n - 1, df(n, i, k - 1), j);
                    if (lhs != rhs) throw invalid_input("SimplicialSet: mixed identity fails");
                }
    }
    // level-0 mixed identities: d_k s_0 = id on vertices
    if (nb >= 1)
        for (int i = 0; i < d_.counts[0]; ++i)
            for (int k = 0; k <= 1; ++k)
                if (df(1, ds(0, i, 0), k) != i)
                    throw invalid_input("SimplicialSet: vertex degeneracy identity fails");
}

void SimplicialSet::build_normal_forms() {
    const int nb = d_.dim_bound;
    witness_.assign(nb + 1, {});
    core_dim_.assign(nb + 1, {});
    core_idx_.assign(nb + 1, {});
    surj_.assign(nb + 1, {});
    for (int n = 0; n <= nb; ++n)
        witness_[n].assign(d_.counts[n], {-1, -1});
    for (int n = 0; n < nb; ++n)
        for (int i = 0; i < d_.counts[n]; ++i)
            for (int k = 0; k <= n; ++k) {
                int t = d_.degen[n][i][k];
                if (witness_[n + 1][t].first < 0) witness_[n + 1][t] = {k, i};
            }
    for (int n = 0; n <= nb; ++n) {
        core_dim_[n].assign(d_.counts[n], 0);
        core_idx_[n].assign(d_.counts[n], 0);
        surj_[n].assign(d_.counts[n], {});
        for (int i = 0; i < d_.counts[n]; ++i) {
            if (witness_[n][i].first < 0) {
                core_dim_[n][i] = n;
                core_idx_[n][i] = i;
                surj_[n][i] = monotone_identity(n);
            } else {
                auto [k, y] = witness_[n][i];
                // x = s_k y and y's normal form is already known (lower level)
                core_dim_[n][i] = core_dim_[n - 1][y];
                core_idx_[n][i] = core_idx_[n - 1][y];
                surj_[n][i] = compose_monotone(surj_[n - 1][y], codegeneracy(n - 1, k));
            }
        }
    }
}

int SimplicialSet::apply_op(int n, int i, const Monotone& theta) const {
    const int m = static_cast<int>(theta.size()) - 1;
    for (int v : theta)
        if (v < 0 || v > n) throw invariant_violation("apply_op: operator out of range");
    Monotone epi, mono;
    epi_mono_factor(theta, n, epi, mono);
    // face part: apply d for each value missing from mono, largest first
    int cur = i, lvl = n;
    int p = static_cast<int>(mono.size()) - 1;
    std::vector<int> missing;
    for (int v = 0, q = 0; v <= n; ++v) {
        if (q <= p && mono[q] == v) { ++q; continue; }
        missing.push_back(v);
    }
    for (auto it = missing.rbegin(); it != missing.rend(); ++it) {
        cur = d_.faces[lvl][cur][*it];
        --lvl;
    }
    // degeneracy part: apply s at each repeat position, smallest first
    for (size_t x = 0; x + 1 < epi.size(); ++x)
        if (epi[x] == epi[x + 1]) {
            cur = d_.degen[lvl][cur][static_cast<int>(x)];
            ++lvl;
        }
    if (lvl != m) throw invariant_violation("apply_op: level bookkeeping failed");
    return cur;
}

int SimplicialSet::vertex(int n, int i, int k) const {
    return apply_op(n, i, Monotone{k});
}

bool is_simplicial_map(const SimplicialSet& x, const SimplicialSet& y,
                       const SimplicialMap& f, int up_to) {
    if (f.levels() < up_to) return false;
    for (int n = 0; n <= up_to; ++n) {
        if (static_cast<int>(f.values[n].size()) != x.count(n)) return false;
        for (int i = 0; i < x.count(n); ++i) {
            int v = f.values[n][i];
            if (v < 0 || v >= y.count(n)) return false;
        }
    }
    for (int n = 1; n <= up_to; ++n)
        for (int i = 0; i < x.count(n); ++i)
            for (int k = 0; k <= n; ++k)
                if (f.values[n - 1][x.face(n, i, k)] !=
                    y.face(n, f.values[n][i], k))
                    return false;
    for (int n = 0; n < up_to; ++n)
        for (int i = 0; i < x.count(n); ++i)
            for (int k = 0; k <= n; ++k)
                if (f.values[n + 1][x.degen_of(n, i, k)] !=
                    y.degen_of(n, f.values[n][i], k))
                    return false;
    return true;
}

SimplicialMap identity_map(const SimplicialSet& x, int up_to) {
    SimplicialMap f;
    f.values.resize(up_to + 1);
    for (int n = 0; n <= up_to; ++n) {
        f.values[n].resize(x.count(n));
        std::iota(f.values[n].begin(), f.values[n].end(), 0);
    }
    return f;
}

SimplicialMap compose_maps(const SimplicialSet& x, const SimplicialSet& y,
                           const SimplicialSet& z, const SimplicialMap& f,
                           const SimplicialMap& g, int up_to) {
    (void)y;
    (void)z;
    SimplicialMap h;
    h.values.resize(up_to + 1);
    for (int n = 0; n <= up_to; ++n) {
        h.values[n].resize(x.count(n));
        for (int i = 0; i < x.count(n); ++i) h.values[n][i] = g.values[n][f.values[n][i]];
    }
    return h;
}

SimplicialSet standard_simplex(int n, int dim_bound) {
    SimplicialData d;
    d.dim_bound = dim_bound;
    d.counts.resize(dim_bound + 1);
    d.faces.resize(dim_bound + 1);
    d.degen.resize(dim_bound + 1);
    std::vector<std::vector<Monotone>> level(dim_bound + 1);
    std::vector<std::map<Monotone, int>> index(dim_bound + 1);
    for (int m = 0; m <= dim_bound; ++m) {
        level[m] = all_monotone(m, n);
        for (size_t i = 0; i < level[m].size(); ++i) index[m][level[m][i]] = static_cast<int>(i);
        d.counts[m] = static_cast<int>(level[m].size());
    }
    for (int m = 0; m <= dim_bound; ++m) {
        d.faces[m].resize(d.counts[m]);
        d.degen[m].resize(d.counts[m]);
        for (int i = 0; i < d.counts[m]; ++i) {
            if (m >= 1) {
                d.faces[m][i].resize(m + 1);
                for (int k = 0; k <= m; ++k)
                    d.faces[m][i][k] = index[m - 1].at(compose_monotone(level[m][i], coface(m, k)));
            }
            if (m < dim_bound) {
                d.degen[m][i].resize(m + 1);
                for (int k = 0; k <= m; ++k)
                    d.degen[m][i][k] = index[m + 1].at(compose_monotone(level[m][i], codegeneracy(m, k)));
            }
        }
    }
    return SimplicialSet(std::move(d));
}

SimplicialSet circle(int dim_bound) {
    if (dim_bound < 1) throw invalid_input("circle: dimension bound must be at least 1");
    SimplicialData d;
    d.dim_bound = 1;
    d.counts = {1, 2};
    d.faces = {{{}}, {{0, 0}, {0, 0}}};
    d.degen = {{{1}}, {{}, {}}};
    return skeleton_extend(SimplicialSet(std::move(d)), dim_bound);
}

SimplicialSet disjoint_union(const SimplicialSet& a, const SimplicialSet& b) {
    if (a.dim_bound() != b.dim_bound())
        throw invalid_input("disjoint_union: dimension bounds differ");
    SimplicialData d;
    d.dim_bound = a.dim_bound();
    d.counts.resize(d.dim_bound + 1);
    d.faces.resize(d.dim_bound + 1);
    d.degen.resize(d.dim_bound + 1);
    for (int n = 0; n <= d.dim_bound; ++n) {
        d.counts[n] = a.count(n) + b.count(n);
        d.faces[n].resize(d.counts[n]);
        d.degen[n].resize(d.counts[n]);
        for (int i = 0; i < a.count(n); ++i) {
            d.faces[n][i] = a.data().faces[n][i];
            d.degen[n][i] = a.data().degen[n][i];
        }
        for (int i = 0; i < b.count(n); ++i) {
            auto f = b.data().faces[n][i];
            for (int& v : f) v += a.count(n - 1);
            auto s = b.data().degen[n][i];
            for (int& v : s) v += a.count(n + 1);
            d.faces[n][a.count(n) + i] = std::move(f);
            d.degen[n][a.count(n) + i] = std::move(s);
        }
    }
    return SimplicialSet(std::move(d));
}

SimplicialSet truncate(const SimplicialSet& x, int n) {
    if (n < 0 || n > x.dim_bound()) throw invalid_input("truncate: level out of range");
    SimplicialData d;
    d.dim_bound = n;
    d.counts.assign(x.data().counts.begin(), x.data().counts.begin() + n + 1);
    d.faces.assign(x.data().faces.begin(), x.data().faces.begin() + n + 1);
    d.degen.assign(x.data().degen.begin(), x.data().degen.begin() + n + 1);
    for (auto& s : d.degen[n]) s.clear();
    return SimplicialSet(std::move(d));
}

SimplicialSet skeleton_extend(const SimplicialSet& t, int dim_bound) {
    const int n = t.dim_bound();
    if (dim_bound < n) throw invalid_input("skeleton_extend: bound below truncation level");
    if (dim_bound == n) return t;
    SimplicialData d;
    d.dim_bound = dim_bound;
    d.counts.resize(dim_bound + 1);
    d.faces.resize(dim_bound + 1);
    d.degen.resize(dim_bound + 1);
    for (int m = 0; m <= n; ++m) {
        d.counts[m] = t.count(m);
        d.faces[m] = t.data().faces[m];
        d.degen[m] = t.data().degen[m];
    }
    // levels above n: pairs (surjection [m] ->> [k], nondegenerate core)
    struct Cell {
        Monotone surj;
        int core_dim, core_idx;
        bool operator<(const Cell& o) const {
            return std::tie(core_dim, core_idx, surj) < std::tie(o.core_dim, o.core_idx, o.surj);
        }
    };
    std::vector<std::vector<Cell>> cells(dim_bound + 1);
    std::vector<std::map<Cell, int>> index(dim_bound + 1);
    for (int m = n + 1; m <= dim_bound; ++m) {
        for (int k = 0; k <= std::min(n, m - 1); ++k) {
            auto surjs = all_surjections(m, k);
            for (int c = 0; c < t.count(k); ++c) {
                if (t.degenerate(k, c)) continue;
                for (const auto& s : surjs) cells[m].push_back({s, k, c});
            }
        }
        std::sort(cells[m].begin(), cells[m].end());
        for (size_t i = 0; i < cells[m].size(); ++i) index[m][cells[m][i]] = static_cast<int>(i);
        d.counts[m] = static_cast<int>(cells[m].size());
    }
    // a simplex of the extension, given by (surjection, core), at target level lvl
    auto locate = [&](int lvl, const Monotone& surj, int cd, int ci) -> int {
        if (lvl <= n) {
            // value lives inside t
            return t.apply_op(cd, ci, surj);
        }
        return index[lvl].at(Cell{surj, cd, ci});
    };
    auto op_value = [&](int lvl_from, const Cell& cell, const Monotone& theta, int lvl_to) -> int {
        // theta: [lvl_to] -> [lvl_from]; value = (surj . theta)^* core
        Monotone comp = compose_monotone(cell.surj, theta);
        Monotone epi, mono;
        epi_mono_factor(comp, cell.core_dim, epi, mono);
        int z = t.apply_op(cell.core_dim, cell.core_idx, mono);  // face part, inside t
        int zd = static_cast<int>(mono.size()) - 1;
        // normalize z and fold its surjection into the epi part
        Monotone total = compose_monotone(t.surj(zd, z), epi);
        return locate(lvl_to, total, t.core_dim(zd, z), t.core_idx(zd, z));
    };
    for (int m = n + 1; m <= dim_bound; ++m) {
        d.faces[m].resize(d.counts[m]);
        d.degen[m].resize(d.counts[m]);
        for (int i = 0; i < d.counts[m]; ++i) {
            d.faces[m][i].resize(m + 1);
            for (int k = 0; k <= m; ++k)
                d.faces[m][i][k] = op_value(m, cells[m][i], coface(m, k), m - 1);
            if (m < dim_bound) {
                d.degen[m][i].resize(m + 1);
                for (int k = 0; k <= m; ++k)
                    d.degen[m][i][k] =
                        locate(m + 1, compose_monotone(cells[m][i].surj, codegeneracy(m, k)),
                               cells[m][i].core_dim, cells[m][i].core_idx);
            }
        }
    }
    // degeneracies from level n into the extension
    for (int i = 0; i < t.count(n); ++i) {
        d.degen[n][i].resize(n + 1);
        for (int k = 0; k <= n; ++k)
            d.degen[n][i][k] = locate(n + 1, compose_monotone(t.surj(n, i), codegeneracy(n, k)),
                                      t.core_dim(n, i), t.core_idx(n, i));
    }
    return SimplicialSet(std::move(d));
}

SimplicialSet coskeleton_extend(const SimplicialSet& t, int dim_bound,
                                std::int64_t simplex_budget) {
    const int n = t.dim_bound();
    if (dim_bound < n) throw invalid_input("coskeleton_extend: bound below truncation level");
    SimplicialData d;
    d.dim_bound = dim_bound;
    d.counts.resize(dim_bound + 1);
    d.faces.resize(dim_bound + 1);
    d.degen.resize(dim_bound + 1);
    for (int m = 0; m <= n; ++m) {
        d.counts[m] = t.count(m);
        d.faces[m] = t.data().faces[m];
        d.degen[m] = t.data().degen[m];
    }
    BudgetMeter meter(simplex_budget, "simplex_budget");
    std::vector<std::map<std::vector<int>, int>> index(dim_bound + 1);
    std::vector<std::vector<std::vector<int>>> tuples(dim_bound + 1);
    for (int m = n + 1; m <= dim_bound; ++m) {
        // level m simplices: (m+1)-tuples of level (m-1) simplices that agree
        // on shared faces: d_i y_j == d_{j-1} y_i for i < j
        const int prev = d.counts[m - 1];
        auto face_prev = [&](int idx, int k) -> int {
            return d.faces[m - 1][idx][k];
        };
        std::vector<int> cur(m + 1, 0);
        int pos = 0;
        std::vector<int> start(m + 2, 0);
        while (pos >= 0) {
            if (start[pos] >= prev) {
                --pos;
                if (pos >= 0) ++start[pos];
                continue;
            }
            cur[pos] = start[pos];
            meter.charge();
            bool ok = true;
            if (m - 1 >= 1) {
                for (int i = 0; i < pos && ok; ++i)
                    if (face_prev(cur[pos], i) != face_prev(cur[i], pos - 1)) ok = false;
            }
            if (!ok) {
                ++start[pos];
                continue;
            }
            if (pos == m) {
                tuples[m].push_back(cur);
                index[m][cur] = static_cast<int>(tuples[m].size()) - 1;
                ++start[pos];
            } else {
                ++pos;
                start[pos] = 0;
            }
        }
        d.counts[m] = static_cast<int>(tuples[m].size());
        d.faces[m].resize(d.counts[m]);
        for (int i = 0; i < d.counts[m]; ++i) d.faces[m][i] = tuples[m][i];
        d.degen[m].resize(d.counts[m]);
        // degeneracies of the previous level land here
        auto degen_prev = [&](int idx, int k) -> int { return d.degen[m - 2][idx][k]; };
        for (int i = 0; i < d.counts[m - 1]; ++i) {
            d.degen[m - 1][i].assign(m, 0);
            for (int k = 0; k <= m - 1; ++k) {
                std::vector<int> z(m + 1);
                for (int j = 0; j <= m; ++j) {
                    if (j == k || j == k + 1)
                        z[j] = i;
                    else if (j < k)
                        z[j] = degen_prev(face_prev(i, j), k - 1);
                    else
                        z[j] = degen_prev(face_prev(i, j - 1), k);
                }
                auto it = index[m].find(z);
                if (it == index[m].end())
                    throw invariant_violation("coskeleton_extend: degenerate tuple missing");
                d.degen[m - 1][i][k] = it->second;
            }
        }
    }
    return SimplicialSet(std::move(d));
}

SimplicialSet postnikov_piece(const SimplicialSet& x, int n, std::int64_t simplex_budget) {
    if (n + 1 > x.dim_bound())
        throw invalid_input("postnikov_piece: needs data one level above the stage");
    return coskeleton_extend(truncate(x, n + 1), x.dim_bound(), simplex_budget);
}

SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y, int dim_bound,
                      std::int64_t simplex_budget) {
    if (dim_bound > std::min(x.dim_bound(), y.dim_bound()))
        throw invalid_input("product: bound exceeds a factor's bound");
    SimplicialData d;
    d.dim_bound = dim_bound;
    d.counts.resize(dim_bound + 1);
    d.faces.resize(dim_bound + 1);
    d.degen.resize(dim_bound + 1);
    long long total = 0;
    for (int m = 0; m <= dim_bound; ++m) {
        long long c = static_cast<long long>(x.count(m)) * y.count(m);
        total += c;
        if (total > simplex_budget)
            throw cap_exceeded("simplex_budget", "product: simplex budget exceeded");
        d.counts[m] = static_cast<int>(c);
    }
    for (int m = 0; m <= dim_bound; ++m) {
        const int cy = y.count(m);
        d.faces[m].resize(d.counts[m]);
        d.degen[m].resize(d.counts[m]);
        for (int a = 0; a < x.count(m); ++a)
            for (int b = 0; b < cy; ++b) {
                int i = a * cy + b;
                if (m >= 1) {
                    d.faces[m][i].resize(m + 1);
                    for (int k = 0; k <= m; ++k)
                        d.faces[m][i][k] = x.face(m, a, k) * y.count(m - 1) + y.face(m, b, k);
                }
                if (m < dim_bound) {
                    d.degen[m][i].resize(m + 1);
                    for (int k = 0; k <= m; ++k)
                        d.degen[m][i][k] =
                            x.degen_of(m, a, k) * y.count(m + 1) + y.degen_of(m, b, k);
                }
            }
    }
    return SimplicialSet(std::move(d));
}

SubcomplexResult subcomplex(const SimplicialSet& x,
                            const std::vector<std::vector<char>>& keep) {
    const int nb = x.dim_bound();
    SubcomplexResult out;
    out.old_index.resize(nb + 1);
    out.new_index.resize(nb + 1);
    SimplicialData d;
    d.dim_bound = nb;
    d.counts.resize(nb + 1);
    d.faces.resize(nb + 1);
    d.degen.resize(nb + 1);
    for (int n = 0; n <= nb; ++n) {
        out.new_index[n].assign(x.count(n), -1);
        for (int i = 0; i < x.count(n); ++i)
            if (keep[n][i]) {
                out.new_index[n][i] = static_cast<int>(out.old_index[n].size());
                out.old_index[n].push_back(i);
            }
        d.counts[n] = static_cast<int>(out.old_index[n].size());
    }
    for (int n = 0; n <= nb; ++n) {
        d.faces[n].resize(d.counts[n]);
        d.degen[n].resize(d.counts[n]);
        for (int i = 0; i < d.counts[n]; ++i) {
            int oi = out.old_index[n][i];
            if (n >= 1) {
                d.faces[n][i].resize(n + 1);
                for (int k = 0; k <= n; ++k) {
                    int t = out.new_index[n - 1][x.face(n, oi, k)];
                    if (t < 0) throw invalid_input("subcomplex: set not closed under faces");
                    d.faces[n][i][k] = t;
                }
            }
            if (n < nb) {
                d.degen[n][i].resize(n + 1);
                for (int k = 0; k <= n; ++k) {
                    int t = out.new_index[n + 1][x.degen_of(n, oi, k)];
                    if (t < 0) throw invalid_input("subcomplex: set not closed under degeneracies");
                    d.degen[n][i][k] = t;
                }
            }
        }
    }
    out.space = SimplicialSet(std::move(d));
    return out;
}

Pi0 pi0(const SimplicialSet& x) {
    Pi0 out;
    const int nv = x.count(0);
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    if (x.dim_bound() >= 1)
        for (int e = 0; e < x.count(1); ++e) {
            int a = find(x.face(1, e, 0)), b = find(x.face(1, e, 1));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    out.component.assign(nv, -1);
    for (int v = 0; v < nv; ++v) {
        int r = find(v);
        if (out.component[r] < 0) {
            out.component[r] = out.count++;
            out.rep.push_back(r);
        }
        out.component[v] = out.component[r];
    }
    return out;
}

SubcomplexResult component_of(const SimplicialSet& x, int vertex) {
    Pi0 p = pi0(x);
    int c = p.component[vertex];
    std::vector<std::vector<char>> keep(x.dim_bound() + 1);
    for (int n = 0; n <= x.dim_bound(); ++n) {
        keep[n].assign(x.count(n), 0);
        for (int i = 0; i < x.count(n); ++i)
            keep[n][i] = p.component[x.vertex(n, i, 0)] == c;
    }
    return subcomplex(x, keep);
}

KanReport check_kan(const SimplicialSet& x, int up_to, std::int64_t budget) {
    if (up_to >= x.dim_bound())
        throw invalid_input("check_kan: need one level above the checked range");
    KanReport rep;
    BudgetMeter meter(budget, "enum_budget");
    for (int n = 1; n <= up_to && rep.ok; ++n) {
        // index the n-simplices by boundary with one face wildcarded
        for (int k = 0; k <= n && rep.ok; ++k) {
            std::map<std::vector<int>, char> fillable;
            for (int z = 0; z < x.count(n); ++z) {
                auto b = x.boundary(n, z);
                b[k] = -1;
                fillable[b] = 1;
            }
            // enumerate horns: tuples y_i (i != k) with matching faces
            std::vector<int> cur(n + 1, -1);
            std::vector<int> slots;
            for (int i = 0; i <= n; ++i)
                if (i != k) slots.push_back(i);
            std::vector<int> start(slots.size() + 1, 0);
            int pos = 0;
            const int prev = x.count(n - 1);
            while (pos >= 0) {
                if (pos == static_cast<int>(slots.size())) {
                    ++rep.horns_checked;
                    auto key = cur;
                    key[k] = -1;
                    if (!fillable.count(key)) {
                        rep.ok = false;
                        rep.first_failure = KanFailure{n, k, cur};
                        break;
                    }
                    --pos;
                    if (pos >= 0) ++start[pos];
                    continue;
                }
                if (start[pos] >= prev) {
                    --pos;
                    if (pos >= 0) ++start[pos];
                    continue;
                }
                int j = slots[pos];
                cur[j] = start[pos];
                meter.charge();
                bool ok = true;
                if (n - 1 >= 1)
                    for (int q = 0; q < pos && ok; ++q) {
                        int i = slots[q];
                        // i < j always (slots ascending)
                        if (x.face(n - 1, cur[j], i) != x.face(n - 1, cur[i], j - 1)) ok = false;
                    }
                if (!ok) {
                    ++start[pos];
                    continue;
                }
                ++pos;
                start[pos] = 0;
            }
        }
    }
    return rep;
}

std::optional<SimplicialMap> find_simplicial_iso(const SimplicialSet& x,
                                                 const SimplicialSet& y,
                                                 std::int64_t budget) {
    const int nb = x.dim_bound();
    if (y.dim_bound() != nb) return std::nullopt;
    for (int n = 0; n <= nb; ++n)
        if (x.count(n) != y.count(n) || x.nondegenerate_count(n) != y.nondegenerate_count(n))
            return std::nullopt;
    // slots: nondegenerate simplices in (level, index) order
    std::vector<std::pair<int, int>> slots;
    for (int n = 0; n <= nb; ++n)
        for (int i = 0; i < x.count(n); ++i)
            if (!x.degenerate(n, i)) slots.emplace_back(n, i);
    // target candidates by boundary, nondegenerate only
    std::vector<std::map<std::vector<int>, std::vector<int>>> by_boundary(nb + 1);
    for (int n = 1; n <= nb; ++n)
        for (int i = 0; i < y.count(n); ++i)
            if (!y.degenerate(n, i)) by_boundary[n][y.boundary(n, i)].push_back(i);

    std::vector<std::vector<int>> val(nb + 1);
    for (int n = 0; n <= nb; ++n) val[n].assign(x.count(n), -1);
    std::vector<std::vector<char>> used(nb + 1);
    for (int n = 0; n <= nb; ++n) used[n].assign(y.count(n), 0);

    // the image of any simplex whose core is assigned
    std::function<int(int, int)> image = [&](int n, int i) -> int {
        if (val[n][i] >= 0) return val[n][i];
        int cd = x.core_dim(n, i), ci = x.core_idx(n, i);
        if (val[cd][ci] < 0) throw invariant_violation("iso search: core unassigned");
        return y.apply_op(cd, val[cd][ci], x.surj(n, i));
    };

    BudgetMeter meter(budget, "enum_budget");
    std::function<bool(size_t)> dfs = [&](size_t s) -> bool {
        if (s == slots.size()) return true;
        auto [n, i] = slots[s];
        std::vector<int> cands;
        if (n == 0) {
            for (int v = 0; v < y.count(0); ++v)
                if (!used[0][v]) cands.push_back(v);
        } else {
            std::vector<int> b(n + 1);
            for (int k = 0; k <= n; ++k) b[k] = image(n - 1, x.face(n, i, k));
            auto it = by_boundary[n].find(b);
            if (it != by_boundary[n].end())
                for (int v : it->second)
                    if (!used[n][v]) cands.push_back(v);
        }
        for (int v : cands) {
            meter.charge();
            val[n][i] = v;
            used[n][v] = 1;
            if (dfs(s + 1)) return true;
            val[n][i] = -1;
            used[n][v] = 0;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    SimplicialMap f;
    f.values.resize(nb + 1);
    for (int n = 0; n <= nb; ++n) {
        f.values[n].resize(x.count(n));
        for (int i = 0; i < x.count(n); ++i) f.values[n][i] = image(n, i);
    }
    if (!is_simplicial_map(x, y, f, nb))
        throw invariant_violation("iso search produced a non-map");
    return f;
}

Groupoid::Groupoid(int objects, std::vector<Mor> mors, std::vector<std::vector<int>> comp,
                   std::vector<int> identity_mor)
    : objects_(objects), mors_(std::move(mors)), comp_(std::move(comp)), id_(std::move(identity_mor)) {
    const int m = static_cast<int>(mors_.size());
    if (static_cast<int>(comp_.size()) != m)
        throw invalid_input("Groupoid: composition table size mismatch");
    if (static_cast<int>(id_.size()) != objects_)
        throw invalid_input("Groupoid: one identity per object required");
    for (const auto& mm : mors_)
        if (mm.src < 0 || mm.src >= objects_ || mm.tgt < 0 || mm.tgt >= objects_)
            throw invalid_input("Groupoid: morphism endpoints out of range");
    for (int g = 0; g < m; ++g) {
        if (static_cast<int>(comp_[g].size()) != m)
            throw invalid_input("Groupoid: composition table size mismatch");
        for (int f = 0; f < m; ++f) {
            int c = comp_[g][f];
            bool composable = mors_[f].tgt == mors_[g].src;
            if (composable) {
                if (c < 0 || c >= m || mors_[c].src != mors_[f].src || mors_[c].tgt != mors_[g].tgt)
                    throw invalid_input("Groupoid: bad composite");
            } else if (c != -1) {
                throw invalid_input("Groupoid: composite defined for non-composable pair");
            }
        }
    }
    for (int o = 0; o < objects_; ++o) {
        int e = id_[o];
        if (mors_[e].src != o || mors_[e].tgt != o)
            throw invalid_input("Groupoid: identity endpoints wrong");
        for (int f = 0; f < m; ++f) {
            if (mors_[f].tgt == o && comp_[e][f] != f)
                throw invalid_input("Groupoid: identity law fails");
            if (mors_[f].src == o && comp_[f][e] != f)
                throw invalid_input("Groupoid: identity law fails");
        }
    }
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f)
            if (comp_[g][f] >= 0)
                for (int h = 0; h < m; ++h)
                    if (comp_[f][h] >= 0 &&
                        comp_[comp_[g][f]][h] != comp_[g][comp_[f][h]])
                        throw invalid_input("Groupoid: associativity fails");
    inv_.assign(m, -1);
    for (int f = 0; f < m; ++f) {
        for (int g = 0; g < m; ++g)
            if (comp_[g][f] == id_[mors_[f].src] && comp_[f][g] == id_[mors_[f].tgt]) {
                inv_[f] = g;
                break;
            }
        if (inv_[f] < 0) throw invalid_input("Groupoid: morphism without inverse");
    }
}

namespace {

struct NerveLevels {
    std::vector<std::vector<std::vector<int>>> chains;       // per level
    std::vector<std::map<std::vector<int>, int>> index;      // per level
};

NerveLevels build_nerve_levels(const Groupoid& g, int dim_bound, std::int64_t simplex_budget) {
    NerveLevels out;
    out.chains.resize(dim_bound + 1);
    out.index.resize(dim_bound + 1);
    BudgetMeter meter(simplex_budget, "simplex_budget");
    for (int o = 0; o < g.objects(); ++o) {
        meter.charge();
        out.chains[0].push_back({o});  // level 0 chain: the object itself
        out.index[0][{o}] = o;
    }
    for (int m = 1; m <= dim_bound; ++m)
        for (const auto& prev : out.chains[m - 1])
            for (int f = 0; f < g.morphisms(); ++f) {
                int last_tgt = m == 1 ? prev[0] : g.tgt(prev.back());
                if (g.src(f) != last_tgt) continue;
                std::vector<int> chain;
                if (m > 1) chain = prev;
                chain.push_back(f);
                meter.charge();
                out.index[m][chain] = static_cast<int>(out.chains[m].size());
                out.chains[m].push_back(std::move(chain));
            }
    return out;
}

}  // namespace

SimplicialSet nerve(const Groupoid& g, int dim_bound, std::int64_t simplex_budget) {
    NerveLevels lv = build_nerve_levels(g, dim_bound, simplex_budget);
    SimplicialData d;
    d.dim_bound = dim_bound;
    d.counts.resize(dim_bound + 1);
    d.faces.resize(dim_bound + 1);
    d.degen.resize(dim_bound + 1);
    for (int m = 0; m <= dim_bound; ++m) d.counts[m] = static_cast<int>(lv.chains[m].size());
    for (int m = 0; m <= dim_bound; ++m) {
        d.faces[m].resize(d.counts[m]);
        d.degen[m].resize(d.counts[m]);
        for (int i = 0; i < d.counts[m]; ++i) {
            const auto& ch = lv.chains[m][i];
            if (m >= 1) {
                d.faces[m][i].resize(m + 1);
                for (int k = 0; k <= m; ++k) {
                    std::vector<int> fc;
                    if (m == 1) {
                        fc = {k == 0 ? g.tgt(ch[0]) : g.src(ch[0])};
                    } else if (k == 0) {
                        fc.assign(ch.begin() + 1, ch.end());
                    } else if (k == m) {
                        fc.assign(ch.begin(), ch.end() - 1);
                    } else {
                        fc = ch;
                        int merged = g.compose(ch[k], ch[k - 1]);
                        fc.erase(fc.begin() + k);
                        fc[k - 1] = merged;
                    }
                    d.faces[m][i][k] = lv.index[m - 1].at(fc);
                }
            }
            if (m < dim_bound) {
                d.degen[m][i].resize(m + 1);
                for (int k = 0; k <= m; ++k) {
                    std::vector<int> dc;
                    int obj_k = m == 0 ? ch[0] : (k == 0 ? g.src(ch[0]) : g.tgt(ch[k - 1]));
                    if (m == 0) {
                        dc = {g.identity(obj_k)};
                    } else {
                        dc = ch;
                        dc.insert(dc.begin() + k, g.identity(obj_k));
                    }
                    d.degen[m][i][k] = lv.index[m + 1].at(dc);
                }
            }
        }
    }
    return SimplicialSet(std::move(d));
}

std::vector<int> nerve_chain(const Groupoid& g, int dim_bound, int level, int index) {
    if (level == 0) return {};
    NerveLevels lv = build_nerve_levels(g, dim_bound, global_caps().simplex_budget);
    return lv.chains[level][index];
}

int nerve_index_of_chain(const Groupoid& g, int dim_bound, const std::vector<int>& chain) {
    if (chain.empty())
        throw invalid_input("nerve_index_of_chain: level-0 indices equal object ids");
    NerveLevels lv = build_nerve_levels(g, dim_bound, global_caps().simplex_budget);
    return lv.index[static_cast<int>(chain.size())].at(chain);
}

std::vector<std::vector<std::vector<int>>> nerve_chains(const Groupoid& g, int dim_bound,
                                                        std::int64_t simplex_budget) {
    return build_nerve_levels(g, dim_bound, simplex_budget).chains;
}

}  // namespace eqsimp
