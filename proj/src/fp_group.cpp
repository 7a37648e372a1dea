#include "eqsimp/fp_group.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace eqsimp {

namespace {

class CosetTable {
public:
    CosetTable(int generators, int coset_cap) : ngen_(generators), cap_(coset_cap) {
        tab_.emplace_back(cols(), -1);
        parent_.push_back(0);
        word_.push_back({});
    }

    int cols() const { return 2 * ngen_; }
    static int col_of(int letter) {
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    }

    int find(int a) {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }

    int get(int a, int col) {
        int t = tab_[a][col];
        return t < 0 ? -1 : find(t);
    }

    const std::vector<int>& word(int c) const { return word_[c]; }

    int new_coset(int from, int letter) {
        if (static_cast<int>(tab_.size()) >= cap_)
            throw cap_exceeded("order_cap", "coset table exceeded the order cap");
        tab_.emplace_back(cols(), -1);
        parent_.push_back(static_cast<int>(parent_.size()));
        word_.push_back(word_[from]);
        word_.back().push_back(letter);
        return static_cast<int>(tab_.size()) - 1;
    }

    void set_entry(int a, int col, int b) {
        a = find(a);
        b = find(b);
        int cur = get(a, col);
        if (cur == -1) {
            tab_[a][col] = b;
            int back = get(b, col ^ 1);
            if (back == -1)
                tab_[b][col ^ 1] = a;
            else if (back != a)
                coinc_.emplace_back(back, a);
        } else if (cur != b) {
            coinc_.emplace_back(cur, b);
        }
        process_coincidences();
    }

    void process_coincidences() {
        while (!coinc_.empty()) {
            auto [x, y] = coinc_.front();
            coinc_.pop_front();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            parent_[y] = x;
            for (int c = 0; c < cols(); ++c) {
                int t = tab_[y][c];
                if (t < 0) continue;
                t = find(t);
                int cur = get(x, c);
                if (cur == -1)
                    tab_[x][c] = t;
                else if (cur != t)
                    coinc_.emplace_back(cur, t);
            }
        }
    }

    // Trace a relator cycle at coset c, defining cosets to close the gap.
    void trace_relator(int c, const std::vector<int>& rel) {
        c = find(c);
        int f = c, fi = 0;
        const int len = static_cast<int>(rel.size());
        while (fi < len) {
            int t = get(f, col_of(rel[fi]));
            if (t == -1) break;
            f = t;
            ++fi;
        }
        if (fi == len) {
            if (f != find(c)) {
                coinc_.emplace_back(f, find(c));
                process_coincidences();
            }
            return;
        }
        int b = find(c), bi = len;
        while (bi > fi + 1) {
            int t = get(b, col_of(rel[bi - 1]) ^ 1);
            if (t == -1) break;
            b = t;
            --bi;
        }
        while (fi < bi - 1) {
            f = find(f);
            int t = get(f, col_of(rel[fi]));
            if (t == -1) {
                int n = new_coset(f, rel[fi]);
                set_entry(f, col_of(rel[fi]), n);
                t = get(find(f), col_of(rel[fi]));
                if (t == -1) throw invariant_violation("coset table lost a fresh entry");
            }
            f = t;
            ++fi;
        }
        set_entry(find(f), col_of(rel[fi]), find(b));
    }

    bool alive(int a) { return find(a) == a; }
    int total() const { return static_cast<int>(tab_.size()); }

    int trace_word(int from, const std::vector<int>& word) {
        int c = find(from);
        for (int letter : word) {
            int t = get(c, col_of(letter));
            if (t == -1) throw invariant_violation("incomplete coset table trace");
            c = t;
        }
        return c;
    }

    bool complete() {
        for (int a = 0; a < total(); ++a) {
            if (!alive(a)) continue;
            for (int c = 0; c < cols(); ++c)
                if (get(a, c) == -1) return false;
        }
        return true;
    }

    std::pair<int, int> first_hole() {
        for (int a = 0; a < total(); ++a) {
            if (!alive(a)) continue;
            for (int c = 0; c < cols(); ++c)
                if (get(a, c) == -1) return {a, c};
        }
        return {-1, -1};
    }

private:
    int ngen_, cap_;
    std::vector<std::vector<int>> tab_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> word_;
    std::deque<std::pair<int, int>> coinc_;
};

}  // namespace

EnumeratedGroup enumerate_presented_group(const Presentation& p, int order_cap) {
    if (p.generators == 0) {
        EnumeratedGroup out;
        out.group = trivial_group();
        out.witness = {{}};
        return out;
    }
    for (const auto& r : p.relators)
        for (int letter : r)
            if (letter == 0 || std::abs(letter) > p.generators)
                throw invalid_input("relator uses an unknown generator");
    const int coset_cap = std::max(1000, order_cap * 20);
    CosetTable tc(p.generators, coset_cap);
    while (true) {
        for (int c = 0; c < tc.total(); ++c) {
            if (!tc.alive(c)) continue;
            for (const auto& r : p.relators)
                if (!r.empty()) tc.trace_relator(c, r);
        }
        auto [hc, hcol] = tc.first_hole();
        if (hc < 0) {
            // table complete; confirm every relator cycle closes
            bool stable = true;
            for (int c = 0; c < tc.total() && stable; ++c) {
                if (!tc.alive(c)) continue;
                for (const auto& r : p.relators) {
                    if (r.empty()) continue;
                    if (tc.trace_word(c, r) != tc.find(c)) {
                        tc.trace_relator(c, r);
                        stable = false;
                        break;
                    }
                }
            }
            if (stable) break;
        } else {
            int letter = hcol % 2 == 0 ? hcol / 2 + 1 : -(hcol / 2 + 1);
            int n = tc.new_coset(tc.find(hc), letter);
            tc.set_entry(hc, hcol, n);
        }
    }
    // collect live cosets; coset 0 survives every merge and is the identity
    std::vector<int> live;
    std::vector<int> pos(tc.total(), -1);
    for (int c = 0; c < tc.total(); ++c)
        if (tc.alive(c)) {
            pos[c] = static_cast<int>(live.size());
            live.push_back(c);
        }
    const int n = static_cast<int>(live.size());
    if (n > order_cap) throw cap_exceeded("order_cap", "group order exceeds the cap");
    std::vector<std::vector<int>> mult(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mult[a][b] = pos[tc.trace_word(live[a], tc.word(live[b]))];
    EnumeratedGroup out;
    out.group = FiniteGroup(mult, 0);
    out.generator_elt.resize(p.generators);
    for (int g = 1; g <= p.generators; ++g)
        out.generator_elt[g - 1] = pos[tc.trace_word(0, {g})];
    out.witness.resize(n);
    for (int a = 0; a < n; ++a) out.witness[a] = tc.word(live[a]);
    return out;
}

Pi1Result edge_path_pi1(const SimplicialSet& x, int base_vertex, int order_cap) {
    if (x.dim_bound() < 1) throw invalid_input("path group needs level 1");
    if (base_vertex < 0 || base_vertex >= x.count(0))
        throw invalid_input("base vertex out of range");
    Pi0 comp = pi0(x);
    if (comp.count != 1) throw invalid_input("path group needs a connected complex");

    const int nv = x.count(0);
    Pi1Result out;
    out.base_vertex = base_vertex;
    out.tree_parent.assign(nv, -2);
    out.tree_edge.assign(nv, -1);
    out.tree_dir.assign(nv, 0);
    out.tree_parent[base_vertex] = -1;
    std::queue<int> bfs;
    bfs.push(base_vertex);
    // adjacency over nondegenerate edges
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (edge, dir from this vertex)
    for (int e = 0; e < x.count(1); ++e) {
        if (x.degenerate(1, e)) continue;
        int s = x.face(1, e, 1), t = x.face(1, e, 0);
        adj[s].emplace_back(e, +1);
        adj[t].emplace_back(e, -1);
    }
    std::vector<char> tree_flag(x.count(1), 0);
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (auto [e, dir] : adj[v]) {
            int w = dir > 0 ? x.face(1, e, 0) : x.face(1, e, 1);
            if (out.tree_parent[w] != -2) continue;
            out.tree_parent[w] = v;
            out.tree_edge[w] = e;
            out.tree_dir[w] = dir;
            tree_flag[e] = 1;
            bfs.push(w);
        }
    }
    Presentation pres;
    std::vector<int> letter(x.count(1), 0);
    for (int e = 0; e < x.count(1); ++e) {
        if (x.degenerate(1, e) || tree_flag[e]) continue;
        letter[e] = ++pres.generators;
        out.generator_edge.push_back(e);
    }
    if (x.dim_bound() >= 2)
        for (int z = 0; z < x.count(2); ++z) {
            if (x.degenerate(2, z)) continue;
            std::vector<int> rel;
            auto push_edge = [&](int e, int sign) {
                if (letter[e]) rel.push_back(sign * letter[e]);
            };
            push_edge(x.face(2, z, 2), +1);
            push_edge(x.face(2, z, 0), +1);
            push_edge(x.face(2, z, 1), -1);
            if (!rel.empty()) pres.relators.push_back(std::move(rel));
        }
    EnumeratedGroup eg = enumerate_presented_group(pres, order_cap);
    out.group = std::move(eg.group);
    out.element_word = std::move(eg.witness);
    out.edge_class.assign(x.count(1), out.group.identity());
    for (int e = 0; e < x.count(1); ++e)
        if (letter[e]) out.edge_class[e] = eg.generator_elt[letter[e] - 1];
    return out;
}

EdgePath path_from_base(const Pi1Result& p, int vertex) {
    EdgePath rev;
    int v = vertex;
    while (p.tree_parent[v] >= 0) {
        rev.emplace_back(p.tree_edge[v], p.tree_dir[v]);
        v = p.tree_parent[v];
    }
    if (p.tree_parent[v] != -1) throw invariant_violation("vertex outside the spanning tree");
    return EdgePath(rev.rbegin(), rev.rend());
}

EdgePath loop_of_edge(const Pi1Result& p, const SimplicialSet& x, int edge) {
    EdgePath loop = path_from_base(p, x.face(1, edge, 1));
    loop.emplace_back(edge, +1);
    EdgePath back = path_from_base(p, x.face(1, edge, 0));
    for (auto it = back.rbegin(); it != back.rend(); ++it)
        loop.emplace_back(it->first, -it->second);
    return loop;
}

int path_class(const Pi1Result& p, const EdgePath& path) {
    int acc = p.group.identity();
    for (auto [e, dir] : path) {
        int c = p.edge_class[e];
        acc = p.group.op(acc, dir > 0 ? c : p.group.inverse(c));
    }
    return acc;
}

std::vector<int> induced_pi1(const Pi1Result& px, const SimplicialSet& x,
                             const SimplicialSet& y, const Pi1Result& py,
                             const SimplicialMap& f) {
    std::vector<int> gen_image(px.generator_edge.size());
    for (size_t g = 0; g < px.generator_edge.size(); ++g) {
        EdgePath loop = loop_of_edge(px, x, px.generator_edge[g]);
        EdgePath mapped;
        mapped.reserve(loop.size());
        for (auto [e, dir] : loop) mapped.emplace_back(f.values[1][e], dir);
        gen_image[g] = path_class(py, mapped);
    }
    std::vector<int> out(px.group.order());
    for (int a = 0; a < px.group.order(); ++a) {
        int acc = py.group.identity();
        for (int letter : px.element_word[a]) {
            int im = gen_image[std::abs(letter) - 1];
            acc = py.group.op(acc, letter > 0 ? im : py.group.inverse(im));
        }
        out[a] = acc;
    }
    if (!is_homomorphism(px.group, py.group, out))
        throw invariant_violation("induced path-group map is not a homomorphism");
    return out;
}

}  // namespace eqsimp
