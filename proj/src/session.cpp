#include "eqsimp/session.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "eqsimp/config.hpp"

namespace eqsimp {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw invalid_input(msg); }

// Run one entity's parser and prefix any failure with the entity label, so
// every error names the object and the violated rule.
template <class F>
void guarded(const std::string& ctx, F&& f) {
    try {
        f();
    } catch (const invalid_input& e) {
        throw invalid_input(ctx + ": " + e.what());
    } catch (const json::exception& e) {
        throw invalid_input(ctx + ": malformed value (" + e.what() + ")");
    }
}

void check_fields(const json& j, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional) {
    if (!j.is_object()) fail("expected an object");
    for (const char* r : required)
        if (!j.contains(r)) fail(std::string("missing field '") + r + "'");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        bool known = k == "note";
        for (const char* r : required) known = known || k == r;
        for (const char* o : optional) known = known || k == o;
        if (!known) fail("unknown field '" + k + "'");
    }
    if (j.contains("note") && !j.at("note").is_string()) fail("note must be a string");
}

int get_int(const json& j, const char* field) {
    if (!j.is_number_integer()) fail(std::string(field) + ": expected an integer");
    return j.get<int>();
}

std::vector<int> get_ivec(const json& j, const char* field) {
    if (!j.is_array()) fail(std::string(field) + ": expected a list of integers");
    std::vector<int> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(get_int(e, field));
    return v;
}

std::vector<std::vector<int>> get_imat(const json& j, const char* field) {
    if (!j.is_array()) fail(std::string(field) + ": expected a list of integer lists");
    std::vector<std::vector<int>> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(get_ivec(e, field));
    return v;
}

std::vector<std::vector<std::vector<int>>> get_i3(const json& j, const char* field) {
    if (!j.is_array()) fail(std::string(field) + ": expected a nested list");
    std::vector<std::vector<std::vector<int>>> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(get_imat(e, field));
    return v;
}

// A matrix given as a list of rows, with the expected shape known from the
// surrounding objects.
ZMat get_zmat_sized(const json& j, int rows, int cols, const std::string& field) {
    if (!j.is_array()) fail(field + ": expected a matrix as a list of rows");
    if (static_cast<int>(j.size()) != rows)
        fail(field + ": expected " + std::to_string(rows) + " rows, got " +
             std::to_string(j.size()));
    ZMat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            fail(field + ": row " + std::to_string(r) + " must have " +
                 std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) {
            if (!row[c].is_number_integer()) fail(field + ": entries must be integers");
            m.at(r, c) = mpz_class(row[c].get<long>());
        }
    }
    return m;
}

FinGenAb get_fgab(const json& rank_j, const json& torsion_j) {
    FinGenAb m;
    m.rank = get_int(rank_j, "rank");
    if (m.rank < 0) fail("rank: must be nonnegative");
    if (!torsion_j.is_array()) fail("torsion: expected a list of integers");
    for (const auto& t : torsion_j) {
        long d = 0;
        if (!t.is_number_integer() || (d = t.get<long>()) <= 1)
            fail("torsion: entries must be integers greater than 1");
        m.torsion.push_back(mpz_class(d));
    }
    for (size_t i = 1; i < m.torsion.size(); ++i)
        if (m.torsion[i] % m.torsion[i - 1] != 0)
            fail("torsion: each entry must divide the next");
    return m;
}

template <class T>
const T& find_ref(const std::map<std::string, T>& store, const json& j, const char* kind,
                  const char* field) {
    if (!j.is_string()) fail(std::string(field) + ": expected the name of a " + kind);
    const std::string name = j.get<std::string>();
    auto it = store.find(name);
    if (it == store.end())
        fail(std::string(field) + ": unknown " + kind + " '" + name + "'");
    return it->second;
}

template <class F>
void each_entity(const json& j, const char* section, F&& f) {
    if (!j.contains(section)) return;
    const json& sec = j.at(section);
    if (!sec.is_object())
        throw invalid_input(std::string("session: section '") + section +
                            "' must map names to objects");
    for (auto it = sec.begin(); it != sec.end(); ++it) f(it.key(), it.value());
}

// A module entry as it appears inside a complex: shape plus an optional
// explicit action (trivial when absent).
GModule get_gmodule(const FiniteGroup& g, const json& e, const std::string& label) {
    check_fields(e, {"rank", "torsion"}, {"action"});
    FinGenAb m = get_fgab(e.at("rank"), e.at("torsion"));
    if (!e.contains("action")) return GModule::trivial(g, m);
    const json& a = e.at("action");
    if (!a.is_array() || static_cast<int>(a.size()) != g.order())
        fail(label + ": action needs one matrix per group element");
    std::vector<ZMat> act;
    act.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        act.push_back(get_zmat_sized(a[i], m.coords(), m.coords(),
                                     label + ".action[" + std::to_string(i) + "]"));
    return GModule(g, std::move(m), std::move(act));
}

}  // namespace

Session parse_session(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_input(std::string("session: ") + e.what());
    }
    if (!j.is_object()) throw invalid_input("session: top level must be an object");

    static const char* kSections[] = {"groups",     "modules",   "spaces",  "actions",
                                      "gactions",   "complexes", "sequences",
                                      "extensions", "principals", "torsors",
                                      "families",   "towers"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        bool known = k == "note";
        for (const char* sec : kSections) known = known || k == sec;
        if (!known) throw invalid_input("session: unknown section '" + k + "'");
    }

    Session s;

    each_entity(j, "groups", [&](const std::string& name, const json& e) {
        guarded("group '" + name + "'", [&] {
            check_fields(e, {"table", "identity"}, {"names"});
            auto table = get_imat(e.at("table"), "table");
            int id = get_int(e.at("identity"), "identity");
            std::vector<std::string> names;
            if (e.contains("names")) {
                const json& ns = e.at("names");
                if (!ns.is_array()) fail("names: expected a list of strings");
                for (const auto& n : ns) {
                    if (!n.is_string()) fail("names: expected a list of strings");
                    names.push_back(n.get<std::string>());
                }
            }
            s.groups.emplace(name, FiniteGroup(std::move(table), id, std::move(names)));
        });
    });

    each_entity(j, "modules", [&](const std::string& name, const json& e) {
        guarded("module '" + name + "'", [&] {
            check_fields(e, {"group", "rank", "torsion"}, {"action"});
            const FiniteGroup& g = find_ref(s.groups, e.at("group"), "group", "group");
            json body = e;
            body.erase("group");
            s.modules.emplace(name, get_gmodule(g, body, "module"));
        });
    });

    each_entity(j, "spaces", [&](const std::string& name, const json& e) {
        guarded("space '" + name + "'", [&] {
            check_fields(e, {"dim_bound", "counts", "faces", "degens"}, {});
            SimplicialData d;
            d.dim_bound = get_int(e.at("dim_bound"), "dim_bound");
            d.counts = get_ivec(e.at("counts"), "counts");
            d.faces = get_i3(e.at("faces"), "faces");
            d.degen = get_i3(e.at("degens"), "degens");
            s.spaces.emplace(name, SimplicialSet(std::move(d)));
        });
    });

    each_entity(j, "actions", [&](const std::string& name, const json& e) {
        guarded("action '" + name + "'", [&] {
            check_fields(e, {"group", "space"}, {"table"});
            const FiniteGroup& g = find_ref(s.groups, e.at("group"), "group", "group");
            const SimplicialSet& x = find_ref(s.spaces, e.at("space"), "space", "space");
            if (e.contains("table"))
                s.actions.emplace(name, GSpace(g, x, get_i3(e.at("table"), "table")));
            else
                s.actions.emplace(name, trivial_gspace(g, x));
        });
    });

    each_entity(j, "gactions", [&](const std::string& name, const json& e) {
        guarded("gaction '" + name + "'", [&] {
            check_fields(e, {"group", "target", "maps"}, {});
            const FiniteGroup& g = find_ref(s.groups, e.at("group"), "group", "group");
            const FiniteGroup& a = find_ref(s.groups, e.at("target"), "group", "target");
            NamedGroupAction n;
            n.group = e.at("group").get<std::string>();
            n.target = e.at("target").get<std::string>();
            n.act = GroupOnGroup(g, a, get_imat(e.at("maps"), "maps"));
            s.gactions.emplace(name, std::move(n));
        });
    });

    each_entity(j, "complexes", [&](const std::string& name, const json& e) {
        guarded("complex '" + name + "'", [&] {
            check_fields(e, {"group", "lo", "modules", "d"}, {});
            const FiniteGroup& g = find_ref(s.groups, e.at("group"), "group", "group");
            int lo = get_int(e.at("lo"), "lo");
            const json& mods_j = e.at("modules");
            if (!mods_j.is_array()) fail("modules: expected a list");
            std::vector<GModule> mods;
            for (size_t i = 0; i < mods_j.size(); ++i)
                mods.push_back(
                    get_gmodule(g, mods_j[i], "modules[" + std::to_string(i) + "]"));
            const json& d_j = e.at("d");
            if (!d_j.is_array() || d_j.size() != mods.size())
                fail("d: expected one differential slot per module");
            std::vector<ZMat> d;
            for (size_t i = 0; i < d_j.size(); ++i) {
                if (i == 0) {
                    if (!d_j[0].is_array() || !d_j[0].empty())
                        fail("d: the bottom slot must be []");
                    d.push_back(ZMat());
                } else {
                    d.push_back(get_zmat_sized(d_j[i], mods[i - 1].mod().coords(),
                                               mods[i].mod().coords(),
                                               "d[" + std::to_string(i) + "]"));
                }
            }
            s.complexes.emplace(name, make_gcomplex(g, lo, std::move(mods), std::move(d)));
        });
    });

    each_entity(j, "sequences", [&](const std::string& name, const json& e) {
        guarded("sequence '" + name + "'", [&] {
            check_fields(e, {"a", "b", "c", "f", "g"}, {});
            const GComplex& a = find_ref(s.complexes, e.at("a"), "complex", "a");
            const GComplex& b = find_ref(s.complexes, e.at("b"), "complex", "b");
            const GComplex& c = find_ref(s.complexes, e.at("c"), "complex", "c");
            auto maps = [&](const char* field, const GComplex& src,
                            const GComplex& dst) {
                const json& m_j = e.at(field);
                if (!m_j.is_array() || m_j.size() != src.groups.size())
                    fail(std::string(field) + ": expected one matrix per degree");
                std::vector<ZMat> ms;
                for (size_t i = 0; i < m_j.size(); ++i)
                    ms.push_back(get_zmat_sized(
                        m_j[i], dst.groups[i].mod().coords(),
                        src.groups[i].mod().coords(),
                        std::string(field) + "[" + std::to_string(i) + "]"));
                return ms;
            };
            if (a.groups.size() != b.groups.size() || b.groups.size() != c.groups.size())
                fail("complexes must have equal length");
            s.sequences.emplace(name,
                                make_ses(a, b, c, maps("f", a, b), maps("g", b, c)));
        });
    });

    each_entity(j, "extensions", [&](const std::string& name, const json& e) {
        guarded("extension '" + name + "'", [&] {
            check_fields(e, {"total", "kernel", "quotient", "inclusion", "projection"}, {});
            const FiniteGroup& t = find_ref(s.groups, e.at("total"), "group", "total");
            const FiniteGroup& k = find_ref(s.groups, e.at("kernel"), "group", "kernel");
            const FiniteGroup& q =
                find_ref(s.groups, e.at("quotient"), "group", "quotient");
            s.extensions.emplace(
                name, make_extension(t, k, q, get_ivec(e.at("inclusion"), "inclusion"),
                                     get_ivec(e.at("projection"), "projection")));
        });
    });

    each_entity(j, "principals", [&](const std::string& name, const json& e) {
        guarded("principal '" + name + "'", [&] {
            check_fields(e, {"structure_group", "galois", "size", "g_act", "galois_act",
                             "galois_on_g"},
                         {});
            PrincipalGSet p;
            p.structure_group = find_ref(s.groups, e.at("structure_group"), "group",
                                         "structure_group");
            p.galois = find_ref(s.groups, e.at("galois"), "group", "galois");
            p.size = get_int(e.at("size"), "size");
            p.g_act = get_imat(e.at("g_act"), "g_act");
            p.galois_act = get_imat(e.at("galois_act"), "galois_act");
            p.galois_on_g = GroupOnGroup(p.galois, p.structure_group,
                                         get_imat(e.at("galois_on_g"), "galois_on_g"));
            validate_principal_gset(p);
            s.principals.emplace(name, std::move(p));
        });
    });

    each_entity(j, "torsors", [&](const std::string& name, const json& e) {
        guarded("torsor '" + name + "'", [&] {
            check_fields(e, {"structure_group", "galois", "components", "g_on_p",
                             "galois_on_p", "galois_on_g"},
                         {});
            TorsorData t;
            t.structure_group = find_ref(s.groups, e.at("structure_group"), "group",
                                         "structure_group");
            t.galois = find_ref(s.groups, e.at("galois"), "group", "galois");
            t.components = get_int(e.at("components"), "components");
            t.g_on_p = get_imat(e.at("g_on_p"), "g_on_p");
            t.galois_on_p = get_imat(e.at("galois_on_p"), "galois_on_p");
            t.galois_on_g = GroupOnGroup(t.galois, t.structure_group,
                                         get_imat(e.at("galois_on_g"), "galois_on_g"));
            validate_torsor_data(t);
            s.torsors.emplace(name, std::move(t));
        });
    });

    each_entity(j, "families", [&](const std::string& name, const json& e) {
        guarded("family '" + name + "'", [&] {
            check_fields(e, {"group", "places", "ramified"}, {});
            PlaceFamily f;
            f.group = find_ref(s.groups, e.at("group"), "group", "group");
            const json& places_j = e.at("places");
            if (!places_j.is_array()) fail("places: expected a list");
            for (size_t i = 0; i < places_j.size(); ++i) {
                const json& p = places_j[i];
                check_fields(p, {"H", "I"}, {});
                Place pl;
                pl.decomposition = get_ivec(p.at("H"), "H");
                pl.inertia = get_ivec(p.at("I"), "I");
                f.places.push_back(std::move(pl));
            }
            f.ramified.assign(f.places.size(), 0);
            for (int idx : get_ivec(e.at("ramified"), "ramified")) {
                if (idx < 0 || idx >= static_cast<int>(f.places.size()))
                    fail("ramified: place index out of range");
                f.ramified[idx] = 1;
            }
            validate_place_family(f);
            s.families.emplace(name, std::move(f));
        });
    });

    each_entity(j, "towers", [&](const std::string& name, const json& e) {
        guarded("tower '" + name + "'", [&] {
            check_fields(e, {"sizes", "maps"}, {});
            Tower t;
            t.sizes = get_ivec(e.at("sizes"), "sizes");
            t.maps = get_imat(e.at("maps"), "maps");
            validate_tower(t);
            s.towers.emplace(name, std::move(t));
        });
    });

    s.canonical = j.dump(2) + "\n";
    return s;
}

Session load_session(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("session: cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_session(buf.str());
}

std::string serialize_session(const Session& s) { return s.canonical; }

}  // namespace eqsimp
