// Command line front end: loads a session of named objects, runs one
// operation, and prints a deterministic JSON report.
//
// Exit codes: 0 success, 2 invalid input, 3 resource cap exceeded (the
// message names the cap), 64 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqsimp/config.hpp"
#include "eqsimp/descent.hpp"
#include "eqsimp/equivariant.hpp"
#include "eqsimp/fp_group.hpp"
#include "eqsimp/group.hpp"
#include "eqsimp/hfp.hpp"
#include "eqsimp/homalg.hpp"
#include "eqsimp/localglobal.hpp"
#include "eqsimp/mapenum.hpp"
#include "eqsimp/session.hpp"
#include "eqsimp/simplicial.hpp"

using nlohmann::json;
using namespace eqsimp;

namespace {

json j_mpz(const mpz_class& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json j_zvec(const ZVec& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(j_mpz(e));
    return a;
}

json j_ab(const FinGenAb& a) {
    json j;
    j["rank"] = a.rank;
    j["torsion"] = j_zvec(a.torsion);
    j["str"] = a.str();
    j["order"] = a.rank > 0 ? json("infinite") : j_mpz(a.order());
    return j;
}

json j_counts(const SimplicialSet& x) {
    json a = json::array();
    for (int n = 0; n <= x.dim_bound(); ++n) a.push_back(x.count(n));
    return a;
}

json j_nondeg(const SimplicialSet& x) {
    json a = json::array();
    for (int n = 0; n <= x.dim_bound(); ++n) a.push_back(x.nondegenerate_count(n));
    return a;
}

template <class T>
const T& need(const std::map<std::string, T>& store, const std::string& name,
              const char* kind) {
    auto it = store.find(name);
    if (it == store.end())
        throw invalid_input(std::string(kind) + " '" + name + "' not found in session");
    return it->second;
}

int find_cocycle(const NonabelianH1& h1, const std::vector<int>& alpha) {
    for (size_t i = 0; i < h1.cocycles.size(); ++i)
        if (h1.cocycles[i].alpha == alpha) return static_cast<int>(i);
    throw invariant_violation("cocycle missing from the enumerated list");
}

// A degree-2 model for the target: the right extension of its own
// 2-truncation when that certifies, otherwise the homology model for a
// connected horn-filling space with trivial path group.
Pi2Data certify_pi2(const GSpace& x, int order_cap, std::int64_t budget,
                    std::string* how) {
    std::string first;
    try {
        Pi2Data p = pi2_coskeletal(x, budget);
        if (how) *how = "coskeletal";
        return p;
    } catch (const invalid_input& e) {
        first = e.what();
    }
    try {
        Pi2Data p = pi2_by_hurewicz(x, order_cap, budget);
        if (how) *how = "hurewicz";
        return p;
    } catch (const invalid_input& e) {
        throw invalid_input(std::string("no certified degree-2 model: ") + first +
                            "; " + e.what());
    }
}

struct Args {
    std::string session_path, out_path;
    Caps caps;
    long seed = 0;
    std::string entity, entity2;
    int n = 0, m = 0;
    int vertex = 0;
    int s_max = 2, t_max = 3;
    std::vector<int> alpha;
};

void emit(const json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        std::fflush(stdout);
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw invalid_input("cannot write report to '" + out_path + "'");
        f << text;
    }
}

json run_selftest(const Caps& caps) {
    int checks = 0;
    auto require = [&](bool ok, const char* what) {
        ++checks;
        if (!ok) throw invariant_violation(std::string("selftest: ") + what);
    };

    const FiniteGroup c2 = cyclic_group(2);
    const FiniteGroup c3 = cyclic_group(3);

    GSpace e2 = eg_space(c2, 2, caps.simplex_budget);
    require(e2.space().count(0) == 2 && e2.space().count(1) == 4 &&
                e2.space().count(2) == 8,
            "translation space level sizes");
    require(is_free_action(e2).free, "translation space action is free");

    SimplicialSet b3 = bg_space(c3, 2, caps.simplex_budget);
    require(b3.count(0) == 1 && b3.count(1) == 3 && b3.count(2) == 9,
            "one-object nerve level sizes");

    GModule m2 = GModule::trivial(c2, FinGenAb{0, {2}});
    require(group_cohomology(m2, 1).group().order() == 2, "degree-1 cohomology size");
    require(em_fixed_points(m2, 2).order() == 2, "degree-2 fixed point group size");

    GroupOnGroup inv(c2, c3, {{0, 1, 2}, {0, 2, 1}});
    NonabelianH1 h1 = h1_nonabelian(c2, c3, inv, caps.enum_budget);
    require(h1.cocycles.size() == 3 && h1.reps.size() == 1,
            "twisted degree-1 cocycle and class counts");
    Cocycle1 a{{0, 1}};
    GroupOnGroup tw = twist_action(c2, c3, inv, a);
    NonabelianH1 h1t = h1_nonabelian(c2, c3, tw, caps.enum_budget);
    Cocycle1 at = tau_twist(c2, c3, a, a);
    std::vector<int> neutral(c2.order(), c3.identity());
    require(h1t.class_of[find_cocycle(h1t, at.alpha)] ==
                h1t.class_of[find_cocycle(h1t, neutral)],
            "twisting sends the twisting class to the neutral class");

    SimplicialSet d2 = standard_simplex(2, 2);
    SimplicialSet t1 = truncate(circle(2), 1);
    auto lhs = simplicial_maps(truncate(d2, 1), t1, 1, caps.enum_budget);
    auto rhs =
        simplicial_maps(d2, coskeleton_extend(t1, 2, caps.simplex_budget), 2,
                        caps.enum_budget);
    require(lhs.size() == rhs.size(), "truncation extension adjunction count");

    const FiniteGroup v4 = direct_product(c2, c2);
    PlaceFamily fam;
    fam.group = v4;
    fam.places = {{{0, 1}, {0, 1}}, {{0, 2}, {0, 2}}, {{0, 3}, {0, 3}}};
    fam.ramified.assign(3, 0);
    ShaResult sha = sha_kernel(GModule::trivial(v4, FinGenAb{0, {2}}), 1, fam,
                               caps.enum_budget);
    require(sha.kernel.group().order() == 1, "degree-1 joint restriction kernel");

    Tower tower{{2, 3}, {{0, 1, 1}}};
    require(inverse_limit_tower(tower, caps.enum_budget).nonempty,
            "tower limit nonempty");

    json r;
    r["checks"] = checks;
    r["ok"] = true;
    return r;
}

json run_command(const std::string& cmd, const Args& a) {
    const Caps& caps = a.caps;
    json inputs = json::object();
    json result;

    if (cmd == "selftest") {
        result = run_selftest(caps);
        json report;
        report["op"] = cmd;
        report["inputs"] = inputs;
        report["caps"] = {{"simplices", caps.simplex_budget},
                          {"order", caps.order_cap},
                          {"enum", caps.enum_budget},
                          {"seed", a.seed}};
        report["result"] = result;
        return report;
    }

    if (a.session_path.empty())
        throw invalid_input("this command needs --session FILE");
    Session S = load_session(a.session_path);

    if (cmd == "cosk") {
        const SimplicialSet& x = need(S.spaces, a.entity, "space");
        inputs = {{"space", a.entity}, {"n", a.n}};
        SimplicialSet c = coskeleton_extend(truncate(x, a.n), x.dim_bound(),
                                            caps.simplex_budget);
        result["input_counts"] = j_counts(x);
        result["counts"] = j_counts(c);
        result["nondegenerate"] = j_nondeg(c);
    } else if (cmd == "postnikov") {
        const SimplicialSet& x = need(S.spaces, a.entity, "space");
        inputs = {{"space", a.entity}, {"n", a.n}};
        SimplicialSet p = postnikov_piece(x, a.n, caps.simplex_budget);
        result["input_counts"] = j_counts(x);
        result["counts"] = j_counts(p);
        result["nondegenerate"] = j_nondeg(p);
    } else if (cmd == "eg") {
        const FiniteGroup& g = need(S.groups, a.entity, "group");
        inputs = {{"group", a.entity}, {"dim", a.n}};
        GSpace e = eg_space(g, a.n, caps.simplex_budget);
        result["counts"] = j_counts(e.space());
        result["free"] = is_free_action(e).free;
    } else if (cmd == "bg") {
        const FiniteGroup& g = need(S.groups, a.entity, "group");
        inputs = {{"group", a.entity}, {"dim", a.n}};
        SimplicialSet b = bg_space(g, a.n, caps.simplex_budget);
        result["counts"] = j_counts(b);
        result["nondegenerate"] = j_nondeg(b);
    } else if (cmd == "pi1") {
        const SimplicialSet& x = need(S.spaces, a.entity, "space");
        inputs = {{"space", a.entity}, {"vertex", a.vertex}};
        Pi1Result r = edge_path_pi1(x, a.vertex, caps.order_cap);
        result["order"] = r.group.order();
        result["abelian"] = r.group.is_abelian();
        std::vector<int> orders;
        for (int i = 0; i < r.group.order(); ++i)
            orders.push_back(r.group.element_order(i));
        std::sort(orders.begin(), orders.end());
        result["element_orders"] = orders;
    } else if (cmd == "quotient-pi1") {
        const GSpace& x = need(S.actions, a.entity, "action");
        inputs = {{"action", a.entity}, {"vertex", a.vertex}};
        ContractibleQuotientResult r = pi1_of_contractible_quotient(
            x, a.vertex, caps.order_cap, caps.enum_budget);
        result["kernel_size"] = static_cast<int>(r.kernel_elems.size());
        result["quotient_order"] = r.g_mod_k.group.order();
        result["pi1_order"] = r.quotient_pi1.group.order();
        result["isomorphic"] = !r.phi.empty();
    } else if (cmd == "hfp") {
        const GSpace& x = need(S.actions, a.entity, "action");
        inputs = {{"action", a.entity}};
        std::string how;
        Pi2Data pi2 = certify_pi2(x, caps.order_cap, caps.enum_budget, &how);
        HfpReport r = hfp_postnikov(x, pi2, caps.order_cap, caps.enum_budget);
        result["model"] = how;
        result["total"] = r.total;
        result["components"] = r.components.count;
        result["invariant_components"] = r.invariant_components;
        json cells = json::array();
        for (const HfpCell& c : r.cells) {
            json jc;
            jc["component"] = c.component;
            jc["section_class"] = c.section_class;
            jc["obstruction_vanishes"] = c.obstruction.extended || c.obstruction.vanishes;
            jc["classes"] = c.classes;
            cells.push_back(jc);
        }
        result["cells"] = cells;
    } else if (cmd == "hfp-brute") {
        const GSpace& x = need(S.actions, a.entity, "action");
        inputs = {{"action", a.entity}, {"level", a.n}};
        MapClasses r = hfp_bruteforce(x, a.n, caps.enum_budget);
        result["maps"] = static_cast<int>(r.maps.size());
        result["classes"] = static_cast<int>(r.reps.size());
    } else if (cmd == "sections") {
        const Extension& e = need(S.extensions, a.entity, "extension");
        inputs = {{"extension", a.entity}};
        SectionSet r = section_classes(e, caps.enum_budget);
        result["sections"] = static_cast<int>(r.sections.size());
        result["classes"] = static_cast<int>(r.reps.size());
    } else if (cmd == "obstruction") {
        const GSpace& x = need(S.actions, a.entity, "action");
        inputs = {{"action", a.entity}};
        std::string how;
        Pi2Data pi2 = certify_pi2(x, caps.order_cap, caps.enum_budget, &how);
        HfpReport r = hfp_postnikov(x, pi2, caps.order_cap, caps.enum_budget);
        result["model"] = how;
        json cells = json::array();
        for (const HfpCell& c : r.cells) {
            json jc;
            jc["component"] = c.component;
            jc["section_class"] = c.section_class;
            jc["degree"] = c.obstruction.degree + 1;
            jc["extended"] = c.obstruction.extended;
            jc["vanishes"] = c.obstruction.extended || c.obstruction.vanishes;
            jc["class"] = j_zvec(c.obstruction.cls);
            cells.push_back(jc);
        }
        result["cells"] = cells;
    } else if (cmd == "e2") {
        const GSpace& x = need(S.actions, a.entity, "action");
        inputs = {{"action", a.entity}, {"s_max", a.s_max}, {"t_max", a.t_max}};
        std::string how;
        Pi2Data pi2 = certify_pi2(x, caps.order_cap, caps.enum_budget, &how);
        MapClasses brute = hfp_bruteforce(x, 3, caps.enum_budget);
        result["model"] = how;
        result["base_exists"] = !brute.reps.empty();
        json rows = json::array();
        if (!brute.reps.empty()) {
            const SimplicialMap& base = brute.maps[brute.reps[0]];
            E2Page page = e2_page(x, base, pi2, a.s_max, a.t_max, caps.order_cap,
                                  caps.enum_budget);
            for (int s = 0; s <= page.s_max; ++s) {
                json row = json::array();
                for (int t = 0; t <= page.t_max; ++t) {
                    const E2Entry& e = page.entry[s][t];
                    json je;
                    je["in_region"] = e.in_region;
                    je["computed"] = e.computed;
                    if (e.computed && e.is_group)
                        je["group"] = e.group.str();
                    else if (e.computed)
                        je["size"] = e.set_size;
                    row.push_back(je);
                }
                rows.push_back(row);
            }
        }
        result["entries"] = rows;
    } else if (cmd == "cohomology") {
        const GModule& m = need(S.modules, a.entity, "module");
        inputs = {{"module", a.entity}, {"n", a.n}};
        result["group"] = j_ab(group_cohomology(m, a.n).group());
    } else if (cmd == "h1na") {
        const NamedGroupAction& ga = need(S.gactions, a.entity, "gaction");
        inputs = {{"gaction", a.entity}};
        const FiniteGroup& g = need(S.groups, ga.group, "group");
        const FiniteGroup& t = need(S.groups, ga.target, "group");
        NonabelianH1 r = h1_nonabelian(g, t, ga.act, caps.enum_budget);
        result["cocycles"] = static_cast<int>(r.cocycles.size());
        result["classes"] = static_cast<int>(r.reps.size());
        json reps = json::array();
        for (int i : r.reps) reps.push_back(r.cocycles[i].alpha);
        result["reps"] = reps;
    } else if (cmd == "twist") {
        const NamedGroupAction& ga = need(S.gactions, a.entity, "gaction");
        inputs = {{"gaction", a.entity}, {"alpha", a.alpha}};
        const FiniteGroup& g = need(S.groups, ga.group, "group");
        const FiniteGroup& t = need(S.groups, ga.target, "group");
        Cocycle1 alpha{a.alpha};
        validate_cocycle1(g, t, ga.act, alpha);
        GroupOnGroup twisted = twist_action(g, t, ga.act, alpha);
        NonabelianH1 before = h1_nonabelian(g, t, ga.act, caps.enum_budget);
        NonabelianH1 after = h1_nonabelian(g, t, twisted, caps.enum_budget);
        result["classes_before"] = static_cast<int>(before.reps.size());
        result["classes_after"] = static_cast<int>(after.reps.size());
        json mapping = json::array();
        for (size_t c = 0; c < before.reps.size(); ++c) {
            Cocycle1 beta = before.cocycles[before.reps[c]];
            Cocycle1 tau = tau_twist(g, t, alpha, beta);
            mapping.push_back(after.class_of[find_cocycle(after, tau.alpha)]);
        }
        result["class_map"] = mapping;
        std::vector<int> neutral(g.order(), t.identity());
        int neutral_class = after.class_of[find_cocycle(after, neutral)];
        Cocycle1 self = tau_twist(g, t, alpha, alpha);
        result["alpha_to_neutral"] =
            after.class_of[find_cocycle(after, self.alpha)] == neutral_class;
    } else if (cmd == "dold-kan") {
        const GComplex& c = need(S.complexes, a.entity, "complex");
        inputs = {{"complex", a.entity}};
        // One spare level: the alternating-sum complex of a truncation keeps
        // its degenerate summands at the top level, so drop that degree.
        const int dim = c.hi() + 2;
        SimplicialGAb dk = dold_kan_overline_g(c, dim);
        GComplex back = moore_underline_g(dk);
        auto h_orig = chain_homology(underlying_complex(c));
        auto h_back = chain_homology(underlying_complex(back));
        bool all = true;
        json degrees = json::array();
        for (int n = 0; n < dim; ++n) {
            FinGenAb orig;
            if (n >= c.lo && n <= c.hi()) orig = h_orig[n - c.lo];
            const FinGenAb& rt = h_back[n - back.lo];
            bool agree = orig.same_shape(rt);
            all = all && agree;
            json jd;
            jd["degree"] = n;
            jd["original"] = orig.str();
            jd["roundtrip"] = rt.str();
            jd["agree"] = agree;
            degrees.push_back(jd);
        }
        result["degrees"] = degrees;
        result["homology_preserved"] = all;
    } else if (cmd == "hyperc") {
        const GComplex& c = need(S.complexes, a.entity, "complex");
        inputs = {{"complex", a.entity}, {"n", a.n}};
        result["group"] = j_ab(hypercohomology(c, a.n).group());
    } else if (cmd == "les") {
        const SesOfGComplexes& s = need(S.sequences, a.entity, "sequence");
        inputs = {{"sequence", a.entity}, {"lo", a.n}, {"hi", a.m}};
        LesReport r = les_check(s, a.n, a.m);
        result["exact"] = r.exact;
        if (!r.exact) {
            result["fail_degree"] = r.fail_degree;
            result["fail_slot"] = r.fail_slot;
        }
        auto strs = [](const std::vector<FinGenAb>& v) {
            json out = json::array();
            for (const auto& g : v) out.push_back(g.str());
            return out;
        };
        result["ha"] = strs(r.ha);
        result["hb"] = strs(r.hb);
        result["hc"] = strs(r.hc);
    } else if (cmd == "classify-torsor") {
        const PrincipalGSet& p = need(S.principals, a.entity, "principal");
        inputs = {{"principal", a.entity}};
        TorsorClass tc = classify_torsor(p, caps.enum_budget);
        result["class_index"] = tc.class_index;
        result["classes"] = static_cast<int>(tc.h1.reps.size());
        result["cocycle"] = tc.cocycle.alpha;
        std::vector<int> neutral(p.galois.order(), p.structure_group.identity());
        result["neutral"] =
            tc.class_index == tc.h1.class_of[find_cocycle(tc.h1, neutral)];
    } else if (cmd == "cocycle-extract") {
        const TorsorData& t = need(S.torsors, a.entity, "torsor");
        inputs = {{"torsor", a.entity}};
        ClassifyingMapResult cm = classifying_map(t, 3, caps.simplex_budget);
        GSpace en3 = eg_space(t.galois, 3, caps.simplex_budget);
        MapClasses brute = hfp_bruteforce(cm.nerve, 3, caps.enum_budget);
        NonabelianH1 h1 =
            h1_nonabelian(t.galois, t.structure_group, t.galois_on_g, caps.enum_budget);
        result["classes_total"] = static_cast<int>(h1.reps.size());
        result["map_classes"] = static_cast<int>(brute.reps.size());
        json reps = json::array();
        for (int ri : brute.reps) {
            SimplicialMap h = compose_maps(en3.space(), cm.nerve.space(),
                                           cm.one_object.space(), brute.maps[ri],
                                           cm.map, 3);
            Cocycle1 alpha = cocycle_from_hfp(t.galois, t.structure_group,
                                              t.galois_on_g, en3, cm.one_object, h,
                                              caps.enum_budget);
            json jr;
            jr["cocycle"] = alpha.alpha;
            jr["class"] = h1.class_of[find_cocycle(h1, alpha.alpha)];
            reps.push_back(jr);
        }
        result["reps"] = reps;
    } else if (cmd == "localize") {
        const GSpace& x = need(S.actions, a.entity, "action");
        const PlaceFamily& fam = need(S.families, a.entity2, "family");
        inputs = {{"action", a.entity}, {"family", a.entity2}, {"level", a.n}};
        LocalizationData d = localize(x, fam, a.n, caps.enum_budget);
        result["global_classes"] = static_cast<int>(d.global.reps.size());
        json places = json::array();
        for (size_t v = 0; v < d.local.size(); ++v) {
            json jp;
            jp["local_classes"] = static_cast<int>(d.local[v].classes.reps.size());
            jp["ramified"] = static_cast<bool>(fam.ramified[v]);
            jp["unramified_inner"] = static_cast<int>(d.unram[v].inner.reps.size());
            jp["unramified_image"] = static_cast<int>(d.unram[v].image.size());
            places.push_back(jp);
        }
        result["places"] = places;
        result["loc"] = d.loc_of;
        json fibers = json::array();
        std::vector<std::vector<int>> seen;
        for (size_t c = 0; c < d.loc_of.size(); ++c) {
            if (std::find(seen.begin(), seen.end(), d.loc_of[c]) != seen.end())
                continue;
            seen.push_back(d.loc_of[c]);
            json jf;
            jf["tuple"] = d.loc_of[c];
            jf["classes"] = loc_fiber(d, loc_map(d, static_cast<int>(c)));
            fibers.push_back(jf);
        }
        result["fibers"] = fibers;
    } else if (cmd == "sha") {
        const GModule& m = need(S.modules, a.entity, "module");
        const PlaceFamily& fam = need(S.families, a.entity2, "family");
        inputs = {{"module", a.entity}, {"family", a.entity2}, {"n", a.n}};
        ShaResult r = sha_kernel(m, a.n, fam, caps.enum_budget);
        result["global"] = j_ab(r.global.group());
        json locals = json::array();
        for (const auto& l : r.local) locals.push_back(j_ab(l.group()));
        result["local"] = locals;
        result["kernel"] = j_ab(r.kernel.group());
        result["kernel_generators"] = static_cast<int>(r.cocycle_reps.size());
    } else if (cmd == "obstruction-set") {
        const GSpace& x = need(S.actions, a.entity, "action");
        const PlaceFamily& fam = need(S.families, a.entity2, "family");
        inputs = {{"action", a.entity}, {"family", a.entity2}, {"level", a.n}};
        LocalizationData d = localize(x, fam, a.n, caps.enum_budget);
        std::vector<AdelicClassTuple> pts = adelic_set(d, caps.enum_budget);
        std::vector<SurvivingPoint> sv = obstruction_set(d, pts);
        result["points"] = static_cast<int>(pts.size());
        json tuples = json::array();
        for (const auto& p : pts) tuples.push_back(p.local_class);
        result["tuples"] = tuples;
        json survivors = json::array();
        for (const auto& s : sv) {
            json js;
            js["point"] = s.point;
            js["witness"] = s.witness;
            survivors.push_back(js);
        }
        result["survivors"] = survivors;
    } else if (cmd == "limit") {
        const Tower& t = need(S.towers, a.entity, "tower");
        inputs = {{"tower", a.entity}};
        TowerLimit r = inverse_limit_tower(t, caps.enum_budget);
        result["threads"] = static_cast<int>(r.threads.size());
        result["nonempty"] = r.nonempty;
        result["witness"] = r.witness;
    } else {
        throw invalid_input("unknown command '" + cmd + "'");
    }

    json report;
    report["op"] = cmd;
    report["inputs"] = inputs;
    report["caps"] = {{"simplices", caps.simplex_budget},
                      {"order", caps.order_cap},
                      {"enum", caps.enum_budget},
                      {"seed", a.seed}};
    report["result"] = result;
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite equivariant simplicial machinery"};
    app.require_subcommand(1);
    app.fallthrough();

    Args a;
    app.add_option("--session", a.session_path, "Session file of named objects");
    app.add_option("--out", a.out_path, "Write the report here instead of stdout");
    app.add_option("--cap-simplices", a.caps.simplex_budget,
                   "Max simplices materialized per construction");
    app.add_option("--cap-order", a.caps.order_cap, "Max realized group order");
    app.add_option("--cap-enum", a.caps.enum_budget, "Max search nodes per enumeration");
    app.add_option("--seed", a.seed, "Recorded in the report");

    auto sub = [&](const char* name, const char* desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    CLI::App* c;
    c = sub("cosk", "Right extension of the n-truncation of a space");
    c->add_option("space", a.entity)->required();
    c->add_option("n", a.n)->required();
    c = sub("postnikov", "Stage-n quotient piece of a space");
    c->add_option("space", a.entity)->required();
    c->add_option("n", a.n)->required();
    c = sub("eg", "Translation space of a group up to a dimension");
    c->add_option("group", a.entity)->required();
    c->add_option("dim", a.n)->required();
    c = sub("bg", "One-object nerve of a group up to a dimension");
    c->add_option("group", a.entity)->required();
    c->add_option("dim", a.n)->required();
    c = sub("pi1", "Edge path group of a space at a vertex");
    c->add_option("space", a.entity)->required();
    c->add_option("vertex", a.vertex);
    c = sub("quotient-pi1", "Path group of the orbit space of a contractible action");
    c->add_option("action", a.entity)->required();
    c->add_option("vertex", a.vertex);
    c = sub("hfp", "Staged fixed-point classes of an action");
    c->add_option("action", a.entity)->required();
    c = sub("hfp-brute", "Exhaustive fixed-point classes at a level");
    c->add_option("action", a.entity)->required();
    c->add_option("level", a.n)->required();
    c = sub("sections", "Homomorphic sections of an extension up to conjugacy");
    c->add_option("extension", a.entity)->required();
    c = sub("obstruction", "Extension obstruction per component and section class");
    c->add_option("action", a.entity)->required();
    c = sub("e2", "Cohomology page at a base equivariant map");
    c->add_option("action", a.entity)->required();
    c->add_option("s_max", a.s_max);
    c->add_option("t_max", a.t_max);
    c = sub("cohomology", "Group cohomology of a module in one degree");
    c->add_option("module", a.entity)->required();
    c->add_option("n", a.n)->required();
    c = sub("h1na", "Degree-1 classes for a nonabelian coefficient group");
    c->add_option("gaction", a.entity)->required();
    c = sub("twist", "Twist an action by a degree-1 cocycle and map the classes");
    c->add_option("gaction", a.entity)->required();
    c->add_option("alpha", a.alpha, "Cocycle values per acting element")->required();
    c = sub("dold-kan", "Round trip a complex through its simplicial model");
    c->add_option("complex", a.entity)->required();
    c = sub("hyperc", "Total-complex cohomology of an equivariant complex");
    c->add_option("complex", a.entity)->required();
    c->add_option("n", a.n)->required();
    c = sub("les", "Exactness of the long sequence of a short exact sequence");
    c->add_option("sequence", a.entity)->required();
    c->add_option("lo", a.n)->required();
    c->add_option("hi", a.m)->required();
    c = sub("classify-torsor", "Degree-1 class of a principal set");
    c->add_option("principal", a.entity)->required();
    c = sub("cocycle-extract", "Cocycles read off the classifying map of a cover");
    c->add_option("torsor", a.entity)->required();
    c = sub("localize", "Restriction of fixed-point classes to a place family");
    c->add_option("action", a.entity)->required();
    c->add_option("family", a.entity2)->required();
    c->add_option("level", a.n)->required();
    c = sub("sha", "Joint kernel of cohomology restriction over a place family");
    c->add_option("module", a.entity)->required();
    c->add_option("n", a.n)->required();
    c->add_option("family", a.entity2)->required();
    c = sub("obstruction-set", "Adelic points surviving the global restriction");
    c->add_option("action", a.entity)->required();
    c->add_option("family", a.entity2)->required();
    c->add_option("level", a.n)->required();
    c = sub("limit", "Compatible threads of a finite tower of sets");
    c->add_option("tower", a.entity)->required();
    sub("selftest", "Run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    }

    const std::string cmd = app.get_subcommands().at(0)->get_name();
    try {
        emit(run_command(cmd, a), a.out_path);
    } catch (const cap_exceeded& e) {
        std::cerr << "cap exceeded (" << e.cap_name << "): " << e.what() << "\n";
        return 3;
    } catch (const invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
