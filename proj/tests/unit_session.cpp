#include <doctest.h>

#include <string>

#include "eqsimp/config.hpp"
#include "eqsimp/session.hpp"

using namespace eqsimp;

namespace {

const char* kFull = R"json({
  "note": "coverage of every section",
  "groups": {
    "c2": {"table": [[0,1],[1,0]], "identity": 0, "names": ["e","t"]},
    "c3": {"table": [[0,1,2],[1,2,0],[2,0,1]], "identity": 0},
    "t1": {"table": [[0]], "identity": 0},
    "v4": {"table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]], "identity": 0}
  },
  "modules": {
    "m2": {"group": "c2", "rank": 0, "torsion": [2]},
    "zsign": {"group": "c2", "rank": 1, "torsion": [], "action": [[[1]],[[-1]]], "note": "sign"}
  },
  "spaces": {
    "seg": {"dim_bound": 1, "counts": [2, 3],
            "faces": [[[], []], [[0,0],[1,1],[1,0]]],
            "degens": [[[0],[1]], [[],[],[]]]}
  },
  "actions": {
    "trivseg": {"group": "c2", "space": "seg"},
    "flipseg": {"group": "c2", "space": "seg",
                "table": [[[0,1],[0,1,2]], [[1,0],[1,0,2]]]}
  },
  "gactions": {
    "inv3": {"group": "c2", "target": "c3", "maps": [[0,1,2],[0,2,1]]}
  },
  "complexes": {
    "two": {"group": "c2", "lo": 0,
            "modules": [{"rank": 0, "torsion": [2]}, {"rank": 0, "torsion": [2]}],
            "d": [[], [[0]]]},
    "a2": {"group": "t1", "lo": 0, "modules": [{"rank": 0, "torsion": [2]}], "d": [[]]},
    "b4": {"group": "t1", "lo": 0, "modules": [{"rank": 0, "torsion": [4]}], "d": [[]]}
  },
  "sequences": {
    "bock": {"a": "a2", "b": "b4", "c": "a2", "f": [[[2]]], "g": [[[1]]]}
  },
  "extensions": {
    "split4": {"total": "v4", "kernel": "c2", "quotient": "c2",
               "inclusion": [0, 1], "projection": [0, 0, 1, 1]}
  },
  "principals": {
    "ptriv": {"structure_group": "c2", "galois": "c2", "size": 2,
              "g_act": [[0,1],[1,0]], "galois_act": [[0,1],[0,1]],
              "galois_on_g": [[0,1],[0,1]]}
  },
  "torsors": {
    "tor1": {"structure_group": "c2", "galois": "c2", "components": 1,
             "g_on_p": [[0],[0]], "galois_on_p": [[0],[0]],
             "galois_on_g": [[0,1],[0,1]]}
  },
  "families": {
    "fam": {"group": "v4", "places": [{"H": [0,1], "I": [0]}], "ramified": [0]}
  },
  "towers": {
    "tw": {"sizes": [2, 3], "maps": [[0, 1, 1]]}
  }
})json";

std::string error_of(const std::string& text) {
    try {
        parse_session(text);
    } catch (const invalid_input& e) {
        return e.what();
    }
    return "";
}

bool mentions(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("a session with every section loads") {
    auto s = parse_session(kFull);
    CHECK(s.groups.size() == 4);
    CHECK(s.groups.at("c2").name(1) == "t");
    CHECK(s.groups.at("v4").order() == 4);
    CHECK(s.modules.size() == 2);
    CHECK(s.modules.at("zsign").mod().rank == 1);
    CHECK(s.modules.at("zsign").act(1, ZVec{3}) == ZVec{-3});
    CHECK(s.modules.at("m2").act(1, ZVec{1}) == ZVec{1});
    CHECK(s.spaces.at("seg").count(1) == 3);
    CHECK(s.spaces.at("seg").nondegenerate_count(1) == 1);
    CHECK(s.actions.at("trivseg").act(1, 0, 1) == 1);
    CHECK(s.actions.at("flipseg").act(1, 0, 1) == 0);
    CHECK(s.gactions.at("inv3").group == "c2");
    CHECK(s.gactions.at("inv3").target == "c3");
    CHECK(s.gactions.at("inv3").act.apply(1, 1) == 2);
    CHECK(s.complexes.at("two").hi() == 1);
    CHECK(s.sequences.at("bock").a.groups.size() == 1);
    CHECK(s.extensions.at("split4").total.order() == 4);
    CHECK(s.principals.at("ptriv").size == 2);
    CHECK(s.torsors.at("tor1").components == 1);
    CHECK(s.families.at("fam").places.size() == 1);
    CHECK(s.families.at("fam").ramified == std::vector<char>{1});
    CHECK(s.towers.at("tw").sizes == std::vector<int>{2, 3});
}

TEST_CASE("serialization is canonical and stable") {
    auto s = parse_session(kFull);
    auto text = serialize_session(s);
    CHECK_FALSE(text.empty());
    CHECK(text.back() == '\n');
    auto s2 = parse_session(text);
    CHECK(serialize_session(s2) == text);
}

TEST_CASE("parse failures name the entity and the rule") {
    CHECK(mentions(error_of("this is not json"), "session:"));
    CHECK(mentions(error_of(R"({"bogus": {}})"), "unknown section 'bogus'"));
    CHECK(mentions(error_of(R"({"groups": {"g": {"identity": 0}}})"), "missing field 'table'"));
    CHECK(mentions(error_of(R"({"groups": {"g": {"table": [[0,1],[1,1]], "identity": 0}}})"),
                   "group 'g'"));
    CHECK(mentions(
        error_of(R"({"groups": {"g": {"table": [[0]], "identity": 0, "extra": 1}}})"),
        "unknown field 'extra'"));
    CHECK(mentions(
        error_of(R"({"modules": {"m": {"group": "nope", "rank": 0, "torsion": [2]}}})"),
        "unknown group 'nope'"));
    CHECK(mentions(error_of(R"({"groups": {"c2": {"table": [[0,1],[1,0]], "identity": 0}},
                               "modules": {"m": {"group": "c2", "rank": 0, "torsion": [2,3]}}})"),
                   "divide"));
    CHECK(mentions(error_of(R"({"spaces": {"bad": {"dim_bound": 1, "counts": [1,1],
                                "faces": [[[]],[[0,5]]], "degens": [[[0]],[[]]]}}})"),
                   "space 'bad'"));
    CHECK(mentions(error_of(R"({"towers": {"t": {"sizes": [2,2], "maps": [[0,5]]}}})"),
                   "tower 't'"));
    CHECK(mentions(error_of(R"({"groups": {"g": {"table": [[0]], "identity": 0, "note": 7}}})"),
                   "note must be a string"));
}

TEST_CASE("missing session files are reported as invalid input") {
    CHECK_THROWS_AS(load_session("/nonexistent/session.json"), invalid_input);
}
