#pragma once
// Named stores of library objects parsed from a JSON session file.  Every
// entity is validated eagerly on load and failures name the entity; the
// canonical serialization (sorted keys, two-space indent) makes load
// followed by serialize a byte-stable round trip.

#include <map>
#include <string>

#include "eqsimp/abelian.hpp"
#include "eqsimp/descent.hpp"
#include "eqsimp/equivariant.hpp"
#include "eqsimp/group.hpp"
#include "eqsimp/homalg.hpp"
#include "eqsimp/localglobal.hpp"
#include "eqsimp/simplicial.hpp"

namespace eqsimp {

// An action of one stored group on another by automorphisms, with the
// names kept so commands can recover both groups.
struct NamedGroupAction {
    std::string group, target;
    GroupOnGroup act;
};

struct Session {
    std::map<std::string, FiniteGroup> groups;
    std::map<std::string, GModule> modules;
    std::map<std::string, SimplicialSet> spaces;
    std::map<std::string, GSpace> actions;
    std::map<std::string, NamedGroupAction> gactions;
    std::map<std::string, GComplex> complexes;
    std::map<std::string, SesOfGComplexes> sequences;
    std::map<std::string, Extension> extensions;
    std::map<std::string, PrincipalGSet> principals;
    std::map<std::string, TorsorData> torsors;
    std::map<std::string, PlaceFamily> families;
    std::map<std::string, Tower> towers;
    std::string canonical;  // canonical text of the loaded file
};

// Parse and validate a session from JSON text; throws invalid_input whose
// message names the failing entity.
Session parse_session(const std::string& text);
Session load_session(const std::string& path);
std::string serialize_session(const Session& s);

}  // namespace eqsimp
