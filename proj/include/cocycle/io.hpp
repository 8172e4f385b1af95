#pragma once

// Text and JSON descriptors for groups, modules, actions and cochains, plus
// the run manifest written next to every CLI report.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cocycle/cochain.hpp"
#include "cocycle/rational.hpp"

namespace cocycle {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

// Groups: factors joined by 'x', each one of cyclic:m, Zm, dihedral:n, Dn
// (order 2n), quaternion, Q8, symmetric:n, Sn, klein, V4. A JSON object or
// '@path' is read as a JSON descriptor:
//   {"type":"cyclic","order":m}  {"type":"dihedral","n":n}
//   {"type":"quaternion"}  {"type":"symmetric","degree":n}
//   {"type":"product","factors":[...]}  {"type":"table","table":[[...]]}
FiniteGroup parse_group(const std::string& text);
FiniteGroup group_from_json(const Json& j);

// Modules: terms joined by '+', each free:r, torsion:m1,m2,... or cyclic:m;
// "zero" is the trivial group. JSON form {"rank":r,"torsion":[...]}.
AbelianGroup parse_module(const std::string& text);
AbelianGroup module_from_json(const Json& j);

// Actions: empty or "trivial"; a JSON array with one matrix per element; or
// {"generators":{"g":matrix,...}} closed up over the group. Matrices act on
// coordinate columns. Throws InputError when the result is not an action.
std::shared_ptr<const GAction> parse_action(const FiniteGroup& G, const AbelianGroup& A, const std::string& text);

// Cochains as {"g1,...,gp": value} with value an integer (one coordinate)
// or an array of coordinates; unlisted tuples are zero.
Cochain cochain_from_json(std::shared_ptr<const GAction> S, int p, const Json& j);
Json cochain_to_json(const Cochain& c);
// Same form for a table indexed by (g, g').
Json table_to_json(const std::vector<std::vector<int>>& t);

// Element lists "0,2,4".
std::vector<int> parse_index_list(const std::string& text);

// "num/den" or "0".
std::string rational_string(const Rational& r);

Json read_json_argument(const std::string& text);

uint64_t fnv1a64(std::string_view data);
// "fnv1a64:" followed by 16 hex digits of the compact dump.
std::string results_digest(const Json& results);

struct RunManifest {
    std::string command;
    Json inputs = Json::object();       // flag name -> value, usable as --config
    uint64_t seed = 0;
    Json tolerances = Json::object();
    Json grid = Json::object();
    std::string tool_version = kToolVersion;
    std::string digest;

    Json to_json() const;
};

}  // namespace cocycle
