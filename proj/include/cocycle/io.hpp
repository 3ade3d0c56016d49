#pragma once

// JSON forms of the library's values. Rationals and circle values are "a/b" strings throughout.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cocycle/bar.hpp"
#include "cocycle/flow.hpp"
#include "cocycle/obstruction.hpp"

namespace cocycle::io {

using json = nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);
json to_json(const std::vector<CircleValue>& v);
std::vector<CircleValue> circle_values_from_json(const json& j);

// {"name", "order", "table"}
json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);
// A preset name, or a path to a group file.
FiniteGroup resolve_group(const std::string& spec);

// {"degree", "group", "coeff": {"kind": "circle", "M"} | {"kind": "cyclics", "orders"}, "values": {"i,j,k": ..}}.
// Circle values are "a/b", cyclic values are integer vectors in element coordinates. Zero entries
// are omitted; the action is not recorded.
json cochain_to_json(const FiniteGroup& g, const CoefficientModule& a, const GroupCochain& c);
GroupCochain cochain_from_json(const json& j, const FiniteGroup& g);
// Just the "values" object, for circle-valued cochains embedded in other files.
json values_to_json(const GroupCochain& c);
GroupCochain values_from_json(const json& j, const FiniteGroup& g, int degree);
// "1,0,2" -> {1,0,2}; the empty string is the degree-0 tuple.
std::vector<Element> parse_tuple(const std::string& key, int order, int degree);

json to_json(const FinAbReport& r);
FinAbReport report_from_json(const json& j);

// {"setup": {"group", "subgroup", "modulus": {"g": "a/b"}, "section"}, "cbar", "d", "nu": {"n": "a/b"}}.
// The modulus is in units of T' and may list generators only (absent means zero); nu is keyed by
// elements of N and defaults to zero.
json setup_to_json(const ModulusSetup& s);
ModulusSetup setup_from_json(const json& j);
json to_json(const ModulusSetup& s, const ObstructionDatum& x);
std::pair<ModulusSetup, ObstructionDatum> datum_from_json(const json& j);

json to_json(const FlowReport& r);
FlowReport flow_report_from_json(const json& j);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

struct RunReport {
    std::vector<std::string> command;
    std::string version;
    std::string inputs_digest;  // FNV-1a 64 of the canonical inputs
    std::int64_t denominator = 0;
    std::int64_t resolution = 0;
    std::uint64_t seed = 0;
    json results;
    double seconds = 0;  // the only nondeterministic field

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

json to_json(const RunReport& r);
RunReport run_report_from_json(const json& j);

// Inputs that are not JSON or miss required keys raise input_error.
json read_json_file(const std::string& path);
// Pretty-printed with a trailing newline.
void write_json_file(const std::string& path, const json& j);

}  // namespace cocycle::io
