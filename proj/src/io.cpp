#include "cocycle/io.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace cocycle::io {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw input_error(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::string tuple_key(const std::vector<Element>& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s;
}

Element element_key(const std::string& key, int order) {
    auto t = parse_tuple(key, order, 1);
    return t[0];
}

json string_array(const std::vector<CircleValue>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw input_error("rationals must be \"a/b\" strings, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

json to_json(const std::vector<CircleValue>& v) { return string_array(v); }

std::vector<CircleValue> circle_values_from_json(const json& j) {
    if (!j.is_array()) throw input_error("expected an array of \"a/b\" strings");
    std::vector<CircleValue> out;
    for (const auto& x : j) out.emplace_back(rational_from_json(x));
    return out;
}

json to_json(const FiniteGroup& g) { return {{"name", g.name()}, {"order", g.order()}, {"table", g.table()}}; }

FiniteGroup group_from_json(const json& j) {
    const auto& t = need(j, "table");
    if (!t.is_array()) throw input_error("group table must be an array of rows");
    std::vector<std::vector<int>> table;
    for (const auto& row : t) {
        if (!row.is_array()) throw input_error("group table must be an array of rows");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw input_error("group table entries must be integers");
            r.push_back(x.get<int>());
        }
        table.push_back(std::move(r));
    }
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "G";
    FiniteGroup g(name, table);
    if (j.contains("order") && j.at("order").get<int>() != g.order()) throw input_error("group order does not match its table");
    return g;
}

FiniteGroup resolve_group(const std::string& spec) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) return group_from_json(read_json_file(spec));
    return build_group(spec);
}

std::vector<Element> parse_tuple(const std::string& key, int order, int degree) {
    std::vector<Element> t;
    if (!key.empty()) {
        std::stringstream ss(key);
        std::string part;
        while (std::getline(ss, part, ',')) {
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(part, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != part.size() || part.empty()) throw input_error("bad tuple key \"" + key + "\"");
            if (v < 0 || v >= order) throw input_error("tuple key \"" + key + "\" leaves the group");
            t.push_back(v);
        }
    }
    if (static_cast<int>(t.size()) != degree)
        throw input_error("tuple key \"" + key + "\" has length " + std::to_string(t.size()) + ", expected " + std::to_string(degree));
    return t;
}

json values_to_json(const GroupCochain& c) {
    json v = json::object();
    for (std::size_t i = 0; i < c.tuples(); ++i) {
        if (c.values[i * c.width].is_zero()) continue;
        v[tuple_key(decode_tuple(i, c.group_order, c.degree))] = c.values[i * c.width].str();
    }
    return v;
}

GroupCochain values_from_json(const json& j, const FiniteGroup& g, int degree) {
    if (!j.is_object()) throw input_error("cochain values must be an object keyed by tuples");
    GroupCochain c = zero_cochain(g, circle_module(g), degree);
    for (const auto& [key, val] : j.items()) {
        auto t = parse_tuple(key, g.order(), degree);
        std::size_t idx = 0;
        for (Element e : t) idx = idx * sz(g.order()) + sz(e);
        c.values[idx] = CircleValue(rational_from_json(val));
    }
    return c;
}

json cochain_to_json(const FiniteGroup& g, const CoefficientModule& a, const GroupCochain& c) {
    json coeff;
    if (a.carrier.is_circle()) {
        if (a.width() != 1) throw input_error("cochain files hold one circle coordinate");
        // the smallest multiple of the module's bound that holds every value
        std::int64_t M = default_bound(g, a);
        for (const auto& v : c.values) M = lcm(M, v.denominator());
        coeff = {{"kind", "circle"}, {"M", M}};
    } else {
        coeff = {{"kind", "cyclics"}, {"orders", a.carrier.moduli}};
    }
    json values = json::object();
    for (std::size_t i = 0; i < c.tuples(); ++i) {
        const CircleValue* x = c.values.data() + i * c.width;
        if (std::all_of(x, x + c.width, [](const CircleValue& v) { return v.is_zero(); })) continue;
        auto key = tuple_key(decode_tuple(i, c.group_order, c.degree));
        if (a.carrier.is_circle()) {
            values[key] = x[0].str();
        } else {
            json u = json::array();
            for (std::size_t k = 0; k < c.width; ++k) {
                Rational e = x[k].value() * Rational(a.carrier.moduli[k]);
                u.push_back(e.num());
            }
            values[key] = u;
        }
    }
    return {{"degree", c.degree}, {"group", g.name()}, {"coeff", coeff}, {"values", values}};
}

GroupCochain cochain_from_json(const json& j, const FiniteGroup& g) {
    int degree = need(j, "degree").get<int>();
    if (degree < 0 || degree > 4) throw input_error("cochain degree out of range");
    const auto& coeff = need(j, "coeff");
    std::string kind = need(coeff, "kind").get<std::string>();
    if (kind == "circle") {
        GroupCochain c = values_from_json(need(j, "values"), g, degree);
        if (coeff.contains("M")) {
            auto M = coeff.at("M").get<std::int64_t>();
            for (const auto& v : c.values)
                if (M > 0 && M % v.denominator() != 0) throw input_error("cochain value " + v.str() + " is outside (1/M)Z/Z");
        }
        return c;
    }
    if (kind != "cyclics") throw input_error("unknown coefficient kind \"" + kind + "\"");
    auto orders = need(coeff, "orders").get<std::vector<std::int64_t>>();
    auto a = cyclic_module(g, orders);
    GroupCochain c = zero_cochain(g, a, degree);
    for (const auto& [key, val] : need(j, "values").items()) {
        auto t = parse_tuple(key, g.order(), degree);
        std::size_t idx = 0;
        for (Element e : t) idx = idx * sz(g.order()) + sz(e);
        if (!val.is_array() || val.size() != orders.size()) throw input_error("cyclic value at \"" + key + "\" has the wrong length");
        for (std::size_t k = 0; k < orders.size(); ++k) c.values[idx * c.width + k] = CircleValue(val[k].get<std::int64_t>(), orders[k]);
    }
    return c;
}

json to_json(const FinAbReport& r) {
    json reps = json::array();
    for (const auto& v : r.representatives) reps.push_back(string_array(v));
    return {{"degree", r.degree},
            {"invariant_factors", r.invariant_factors},
            {"order", r.order()},
            {"representatives", reps},
            {"bound", r.bound},
            {"exact_torsion", r.exact_torsion},
            {"continuous_rank", r.continuous_rank},
            {"verified", r.verified},
            {"stable", r.stable}};
}

FinAbReport report_from_json(const json& j) {
    FinAbReport r;
    r.degree = need(j, "degree").get<int>();
    r.invariant_factors = need(j, "invariant_factors").get<std::vector<std::int64_t>>();
    for (const auto& v : need(j, "representatives")) r.representatives.push_back(circle_values_from_json(v));
    r.bound = need(j, "bound").get<std::int64_t>();
    r.exact_torsion = need(j, "exact_torsion").get<std::vector<std::int64_t>>();
    r.continuous_rank = need(j, "continuous_rank").get<std::int64_t>();
    r.verified = need(j, "verified").get<bool>();
    r.stable = need(j, "stable").get<bool>();
    return r;
}

json setup_to_json(const ModulusSetup& s) {
    json m = json::object();
    for (Element a = 0; a < s.G.order(); ++a) m[std::to_string(a)] = s.m[sz(a)].value.str();
    return {{"group", to_json(s.G)}, {"subgroup", s.N.elements}, {"modulus", m}, {"section", s.section.choice}};
}

ModulusSetup setup_from_json(const json& j) {
    const auto& gj = need(j, "group");
    FiniteGroup g = gj.is_string() ? resolve_group(gj.get<std::string>()) : group_from_json(gj);
    auto elems = need(j, "subgroup").get<std::vector<Element>>();
    for (Element e : elems)
        if (e < 0 || e >= g.order()) throw input_error("subgroup element " + std::to_string(e) + " leaves the group");
    auto n = make_subgroup(g, elems);
    std::vector<std::pair<Element, Rational>> values;
    if (j.contains("modulus"))
        for (const auto& [key, val] : j.at("modulus").items()) values.emplace_back(element_key(key, g.order()), rational_from_json(val));
    auto m = values.empty() ? zero_modulus(g.order()) : extend_modulus(g, values);
    std::optional<std::vector<Element>> section;
    if (j.contains("section")) section = j.at("section").get<std::vector<Element>>();
    return make_setup(g, n, std::move(m), std::move(section));
}

json to_json(const ModulusSetup& s, const ObstructionDatum& x) {
    json nu = json::object();
    for (std::size_t i = 0; i < s.N.elements.size(); ++i) nu[std::to_string(s.N.elements[i])] = x.nu[i].str();
    return {{"setup", setup_to_json(s)}, {"cbar", values_to_json(x.c.cbar)}, {"d", values_to_json(x.c.d)}, {"nu", nu}};
}

std::pair<ModulusSetup, ObstructionDatum> datum_from_json(const json& j) {
    ModulusSetup s = setup_from_json(need(j, "setup"));
    NuMap nu(s.N.elements.size());
    if (j.contains("nu"))
        for (const auto& [key, val] : j.at("nu").items()) {
            int i = s.n_index(element_key(key, s.G.order()));
            if (i < 0) throw input_error("nu is given on " + key + ", which is not in N");
            nu[sz(i)] = CircleValue(rational_from_json(val));
        }
    ObstructionDatum x = make_datum(s, values_from_json(need(j, "cbar"), s.Q(), 3), std::move(nu));
    if (j.contains("d") && !(values_from_json(j.at("d"), s.Q(), 2) == x.c.d))
        throw input_error("the stored d differs from -nu(n_N)");
    return {std::move(s), std::move(x)};
}

json to_json(const FlowReport& r) {
    json ids = json::array();
    for (const auto& c : r.identities) ids.push_back({{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}});
    return {{"D", r.D}, {"convention", r.convention}, {"identities", ids}, {"ok", r.ok()}};
}

FlowReport flow_report_from_json(const json& j) {
    FlowReport r;
    r.D = need(j, "D").get<std::int64_t>();
    r.convention = need(j, "convention").get<std::string>();
    for (const auto& c : need(j, "identities"))
        r.identities.push_back({need(c, "name").get<std::string>(), need(c, "checked").get<std::size_t>(),
                                need(c, "failed").get<std::size_t>()});
    return r;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

json to_json(const RunReport& r) {
    return {{"command", r.command},
            {"tool_version", r.version},
            {"inputs_digest", r.inputs_digest},
            {"parameters", {{"denominator", r.denominator}, {"resolution", r.resolution}, {"seed", r.seed}}},
            {"results", r.results},
            {"timing", {{"seconds", r.seconds}}}};
}

RunReport run_report_from_json(const json& j) {
    RunReport r;
    r.command = need(j, "command").get<std::vector<std::string>>();
    r.version = need(j, "tool_version").get<std::string>();
    r.inputs_digest = need(j, "inputs_digest").get<std::string>();
    const auto& p = need(j, "parameters");
    r.denominator = need(p, "denominator").get<std::int64_t>();
    r.resolution = need(p, "resolution").get<std::int64_t>();
    r.seed = need(p, "seed").get<std::uint64_t>();
    r.results = need(j, "results");
    r.seconds = need(need(j, "timing"), "seconds").get<double>();
    return r;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error(path + " is not valid JSON: " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace cocycle::io
