// Command-line front end. Every command prints a short summary; --out writes the JSON report (or
// the group file for `group`). Exit codes: 0 success, 1 verification failure, 2 input error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cocycle/io.hpp"
#include "cocycle/suites.hpp"

using namespace cocycle;
using io::json;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kInputError = 2;

struct Globals {
    std::string out;
    std::int64_t denominator = 0;  // 0 selects each command's default
    std::int64_t resolution = 8;
    std::uint64_t seed = 1;
};

struct Outcome {
    json results = json::object();
    json inputs = json::object();  // canonical inputs, hashed into the digest
    std::vector<std::string> summary;
    int code = kOk;
    std::int64_t denominator = 0;  // the M actually used, when there is one
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep))
        if (!part.empty()) out.push_back(part);
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw input_error("bad " + what + " \"" + s + "\"");
    return v;
}

std::vector<Element> parse_elements(const std::string& s, const FiniteGroup& g, const std::string& what) {
    std::vector<Element> out;
    for (const auto& p : split(s, ',')) {
        int v = parse_int(p, what);
        if (v < 0 || v >= g.order()) throw input_error(what + " element " + p + " is outside the group");
        out.push_back(v);
    }
    return out;
}

// "1=1/4,2=1/2" -> element/value pairs.
std::vector<std::pair<Element, Rational>> parse_assignments(const std::string& s, const FiniteGroup& g, const std::string& what) {
    std::vector<std::pair<Element, Rational>> out;
    for (const auto& p : split(s, ',')) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw input_error("bad " + what + " entry \"" + p + "\", expected element=a/b");
        int e = parse_int(p.substr(0, eq), what + " element");
        if (e < 0 || e >= g.order()) throw input_error(what + " element " + std::to_string(e) + " is outside the group");
        out.emplace_back(e, Rational::parse(p.substr(eq + 1)));
    }
    return out;
}

std::string factors_str(const std::vector<std::int64_t>& f, std::int64_t continuous = 0) {
    std::string s;
    for (std::int64_t i = 0; i < continuous; ++i) s += (s.empty() ? "" : " + ") + std::string("T");
    for (auto d : f) s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(d));
    return s.empty() ? "0" : s;
}

ModulusSetup setup_from_options(const std::string& group, const std::string& subgroup, const std::string& modulus,
                                const std::string& section, json& inputs) {
    auto g = io::resolve_group(group);
    auto elems = subgroup.empty() ? std::vector<Element>{0} : parse_elements(subgroup, g, "subgroup");
    elems.push_back(0);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    auto n = make_subgroup(g, elems);
    auto values = parse_assignments(modulus, g, "modulus");
    std::optional<std::vector<Element>> choice;
    if (!section.empty()) choice = parse_elements(section, g, "section");
    auto m = values.empty() ? zero_modulus(g.order()) : extend_modulus(g, values);
    auto s = make_setup(g, n, std::move(m), choice);
    inputs["setup"] = io::setup_to_json(s);
    return s;
}

// ---- group

struct GroupOpts {
    std::string preset, table, name = "G";
};

Outcome cmd_group(const Globals&, const GroupOpts& o, json& file) {
    if (o.preset.empty() == o.table.empty()) throw input_error("give exactly one of --preset and --table");
    FiniteGroup g;
    Outcome r;
    if (!o.preset.empty()) {
        g = build_group(o.preset);
        r.inputs["preset"] = o.preset;
    } else {
        auto j = io::read_json_file(o.table);
        if (j.is_array()) j = json{{"table", j}, {"name", o.name}};
        g = io::group_from_json(j);
        r.inputs["table"] = j;
    }
    int exponent = 1;
    for (Element a = 0; a < g.order(); ++a) exponent = static_cast<int>(lcm(exponent, g.element_order(a)));
    file = io::to_json(g);
    r.results = {{"group", file}, {"exponent", exponent}, {"abelian", g.is_abelian()}};
    r.summary.push_back(g.name() + ": order " + std::to_string(g.order()) + ", exponent " + std::to_string(exponent) +
                        (g.is_abelian() ? ", abelian" : ", nonabelian"));
    return r;
}

// ---- cohomology

struct CohomologyOpts {
    std::string group, coeff = "circle";
    int degree = 0;
};

Outcome cmd_cohomology(const Globals& gl, const CohomologyOpts& o) {
    if (o.degree < 0 || o.degree > 3) throw input_error("unsupported degree " + std::to_string(o.degree) + ", degrees 0..3 only");
    auto g = io::resolve_group(o.group);
    CoefficientModule a;
    if (o.coeff == "circle" || o.coeff == "T") {
        a = circle_module(g, gl.denominator);
    } else {
        std::vector<std::int64_t> orders;
        for (const auto& part : split(o.coeff, 'x')) {
            if (part.size() < 3 || (part.compare(0, 2, "Z/") != 0 && part.compare(0, 2, "z/") != 0))
                throw input_error("coefficients must be circle or Z/k (products as Z/2xZ/4), got \"" + o.coeff + "\"");
            int k = parse_int(part.substr(2), "cyclic order");
            if (k < 1) throw input_error("cyclic orders must be positive");
            orders.push_back(k);
        }
        if (orders.empty()) throw input_error("empty coefficient list");
        a = cyclic_module(g, orders);
    }
    auto rep = cohomology(g, a, o.degree, gl.denominator);
    Outcome r;
    r.inputs = {{"group", io::to_json(g)}, {"coeff", o.coeff}, {"degree", o.degree}, {"denominator", gl.denominator}};
    json reps = json::array();
    for (const auto& v : rep.representatives) reps.push_back(io::cochain_to_json(g, a, as_cochain(g, a, o.degree, v)));
    r.results = {{"report", io::to_json(rep)}, {"representative_cochains", reps}};
    r.denominator = rep.bound;
    std::string coeff = a.carrier.is_circle() ? "T" : o.coeff;
    // circle directions show up as factors M among the (1/M) points; print them as T
    const auto& shown = rep.continuous_rank ? rep.exact_torsion : rep.invariant_factors;
    r.summary.push_back("H^" + std::to_string(o.degree) + "(" + g.name() + ", " + coeff + ") = " +
                        factors_str(shown, rep.continuous_rank));
    if (rep.bound) r.summary.push_back("denominator bound M = " + std::to_string(rep.bound) + (rep.stable ? ", stable at 2M" : ", NOT stable at 2M"));
    if (!rep.verified) {
        r.summary.push_back("representatives failed verification");
        r.code = kVerifyFailed;
    }
    return r;
}

// ---- hout

struct SetupOpts {
    std::string group, subgroup, modulus, section;
};

Outcome cmd_hout(const Globals& gl, const SetupOpts& o, std::vector<json>& rep_files) {
    Outcome r;
    auto s = setup_from_options(o.group, o.subgroup, o.modulus, o.section, r.inputs);
    r.inputs["denominator"] = gl.denominator;
    auto M = gl.denominator ? gl.denominator : default_hout_bound(s);
    r.denominator = M;
    auto h = compute_hout(s, M);
    auto h2 = compute_hout(s, 2 * M);
    bool stable = h.report.stable && h2.report.invariant_factors == h.report.invariant_factors;
    json reps = json::array();
    for (const auto& x : h.representatives) {
        rep_files.push_back(io::to_json(s, x));
        reps.push_back(rep_files.back());
    }
    r.results = {{"report", io::to_json(h.report)}, {"representatives", reps}, {"stable_at_2M", stable},
                 {"quotient_order", s.Q().order()}};
    r.summary.push_back("H^out(" + s.G.name() + ", N of order " + std::to_string(s.N.elements.size()) + ") = " +
                        factors_str(h.report.invariant_factors));
    r.summary.push_back("denominator bound M = " + std::to_string(M) + (stable ? ", stable at 2M" : ", NOT stable at 2M"));
    if (!h.report.verified) {
        r.summary.push_back("representatives failed verification");
        r.code = kVerifyFailed;
    }
    return r;
}

// ---- del

Outcome cmd_del(const Globals&, const std::string& path) {
    Outcome r;
    auto j = io::read_json_file(path);
    r.inputs["datum"] = j;
    auto [s, x] = io::datum_from_json(j);
    auto chk = verify_datum(s, x);
    if (!chk.ok) throw input_error("datum fails constraint (" + std::string(1, chk.constraint) + "): " + chk.detail);
    auto cg = del_map(s, x);
    auto AG = circle_module(s.G);
    bool cocycle = is_cocycle(s.G, AG, cg);
    auto w = is_coboundary(s.G, AG, cg);
    HoutPresentation p(s);
    auto cls = p.class_of(x);
    auto bout = p.bout_witness(x);
    r.results = {{"del", io::cochain_to_json(s.G, AG, cg)}, {"is_cocycle", cocycle}, {"is_coboundary", w.has_value()},
                 {"hout_class", cls}, {"in_bout", bout.has_value()}};
    if (w) r.results["witness"] = io::cochain_to_json(s.G, AG, *w);
    if (bout) r.results["bout_witness"] = io::values_to_json(*bout);
    r.summary.push_back(std::string("del: ") + (w ? "coboundary (witness attached)" : "nontrivial in H^3(G, T)"));
    r.summary.push_back(std::string("datum: ") + (bout ? "in B^out (witness attached)" : "class " + json(cls).dump() + " in H^out"));
    if (!cocycle) {
        r.summary.push_back("del output fails the 3-cocycle identity");
        r.code = kVerifyFailed;
    }
    return r;
}

// ---- type3one

struct Type3Opts {
    SetupOpts setup;
    std::string nu, cq, at;
    int samples = 1000;
};

ExtendedElement parse_extended(const std::string& s, const FiniteGroup& q) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw input_error("bad point \"" + s + "\", expected q:a/b");
    int p = parse_int(s.substr(0, colon), "quotient element");
    if (p < 0 || p >= q.order()) throw input_error("quotient element " + std::to_string(p) + " out of range");
    return {p, Rational::parse(s.substr(colon + 1))};
}

Outcome cmd_type3one(const Globals& gl, const Type3Opts& o) {
    Outcome r;
    auto s = setup_from_options(o.setup.group, o.setup.subgroup, o.setup.modulus, o.setup.section, r.inputs);
    const auto& Q = s.Q();
    NuMap nu(s.N.elements.size());
    for (const auto& [e, v] : parse_assignments(o.nu, s.G, "nu")) {
        int i = s.n_index(e);
        if (i < 0) throw input_error("nu is given on " + std::to_string(e) + ", which is not in N");
        nu[static_cast<std::size_t>(i)] = CircleValue(v);
    }
    auto cq = zero_cochain(Q, circle_module(Q), 3);
    if (!o.cq.empty()) {
        auto j = io::read_json_file(o.cq);
        r.inputs["cq"] = j;
        cq = io::cochain_from_json(j, Q);
    }
    r.inputs["nu"] = io::to_json(nu);
    r.inputs["samples"] = o.samples;
    r.inputs["seed"] = gl.seed;
    Type3One c(s, cq, nu);
    std::mt19937_64 rng(gl.seed);
    auto rs = [&]() {
        return ExtendedElement{static_cast<Element>(rng() % static_cast<std::uint64_t>(Q.order())),
                               Rational(static_cast<std::int64_t>(rng() % 97) - 48, static_cast<std::int64_t>(rng() % 24) + 1)};
    };
    std::size_t failed = 0;
    for (int t = 0; t < o.samples; ++t) {
        auto a = rs(), b = rs(), e = rs(), f = rs();
        if (!c.defect(a, b, e, f).is_zero()) ++failed;
    }
    json phi = json::array();
    for (const auto& v : c.phi()) phi.push_back(v.str());
    r.results = {{"samples", o.samples}, {"failed", failed}, {"phi", phi}};
    if (!o.at.empty()) {
        auto pts = split(o.at, ',');
        if (pts.size() != 3) throw input_error("--at needs three points q:a/b separated by commas");
        auto v = c(parse_extended(pts[0], Q), parse_extended(pts[1], Q), parse_extended(pts[2], Q));
        r.results["value"] = v.str();
        r.summary.push_back("c(" + o.at + ") = " + v.str());
    }
    r.summary.push_back("3-cocycle identity on " + std::to_string(o.samples) + " random quadruples: " +
                        (failed ? std::to_string(failed) + " failures" : "all hold"));
    if (failed) r.code = kVerifyFailed;
    return r;
}

// ---- flow

Outcome cmd_flow(const Globals& gl, const std::string& check) {
    // The interface names eq3.2, eq4.3 and eq4.10 are kept as aliases.
    static const std::map<std::string, std::string> alias = {
        {"szet", "szet"}, {"eq3.2", "szet"}, {"cobound", "cobound"}, {"eq4.3", "cobound"}, {"rho", "rho"},
        {"eigen", "eigen"}, {"eq4.10", "eigen"}, {"all", "all"}};
    auto it = alias.find(check);
    if (it == alias.end()) throw input_error("unknown check \"" + check + "\"; use szet, cobound, rho, eigen or all");
    if (gl.resolution < 1) throw input_error("resolution must be positive");
    FlowGrid g(gl.resolution);
    Outcome r;
    r.inputs = {{"check", it->second}, {"resolution", gl.resolution}, {"seed", gl.seed}};
    std::vector<FlowReport> reports;
    if (it->second == "szet" || it->second == "all") reports.push_back(check_szet(g));
    if (it->second == "cobound" || it->second == "all") reports.push_back(check_cobound(g));
    if (it->second == "rho" || it->second == "all") reports.push_back(check_rho(g, gl.seed));
    if (it->second == "eigen" || it->second == "all") reports.push_back(check_eigen(g));
    json out = json::array();
    bool ok = true;
    for (const auto& rep : reports) {
        out.push_back(io::to_json(rep));
        ok = ok && rep.ok();
        for (const auto& id : rep.identities)
            r.summary.push_back((id.failed ? "FAIL " : "pass ") + id.name + ": " + std::to_string(id.checked) + " checked, " +
                                std::to_string(id.failed) + " failed");
    }
    r.results = {{"reports", out}, {"ok", ok}};
    r.summary.push_back(std::string("flow checks at D=") + std::to_string(gl.resolution) + (ok ? ": pass" : ": FAIL"));
    if (!ok) r.code = kVerifyFailed;
    return r;
}

// ---- verify

SuiteCheck cli_suite(const Globals& gl);

Outcome cmd_verify(const Globals& gl, const std::string& suite) {
    Outcome r;
    r.inputs = {{"suite", suite}, {"seed", gl.seed}};
    std::vector<std::string> names;
    if (suite == "all") {
        names = suite_names();
        names.push_back("cli");
    } else {
        names.push_back(suite);
    }
    json checks = json::array();
    bool ok = true;
    for (const auto& name : names) {
        std::vector<SuiteCheck> res;
        if (name == "cli")
            res.push_back(cli_suite(gl));
        else if (std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end())
            res = run_suite(name, gl.seed);
        else
            throw input_error("unknown suite \"" + name + "\"");
        for (const auto& c : res) {
            ok = ok && c.ok();
            checks.push_back({{"module", c.module}, {"name", c.name}, {"checked", c.checked}, {"failed", c.failed},
                              {"first_failure", c.first_failure}});
            r.summary.push_back(std::string(c.ok() ? "pass " : "FAIL ") + c.module + ": " + c.name + " (" +
                                std::to_string(c.checked) + " checked, " + std::to_string(c.failed) + " failed)" +
                                (c.first_failure.empty() ? "" : " first: " + c.first_failure));
        }
    }
    r.results = {{"checks", checks}, {"ok", ok}};
    if (!ok) r.code = kVerifyFailed;
    return r;
}

// Round trips of every file format and determinism of the report JSON.
SuiteCheck cli_suite(const Globals& gl) {
    SuiteCheck c{"cli", "file round trips and deterministic reports", 0, 0, {}};
    auto expect = [&](bool ok, const std::string& what) {
        ++c.checked;
        if (!ok && c.failed++ == 0) c.first_failure = what;
    };
    try {
        for (const char* name : {"Z_4", "Z_2xZ_2", "D_4"}) {
            auto g = build_group(name);
            expect(io::group_from_json(json::parse(io::to_json(g).dump())) == g, std::string("group ") + name);
            auto a = circle_module(g);
            std::mt19937_64 rng(gl.seed);
            auto xi = random_cochain(g, a, 2, rng, 12);
            expect(io::cochain_from_json(json::parse(io::cochain_to_json(g, a, xi).dump()), g) == xi, std::string("cochain ") + name);
            auto b = cyclic_module(g, {2, 6});
            auto eta = random_cochain(g, b, 1, rng);
            expect(io::cochain_from_json(json::parse(io::cochain_to_json(g, b, eta).dump()), g) == eta, std::string("cyclic cochain ") + name);
            auto rep = cohomology(g, a, 3);
            auto back = io::report_from_json(json::parse(io::to_json(rep).dump()));
            expect(back.invariant_factors == rep.invariant_factors && back.representatives == rep.representatives &&
                       back.bound == rep.bound && back.verified == rep.verified,
                   std::string("report ") + name);
        }
        auto g = build_group("Z_4");
        ModulusSetup s = make_setup(g, make_subgroup(g, {0, 2}), extend_modulus(g, {{1, Rational(1, 2)}}));
        for (const auto& x : compute_hout(s).representatives) {
            auto [s2, x2] = io::datum_from_json(json::parse(io::to_json(s, x).dump()));
            expect(x2.c.cbar == x.c.cbar && x2.c.d == x.c.d && x2.nu == x.nu && s2.section.choice == s.section.choice,
                   "datum round trip");
        }
        io::RunReport rr{{"cocycle", "hout"}, "0", io::hex64(io::fnv1a64("x")), 4, 8, gl.seed, json{{"k", "1/2"}}, 0.25};
        expect(io::run_report_from_json(json::parse(io::to_json(rr).dump())) == rr, "run report round trip");

        Globals quiet = gl;
        std::vector<json> f1, f2;
        auto a = cmd_hout(quiet, {"Z_4", "0,2", "1=1/2", ""}, f1);
        auto b = cmd_hout(quiet, {"Z_4", "0,2", "1=1/2", ""}, f2);
        expect(a.results.dump() == b.results.dump() && a.inputs.dump() == b.inputs.dump(), "hout determinism");
        auto f = cmd_flow(quiet, "szet");
        expect(f.results.dump() == cmd_flow(quiet, "szet").results.dump(), "flow determinism");
    } catch (const std::exception& e) {
        expect(false, std::string("exception: ") + e.what());
    }
    return c;
}

std::string stem(const std::string& path) {
    std::filesystem::path p(path);
    return (p.parent_path() / p.stem()).string();
}

int finish(const Globals& gl, const std::vector<std::string>& argv, const Outcome& r, double seconds) {
    for (const auto& line : r.summary) std::cout << line << '\n';
    if (!gl.out.empty()) {
        io::RunReport rep;
        rep.command = argv;
        rep.version = COCYCLE_VERSION;
        rep.inputs_digest = io::hex64(io::fnv1a64(r.inputs.dump()));
        rep.denominator = r.denominator ? r.denominator : gl.denominator;
        rep.resolution = gl.resolution;
        rep.seed = gl.seed;
        rep.results = r.results;
        rep.results["exit_code"] = r.code;
        rep.seconds = seconds;
        io::write_json_file(gl.out, io::to_json(rep));
    }
    return r.code;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact cocycle computations for finite groups, groupoids and modular obstructions", "cocycle"};
    app.set_version_flag("--version", COCYCLE_VERSION);
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    app.add_option("--out", gl.out, "Write the JSON report (the group file for `group`) here");
    app.add_option("--denominator", gl.denominator, "Denominator bound M for circle values (0: default)")->check(CLI::NonNegativeNumber);
    app.add_option("--resolution", gl.resolution, "Grid resolution D for flow checks")->check(CLI::PositiveNumber);
    app.add_option("--seed", gl.seed, "Seed for randomized checks");

    GroupOpts go;
    auto* group = app.add_subcommand("group", "Build a group from a preset or a multiplication table");
    group->add_option("--preset", go.preset, "Z_n, Z_2xZ_4, D_n, ...");
    group->add_option("--table", go.table, "JSON file: a table array or {\"name\", \"table\"}");
    group->add_option("--name", go.name, "Name for a table group");

    CohomologyOpts co;
    auto* coh = app.add_subcommand("cohomology", "H^n(G, A) with trivial action, n <= 3");
    coh->add_option("--group", co.group, "Preset or group file")->required();
    coh->add_option("--coeff", co.coeff, "circle or Z/k (products as Z/2xZ/4)");
    coh->add_option("--degree", co.degree, "Degree n")->required();

    SetupOpts so;
    auto add_setup = [](CLI::App* sub, SetupOpts& o) {
        sub->add_option("--group", o.group, "Preset or group file")->required();
        sub->add_option("--subgroup", o.subgroup, "Central subgroup N as elements, e.g. 0,2");
        sub->add_option("--modulus", o.modulus, "m on generators in units of T', e.g. 1=1/4; extended by closure (default zero)");
        sub->add_option("--section", o.section, "Section of G -> G/N, one element per coset in quotient order");
    };
    auto* hout = app.add_subcommand("hout", "The modular obstruction group for (G, N, m)");
    add_setup(hout, so);

    std::string datum;
    auto* del = app.add_subcommand("del", "The del map of an obstruction datum into Z^3(G, T)");
    del->add_option("--datum", datum, "Datum file")->required()->check(CLI::ExistingFile);

    Type3Opts to;
    auto* t3 = app.add_subcommand("type3one", "Cocycle on Q x R from c_Q and nu");
    add_setup(t3, to.setup);
    t3->add_option("--nu", to.nu, "nu on N in units of T, e.g. 2=1/2");
    t3->add_option("--cq", to.cq, "Cochain file of a 3-cocycle on Q (default zero)")->check(CLI::ExistingFile);
    t3->add_option("--samples", to.samples, "Random quadruples for the cocycle identity")->check(CLI::NonNegativeNumber);
    t3->add_option("--at", to.at, "Evaluate at q:a/b,q:a/b,q:a/b");

    std::string check = "all";
    auto* flow = app.add_subcommand("flow", "Gauss-bracket identities on the grid of resolution D");
    flow->add_option("--check", check, "szet, cobound, rho, eigen or all");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run the invariant suites");
    verify->add_option("--suite", suite, "all, cli or a module name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
    if (group->parsed()) {
        json file;
        auto r = cmd_group(gl, go, file);
        for (const auto& line : r.summary) std::cout << line << '\n';
        if (gl.out.empty())
            std::cout << file.dump(2) << '\n';
        else
            io::write_json_file(gl.out, file);
        return r.code;
    }
    if (coh->parsed()) return finish(gl, args, cmd_cohomology(gl, co), elapsed());
    if (hout->parsed()) {
        std::vector<json> reps;
        auto r = cmd_hout(gl, so, reps);
        if (!gl.out.empty())
            for (std::size_t i = 0; i < reps.size(); ++i) {
                auto path = stem(gl.out) + "_rep" + std::to_string(i) + ".json";
                io::write_json_file(path, reps[i]);
                r.summary.push_back("wrote " + path);
            }
        return finish(gl, args, r, elapsed());
    }
    if (del->parsed()) return finish(gl, args, cmd_del(gl, datum), elapsed());
    if (t3->parsed()) return finish(gl, args, cmd_type3one(gl, to), elapsed());
    if (flow->parsed()) return finish(gl, args, cmd_flow(gl, check), elapsed());
    if (verify->parsed()) return finish(gl, args, cmd_verify(gl, suite), elapsed());
    return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const overflow_error& e) {
        std::cerr << "input error: " << e.what() << " (values too large for exact int64 arithmetic)\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const json::exception& e) {
        std::cerr << "input error: malformed JSON input: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return kVerifyFailed;
    }
}
