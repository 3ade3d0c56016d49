#include <doctest.h>

#include <filesystem>
#include <random>

#include "cocycle/io.hpp"

using namespace cocycle;
using io::json;

namespace {

json reparse(const json& j) { return json::parse(j.dump()); }

}  // namespace

TEST_CASE("rationals are a/b strings") {
    CHECK(io::to_json(Rational(-3, 6)) == "-1/2");
    CHECK(io::rational_from_json("5/10") == Rational(1, 2));
    CHECK(io::rational_from_json("7") == Rational(7));
    CHECK_THROWS(io::rational_from_json("0.5"));
    CHECK_THROWS_AS(io::rational_from_json(0.5), input_error);
    auto v = std::vector<CircleValue>{CircleValue(1, 3), CircleValue(-1, 4), CircleValue()};
    CHECK(io::circle_values_from_json(reparse(io::to_json(v))) == v);
}

TEST_CASE("group files") {
    for (const char* name : {"Z_1", "Z_6", "Z_2xZ_2", "D_4"}) {
        auto g = build_group(name);
        auto back = io::group_from_json(reparse(io::to_json(g)));
        CHECK(back == g);
        CHECK(back.name() == g.name());
    }
    CHECK_THROWS_AS(io::group_from_json(json{{"table", {{0, 1}, {1, 2}}}}), input_error);
    CHECK_THROWS_AS(io::group_from_json(json{{"rows", {{0}}}}), input_error);
    CHECK_THROWS_AS(io::group_from_json(json{{"table", {{0, 1}, {1, 0}}}, {"order", 3}}), input_error);
}

TEST_CASE("cochain files") {
    std::mt19937_64 rng(3);
    auto g = build_group("D_3");
    auto a = circle_module(g);
    for (int n = 0; n <= 3; ++n) {
        auto xi = random_cochain(g, a, n, rng, 12);
        auto j = io::cochain_to_json(g, a, xi);
        CHECK(j["coeff"]["kind"] == "circle");
        CHECK(io::cochain_from_json(reparse(j), g) == xi);
    }
    auto b = cyclic_module(g, {2, 3});
    auto eta = random_cochain(g, b, 2, rng);
    auto j = io::cochain_to_json(g, b, eta);
    CHECK(j["coeff"]["orders"] == json{2, 3});
    CHECK(io::cochain_from_json(reparse(j), g) == eta);

    auto z2 = build_group("Z_2");
    json bad = {{"degree", 2}, {"coeff", {{"kind", "circle"}, {"M", 4}}}, {"values", {{"1,1", "1/3"}}}};
    CHECK_THROWS_AS(io::cochain_from_json(bad, z2), input_error);
    bad["values"] = {{"1,2", "1/2"}};
    CHECK_THROWS_AS(io::cochain_from_json(bad, z2), input_error);
    bad["values"] = {{"1", "1/2"}};
    CHECK_THROWS_AS(io::cochain_from_json(bad, z2), input_error);
}

TEST_CASE("reports") {
    auto g = build_group("Z_2xZ_2");
    for (int n = 0; n <= 3; ++n) {
        auto r = cohomology(g, circle_module(g), n);
        auto back = io::report_from_json(reparse(io::to_json(r)));
        CHECK(back.degree == r.degree);
        CHECK(back.invariant_factors == r.invariant_factors);
        CHECK(back.representatives == r.representatives);
        CHECK(back.bound == r.bound);
        CHECK(back.exact_torsion == r.exact_torsion);
        CHECK(back.continuous_rank == r.continuous_rank);
        CHECK(back.verified == r.verified);
        CHECK(back.stable == r.stable);
    }
}

TEST_CASE("obstruction data") {
    auto g = build_group("Z_4");
    auto n = make_subgroup(g, {0, 2});
    auto s = make_setup(g, n, extend_modulus(g, {{1, Rational(1, 2)}}));
    auto h = compute_hout(s);
    REQUIRE_FALSE(h.representatives.empty());
    for (const auto& x : h.representatives) {
        auto [s2, x2] = io::datum_from_json(reparse(io::to_json(s, x)));
        CHECK(s2.G == s.G);
        CHECK(s2.N.elements == s.N.elements);
        CHECK(s2.m == s.m);
        CHECK(s2.section.choice == s.section.choice);
        CHECK(x2.c.cbar == x.c.cbar);
        CHECK(x2.c.d == x.c.d);
        CHECK(x2.nu == x.nu);
    }
    // generators only, and a preset name for the group
    json j = {{"setup", {{"group", "z4"}, {"subgroup", {0, 2}}, {"modulus", {{"1", "1/2"}}}}}, {"cbar", json::object()}};
    auto [s3, x3] = io::datum_from_json(j);
    CHECK(s3.m == s.m);
    CHECK(x3.nu == NuMap(2));
    j["nu"] = {{"1", "1/2"}};
    CHECK_THROWS_AS(io::datum_from_json(j), input_error);
    j["nu"] = {{"2", "1/2"}};
    j["d"] = json::object();
    CHECK_THROWS_AS(io::datum_from_json(j), input_error);  // d must be -nu(n_N)
}

TEST_CASE("flow reports and run reports") {
    auto f = check_szet(FlowGrid(2), 4);
    auto back = io::flow_report_from_json(reparse(io::to_json(f)));
    CHECK(back.D == f.D);
    CHECK(back.convention == f.convention);
    REQUIRE(back.identities.size() == f.identities.size());
    for (std::size_t i = 0; i < f.identities.size(); ++i) {
        CHECK(back.identities[i].name == f.identities[i].name);
        CHECK(back.identities[i].checked == f.identities[i].checked);
        CHECK(back.identities[i].failed == f.identities[i].failed);
    }

    io::RunReport r{{"hout", "--group", "z4"}, "0.1.0", io::hex64(io::fnv1a64("abc")), 16, 8, 7, json{{"x", "1/2"}}, 0.125};
    CHECK(io::run_report_from_json(reparse(io::to_json(r))) == r);
    // FNV-1a 64 reference values
    CHECK(io::hex64(io::fnv1a64("")) == "cbf29ce484222325");
    CHECK(io::hex64(io::fnv1a64("a")) == "af63dc4c8601ec8c");
}

TEST_CASE("files on disk") {
    auto path = (std::filesystem::temp_directory_path() / "cocycle_io_test.json").string();
    auto g = build_group("D_3");
    io::write_json_file(path, io::to_json(g));
    CHECK(io::resolve_group(path) == g);
    CHECK(io::resolve_group("d3") == g);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(io::read_json_file(path), input_error);
}
