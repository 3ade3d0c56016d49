#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cocycle/io.hpp"

using namespace cocycle;
using io::json;

namespace {

struct Run {
    int code = -1;
    std::string output;  // stdout and stderr
};

Run cli(const std::string& args) {
    std::string cmd = std::string(COCYCLE_CLI) + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() : path(std::filesystem::temp_directory_path() / ("cocycle_cli_" + std::to_string(::getpid()))) {
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string operator/(const std::string& f) const { return (path / f).string(); }
};

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

json without_timing(json j) {
    j.erase("timing");
    return j;
}

}  // namespace

TEST_CASE("group") {
    TempDir t;
    auto r = cli("group --preset z4 --out " + t / "g.json");
    CHECK(r.code == 0);
    auto g = io::group_from_json(io::read_json_file(t / "g.json"));
    CHECK(g.order() == 4);

    r = cli("group --preset z2xz2");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "exponent 2"));

    std::ofstream(t / "bad.json") << R"({"table": [[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]})";
    r = cli("group --table " + t / "bad.json");
    CHECK(r.code == 2);
    CHECK(contains(r.output, "triple (1,1,2)"));
}

TEST_CASE("cohomology") {
    auto r = cli("cohomology --group z2 --coeff circle --degree 3");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "= Z/2\n"));
    r = cli("cohomology --group z4 --coeff Z/4 --degree 0");
    CHECK(contains(r.output, "H^0(Z_4, Z/4) = Z/4"));
    r = cli("cohomology --group z3 --degree 0");
    CHECK(contains(r.output, "H^0(Z_3, T) = T\n"));
    r = cli("cohomology --group z2 --degree 4");
    CHECK(r.code == 2);
    CHECK(contains(r.output, "unsupported degree"));
    r = cli("cohomology --group z8xz8 --degree 3");
    CHECK(r.code == 2);
    CHECK(contains(r.output, "size cap"));
}

TEST_CASE("hout") {
    TempDir t;
    auto trivial = cli("hout --group z2xz2");
    auto coh = cli("cohomology --group z2xz2 --degree 3");
    CHECK(trivial.code == 0);
    auto factors = [](const std::string& out) { return out.substr(out.find(" = ") + 3, out.find('\n') - out.find(" = ") - 3); };
    CHECK(factors(trivial.output) == factors(coh.output));

    auto r = cli("hout --group z4 --subgroup 0,2 --out " + t / "h.json");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "= Z/2 + Z/2"));
    CHECK(contains(r.output, "stable at 2M"));
    auto rep = io::run_report_from_json(io::read_json_file(t / "h.json"));
    CHECK(rep.results["report"]["invariant_factors"] == json{2, 2});
    CHECK(rep.denominator == 8);
    CHECK(std::filesystem::exists(t / "h_rep0.json"));
    CHECK(std::filesystem::exists(t / "h_rep1.json"));

    r = cli("hout --group z4 --subgroup 0,2 --modulus 1=1/4");
    CHECK(r.code == 2);
    CHECK(contains(r.output, "does not vanish on N"));
    r = cli("hout --group d3 --subgroup 0,1,2");
    CHECK(r.code == 2);
    CHECK(contains(r.output, "not central"));
}

TEST_CASE("del") {
    TempDir t;
    REQUIRE(cli("hout --group z4 --subgroup 0,2 --modulus 1=1/2 --out " + t / "h.json").code == 0);
    auto r = cli("del --datum " + t / "h_rep0.json");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "class ["));

    // cbar = d fbar with fbar(1,1) = 1/4 on Q = Z_4, N trivial: a B^out datum
    auto q = build_group("Z_4");
    auto A = circle_module(q);
    auto f = zero_cochain(q, A, 2);
    f({1, 1}) = CircleValue(1, 4);
    json j = {{"setup", {{"group", "z4"}, {"subgroup", {0}}}}, {"cbar", io::values_to_json(coboundary(q, A, f))}};
    io::write_json_file(t / "b.json", j);
    r = cli("del --datum " + t / "b.json" + " --out " + t / "del.json");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "del: coboundary (witness attached)"));
    CHECK(contains(r.output, "in B^out (witness attached)"));
    auto rep = io::read_json_file(t / "del.json");
    CHECK(rep["results"].contains("witness"));
    CHECK(rep["results"]["in_bout"] == true);

    j["cbar"] = {{"1,1,1", "1/3"}};
    io::write_json_file(t / "bad.json", j);
    CHECK(cli("del --datum " + t / "bad.json").code == 2);
}

TEST_CASE("type3one") {
    auto r = cli("type3one --group z4 --subgroup 0,2 --nu 2=1/2 --samples 200 --at 1:1/2,1:0,1:0");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "= 3/4"));
    CHECK(contains(r.output, "all hold"));
    CHECK(cli("type3one --group z4 --subgroup 0,2 --nu 2=0.5").code == 2);
    CHECK(cli("type3one --group z4xz4 --subgroup 0,2,8,10 --nu 2=1/2,8=1/2").code == 2);
}

TEST_CASE("flow") {
    auto r = cli("flow --check eq3.2 --resolution 8");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "c(T,t,x) = 0: 264 checked, 0 failed"));
    CHECK(contains(r.output, "D=8: pass"));
    CHECK(cli("--resolution 2 flow --check eigen").code == 0);
    CHECK(cli("flow --check nothing").code == 2);
}

TEST_CASE("reports are deterministic and re-parse") {
    TempDir t;
    for (const std::string args : {"hout --group z4 --subgroup 0,2 --modulus 1=1/2", "cohomology --group d3 --degree 3",
                                   "flow --check rho --resolution 4 --seed 5",
                                   "type3one --group z4 --subgroup 0,2 --nu 2=1/2 --samples 50 --seed 9"}) {
        CAPTURE(args);
        REQUIRE(cli(args + " --out " + t / "a.json").code == 0);
        REQUIRE(cli(args + " --out " + t / "b.json").code == 0);
        auto a = io::read_json_file(t / "a.json"), b = io::read_json_file(t / "b.json");
        a["command"] = b["command"];  // the output path differs
        CHECK(without_timing(a).dump() == without_timing(b).dump());
        auto back = io::run_report_from_json(a);
        CHECK(io::to_json(back) == a);
    }
}

TEST_CASE("verify") {
    auto r = cli("verify --suite cli");
    CHECK(r.code == 0);
    CHECK(cli("verify --suite nothing").code == 2);
}
