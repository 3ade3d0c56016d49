#include <doctest.h>

#include <random>

#include "cocycle/bar.hpp"
#include "oracles.hpp"

using namespace cocycle;

TEST_CASE("coboundary of constants and characters") {
    auto z2 = build_group("Z_2");
    auto a = circle_module(z2);
    auto c0 = zero_cochain(z2, a, 0);
    c0.values[0] = CircleValue(1, 3);
    CHECK(coboundary(z2, a, c0).is_zero());

    auto chi = zero_cochain(z2, a, 1);
    chi({1}) = CircleValue(1, 2);
    auto d = coboundary(z2, a, chi);
    CHECK(d({1, 1}).is_zero());
    CHECK(is_cocycle(z2, a, chi));
}

TEST_CASE("coboundary squares to zero and matches its matrix") {
    std::mt19937_64 rng(3);
    auto z4 = build_group("Z_4");
    auto a = circle_module(z4);
    for (int n = 0; n <= 2; ++n) {
        auto xi = random_cochain(z4, a, n, rng);
        auto dd = coboundary(z4, a, coboundary(z4, a, xi));
        CHECK(dd.is_zero());
        CHECK(coboundary(z4, a, xi).values == apply_matrix(coboundary_matrix(z4, a, n), xi.values));
    }
}

TEST_CASE("coboundary with a nontrivial action") {
    // Z_2 acting on T by inversion
    auto z2 = build_group("Z_2");
    CoefficientModule a{Carrier::circle(), {IntMatrixX::Identity(1, 1), -IntMatrixX::Identity(1, 1)}, 0};
    validate_module(z2, a);
    std::mt19937_64 rng(9);
    for (int n = 0; n <= 2; ++n) {
        auto xi = random_cochain(z2, a, n, rng);
        CHECK(coboundary(z2, a, coboundary(z2, a, xi)).is_zero());
    }
    // every crossed homomorphism x -> f(1) is principal (f(1) = -2a is solvable), while
    // H^2 is the Tate group T^{Z_2} / norms = {0, 1/2} / 0
    CHECK(cohomology(z2, a, 1).invariant_factors.empty());
    CHECK(cohomology(z2, a, 2).invariant_factors == std::vector<std::int64_t>{2});
    // H^0 = fixed points = {0, 1/2}
    CHECK(cohomology(z2, a, 0).invariant_factors == std::vector<std::int64_t>{2});
}

TEST_CASE("is_coboundary finds witnesses") {
    std::mt19937_64 rng(21);
    auto d3 = build_group("D_3");
    auto a = circle_module(d3);
    for (int n = 1; n <= 3; ++n) {
        auto q = bar_quotient(d3, a, n);
        for (int trial = 0; trial < 5; ++trial) {
            auto eta = random_cochain(d3, a, n - 1, rng);
            auto xi = coboundary(d3, a, eta);
            auto w = is_coboundary(d3, a, q, xi);
            REQUIRE(w);
            CHECK(coboundary(d3, a, *w) == xi);
        }
    }
}

TEST_CASE("the nontrivial character of Z_2 is not a coboundary") {
    auto z2 = build_group("Z_2");
    auto a = circle_module(z2);
    auto chi = zero_cochain(z2, a, 1);
    chi({1}) = CircleValue(1, 2);
    CHECK(is_cocycle(z2, a, chi));
    CHECK_FALSE(is_coboundary(z2, a, chi));
}

TEST_CASE("H^3(Z_2, T) generator is a cocycle and not a coboundary") {
    auto z2 = build_group("Z_2");
    auto a = circle_module(z2);
    auto rep = cohomology(z2, a, 3, 4);
    REQUIRE(rep.invariant_factors == std::vector<std::int64_t>{2});
    CHECK(rep.verified);
    auto xi = as_cochain(z2, a, 3, rep.representatives[0]);
    CHECK(is_cocycle(z2, a, xi));
    CHECK_FALSE(is_coboundary(z2, a, xi));
}

TEST_CASE("cyclic cohomology against the local elimination oracle") {
    for (int n : {2, 3, 4}) {
        auto g = build_group("Z_" + std::to_string(n));
        auto a = circle_module(g);
        for (int deg = 1; deg <= 3; ++deg) {
            auto r = cohomology(g, a, deg);
            CHECK(r.verified);
            CHECK(r.stable);
            auto o = oracle::circle_cohomology_within(g, deg, static_cast<std::int64_t>(n) * n);
            CHECK(r.invariant_factors == o);
        }
        CHECK(cohomology(g, a, 1).order() == n);
        CHECK(cohomology(g, a, 2).order() == 1);
        CHECK(cohomology(g, a, 3).order() == n);
    }
}

TEST_CASE("noncyclic groups against the oracle") {
    for (auto name : {"Z_2xZ_2", "D_3"}) {
        auto g = build_group(name);
        auto a = circle_module(g);
        for (int deg = 1; deg <= 3; ++deg) {
            auto r = cohomology(g, a, deg);
            CHECK(r.verified);
            CHECK(r.invariant_factors == oracle::circle_cohomology_within(g, deg, r.bound));
        }
    }
    // Schur multiplier of the Klein group
    CHECK(cohomology(build_group("Z_2xZ_2"), circle_module(build_group("Z_2xZ_2")), 2).invariant_factors ==
          std::vector<std::int64_t>{2});
}

TEST_CASE("finite coefficients") {
    auto z2 = build_group("Z_2");
    // H^n(Z_2, Z/2) = Z/2 in every degree
    auto a = cyclic_module(z2, {2});
    for (int n = 0; n <= 3; ++n) CHECK(cohomology(z2, a, n).invariant_factors == std::vector<std::int64_t>{2});
    // H^2(Z_4, Z/2) = Z/2
    auto z4 = build_group("Z_4");
    CHECK(cohomology(z4, cyclic_module(z4, {2}), 2).invariant_factors == std::vector<std::int64_t>{2});
    auto r = cohomology(z4, cyclic_module(z4, {4}), 2);
    CHECK(r.invariant_factors == std::vector<std::int64_t>{4});
    CHECK(r.verified);
}

TEST_CASE("degree 0 and degree limits") {
    auto z3 = build_group("Z_3");
    auto r = cohomology(z3, circle_module(z3), 0);
    CHECK(r.continuous_rank == 1);
    CHECK(r.invariant_factors == std::vector<std::int64_t>{9});
    CHECK_THROWS_AS(cohomology(z3, circle_module(z3), 4), input_error);
}

TEST_CASE("M-doubling leaves results unchanged") {
    auto g = build_group("Z_2xZ_2");
    auto a = circle_module(g);
    for (int deg = 1; deg <= 3; ++deg) {
        auto r1 = cohomology(g, a, deg, 16);
        auto r2 = cohomology(g, a, deg, 32);
        CHECK(r1.invariant_factors == r2.invariant_factors);
        CHECK(r1.stable);
    }
}

TEST_CASE("cup_carry") {
    auto z2 = build_group("Z_2");
    auto a = circle_module(z2);
    std::vector<int> nz{0, 0, 0, 1};
    auto v = zero_cochain(z2, a, 2);
    v({1, 1}) = CircleValue(1, 2);
    auto c = cup_carry(z2, nz, v);
    for (std::size_t i = 0; i < c.values.size(); ++i) CHECK(c.values[i] == (i == 15 ? CircleValue(1, 2) : CircleValue()));
    CHECK(cup_carry(z2, {0, 0, 0, 0}, v).is_zero());
    CHECK(cup_carry(z2, nz, zero_cochain(z2, a, 2)).is_zero());
}
