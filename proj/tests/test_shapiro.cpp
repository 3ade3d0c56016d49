#include <doctest.h>

#include <random>

#include "cocycle/shapiro.hpp"
#include "fixtures.hpp"

using namespace cocycle;
using fixture::circle_over;
using fixture::coset_groupoid;

namespace {

// Every class of a report as a cochain, in the order of the mixed-radix counter.
std::vector<GroupoidCochain> all_classes(const GroupoidComplex& c, const FinAbReport& r) {
    std::vector<GroupoidCochain> out;
    std::vector<std::int64_t> k(r.invariant_factors.size(), 0);
    for (;;) {
        auto xi = c.zero(r.degree);
        for (std::size_t i = 0; i < k.size(); ++i)
            for (std::size_t j = 0; j < xi.values.size(); ++j) xi.values[j] += k[i] * r.representatives[i][j];
        out.push_back(xi);
        std::size_t i = 0;
        while (i < k.size() && ++k[i] == r.invariant_factors[i]) k[i++] = 0;
        if (i == k.size()) break;
    }
    return out;
}

}  // namespace

TEST_CASE("induced module shape") {
    auto ag = coset_groupoid(build_group("Z_2"), {0});
    ShapiroTower t(ag.groupoid, circle_over(ag.groupoid));
    const auto& B = t.induced().module();
    CHECK(B.width(0) == 2);
    CHECK(t.quotient().module().width(0) == 1);
    // constants are invariant
    auto one = t.base().zero(0);
    one.values = {CircleValue(1, 3), CircleValue(1, 3)};
    CHECK(is_cocycle(t.base(), one));
    CHECK(is_cocycle(t.induced(), t.include(one)));
}

TEST_CASE("contraction inverts the coboundary in the induced module") {
    std::mt19937_64 rng(41);
    for (auto [name, h] : std::vector<std::pair<const char*, std::vector<Element>>>{
             {"Z_3", {0}}, {"D_3", {0, 3}}, {"Z_2xZ_2", {0, 1}}, {"Z_4", {0, 1, 2, 3}}}) {
        auto ag = coset_groupoid(build_group(name), h);
        ShapiroTower t(ag.groupoid, circle_over(ag.groupoid));
        for (int n = 2; n <= 3; ++n)
            for (int trial = 0; trial < 3; ++trial) {
                auto xi = groupoid_coboundary(t.induced(), t.induced().random(n - 1, rng));
                auto eta = shapiro_contract(t, xi);
                REQUIRE(groupoid_coboundary(t.induced(), eta) == xi);
            }
    }
}

TEST_CASE("contraction of included cocycles and of zero") {
    std::mt19937_64 rng(43);
    auto ag = coset_groupoid(build_group("Z_6"), {0, 2, 4});
    ShapiroTower t(ag.groupoid, circle_over(ag.groupoid));
    for (int n = 2; n <= 3; ++n) {
        auto rep = groupoid_cohomology(t.base(), n);
        REQUIRE(rep.verified);
        auto xi = groupoid_coboundary(t.base(), t.base().random(n - 1, rng));
        for (const auto& r : rep.representatives) xi += t.base().from_values(n, r);
        auto eta = shapiro_contract(t, t.include(xi));
        CHECK(groupoid_coboundary(t.induced(), eta) == t.include(xi));
        auto z = shapiro_contract(t, t.induced().zero(n));
        CHECK(z.is_zero());
    }
    auto bad = t.induced().zero(2);
    bad.values[0] = CircleValue(1, 2);
    CHECK_THROWS_AS(shapiro_contract(t, bad), input_error);
}

TEST_CASE("dimension shift is an isomorphism on point bases") {
    for (auto [name, n] : std::vector<std::pair<const char*, int>>{{"Z_2", 2}, {"Z_2", 3}, {"Z_3", 3}, {"Z_4", 2}, {"Z_2xZ_2", 2}}) {
        auto G = build_group(name);
        std::vector<Element> all(static_cast<std::size_t>(G.order()));
        for (Element g = 0; g < G.order(); ++g) all[static_cast<std::size_t>(g)] = g;
        auto ag = coset_groupoid(G, all);
        ShapiroTower t(ag.groupoid, circle_over(ag.groupoid));
        auto ra = groupoid_cohomology(t.base(), n);
        auto rc = groupoid_cohomology(t.quotient(), n - 1);
        CAPTURE(name);
        CAPTURE(n);
        CHECK(ra.invariant_factors == rc.invariant_factors);
        auto qc = groupoid_quotient(t.quotient(), n - 1);
        std::vector<std::vector<std::int64_t>> seen;
        for (const auto& xi : all_classes(t.base(), ra)) {
            auto zeta = dimension_shift(t, xi);
            REQUIRE(is_cocycle(t.quotient(), zeta));
            auto cls = qc.class_of(zeta.values);
            CHECK(std::find(seen.begin(), seen.end(), cls) == seen.end());
            seen.push_back(cls);
        }
    }
}

TEST_CASE("dimension shift sends coboundaries to coboundaries") {
    std::mt19937_64 rng(47);
    auto ag = coset_groupoid(build_group("D_3"), {0, 3});
    ShapiroTower t(ag.groupoid, circle_over(ag.groupoid));
    for (int n = 2; n <= 3; ++n) {
        auto xi = groupoid_coboundary(t.base(), t.base().random(n - 1, rng));
        auto zeta = dimension_shift(t, xi);
        CHECK(is_coboundary(t.quotient(), zeta));
    }
    CHECK(dimension_shift(t, t.base().zero(2)).is_zero());
}

TEST_CASE("the generator of H^3(Z_2, T) shifts to a nontrivial class") {
    auto ag = coset_groupoid(build_group("Z_2"), {0, 1});
    ShapiroTower t(ag.groupoid, circle_over(ag.groupoid));
    auto r = groupoid_cohomology(t.base(), 3);
    REQUIRE(r.invariant_factors == std::vector<std::int64_t>{2});
    auto zeta = dimension_shift(t, t.base().from_values(3, r.representatives[0]));
    CHECK(is_cocycle(t.quotient(), zeta));
    CHECK_FALSE(is_coboundary(t.quotient(), zeta));
}

TEST_CASE("induced modules") {
    auto z2 = build_group("Z_2");
    auto H = group_as_groupoid(z2);
    // Z_2 + Z_2 with the swap; Z/2 itself has no nontrivial automorphism
    auto swap = cyclic_module(z2, {2, 2}, {IntMatrixX::Identity(2, 2), (IntMatrixX(2, 2) << 0, 1, 1, 0).finished()});
    auto B = group_module(z2, swap);

    auto same = pullback_groupoid(H, {0});
    auto ind = induce_module(same, B);
    CHECK(ind.fiber == B.fiber);
    CHECK(ind.alpha == B.alpha);

    auto p = pullback_groupoid(H, {0, 0});
    auto A = induce_module(p, B);
    CHECK(A.fiber[0] == swap.carrier);
    CHECK(A.fiber[1] == swap.carrier);
    CHECK(A.alpha[static_cast<std::size_t>(p.arrow(0, 1, 1))] == swap.action[1]);
    CHECK(A.alpha[static_cast<std::size_t>(p.arrow(0, 0, 1))] == IntMatrixX::Identity(2, 2));
}

TEST_CASE("a module is induced from its reduction") {
    auto ag = coset_groupoid(build_group("D_3"), {0, 3});
    const auto& G = ag.groupoid;
    // a nontrivial module: T with alpha_(y,g) = sign of g
    auto d3 = build_group("D_3");
    std::vector<IntMatrixX> act;
    for (Element g = 0; g < 6; ++g) act.push_back(IntMatrixX::Constant(1, 1, g < 3 ? 1 : -1));
    auto A = constant_module(ag, CoefficientModule{Carrier::circle(), act, 0});
    validate_module(G, A);
    auto iso = pullback_iso(G, {1});
    auto ind = induce_module(iso.pullback, restrict_module(iso.reduced, A));
    for (Arrow a = 0; a < iso.pullback.groupoid.arrows(); ++a) {
        auto [z, h, x] = iso.pullback.triple[static_cast<std::size_t>(a)];
        Arrow gz = iso.section.gamma[static_cast<std::size_t>(z)], gx = iso.section.gamma[static_cast<std::size_t>(x)];
        IntMatrixX twisted = A.alpha[static_cast<std::size_t>(G.inverse[static_cast<std::size_t>(gz)])] *
                             ind.alpha[static_cast<std::size_t>(a)] * A.alpha[static_cast<std::size_t>(gx)];
        CHECK(twisted == A.alpha[static_cast<std::size_t>(iso.pi[static_cast<std::size_t>(a)])]);
    }
}

TEST_CASE("restriction and inflation") {
    std::mt19937_64 rng(53);
    auto ag = coset_groupoid(build_group("Z_2xZ_2"), {0, 1});
    GroupoidComplex full(ag.groupoid, circle_over(ag.groupoid));
    ReductionMaps maps(full, {0});
    CHECK(maps.reduced().groupoid().arrows() == 2);
    for (int n = 0; n <= 2; ++n) {
        auto rg = groupoid_cohomology(full, n);
        auto ry = groupoid_cohomology(maps.reduced(), n);
        CHECK(rg.invariant_factors == ry.invariant_factors);
        CHECK(rg.continuous_rank == ry.continuous_rank);
        for (const auto& r : ry.representatives) {
            auto xi_y = maps.reduced().from_values(n, r);
            auto up = maps.inflate(xi_y);
            CHECK(is_cocycle(full, up));
            CHECK(maps.restrict(up) == xi_y);
        }
        for (const auto& r : rg.representatives) {
            auto xi = full.from_values(n, r);
            if (n > 0) xi += groupoid_coboundary(full, full.random(n - 1, rng));
            CHECK(is_cocycle(maps.reduced(), maps.restrict(xi)));
            auto w = maps.witness(xi);
            REQUIRE(w);
            if (n > 0) CHECK(groupoid_coboundary(full, *w) == maps.inflate(maps.restrict(xi)) - xi);
        }
    }
    // Y = X: both maps are the identity
    ReductionMaps whole(full, {0, 1});
    auto xi = groupoid_coboundary(full, full.random(1, rng));
    CHECK(whole.restrict(xi) == xi);
    CHECK(whole.inflate(xi) == xi);
}

TEST_CASE("a non-saturating Y is refused") {
    auto z2 = build_group("Z_2");
    // two fixed points: two orbits
    auto ag = action_groupoid(z2, {{0, 0}, {1, 1}});
    GroupoidComplex c(ag.groupoid, circle_over(ag.groupoid));
    CHECK_THROWS_AS(ReductionMaps(c, {0}), input_error);
}
