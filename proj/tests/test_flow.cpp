#include <doctest.h>

#include "cocycle/flow.hpp"

using namespace cocycle;

TEST_CASE("Gauss-bracket cocycle values") {
    FlowGrid g(8);
    for (const auto& x : g.points())
        for (const auto& t : g.translations(2)) CHECK(szet_cocycle(1, t, x).is_zero());
    CHECK(szet_cocycle(Rational(1, 3), Rational(1, 8), Rational(1, 4)).is_zero());
    // floor(3/4) - floor(5/4) = -1, times 1/2
    CHECK(szet_cocycle(Rational(1, 2), Rational(1, 2), Rational(3, 4)) == CircleValue(1, 2));
    CHECK(szet_cocycle(Rational(1, 3), Rational(1, 2), Rational(3, 4)) == CircleValue(2, 3));
}

TEST_CASE("u_psi and its coboundary") {
    for (std::int64_t j = 0; j < 8; ++j) CHECK(u_psi(Rational(3, 7), Rational(j, 8)).is_zero());
    for (std::int64_t j = -16; j < 16; ++j) CHECK(u_psi(0, Rational(j, 8)).is_zero());
    CHECK(u_psi(Rational(1, 3), Rational(-1, 2)) == CircleValue(2, 3));
    CHECK(u_psi(Rational(4, 3), Rational(9, 4)) == CircleValue(2, 3));
    auto r = check_cobound(FlowGrid(8));
    CHECK(r.ok());
}

TEST_CASE("rho") {
    auto z2 = build_group("Z_2");
    RhoMap zero(z2, zero_modulus(2));
    for (Element h = 0; h < 2; ++h)
        for (std::int64_t s = -2; s <= 2; ++s) CHECK(zero(0, {h, Rational(s)}) == QmElement{h, s});
    ModulusMap m = zero_modulus(2);
    m[1].value = CircleValue(1, 2);
    RhoMap rho(z2, m);
    for (std::int64_t j = 0; j < 4; ++j) CHECK(rho(Rational(j, 4), {0, 0}) == QmElement{});
    // y = 1/4, h = 1, s = 1/2: 1/2 - [[1/4 - 1/2 + 1/2]] + 1/4 = 1/2, i.e. m(1) + 0 T'
    CHECK(rho.second(Rational(1, 4), {1, Rational(1, 2)}) == Rational(1, 2));
    CHECK(rho(Rational(1, 4), {1, Rational(1, 2)}) == QmElement{1, 0});
    // y = 3/4, h = 1, s = 1: 1 - [[5/4]] + 3/4 = 3/2
    CHECK(rho(Rational(3, 4), {1, Rational(1)}) == QmElement{1, 1});

    FlowGrid g(4);
    Qm qm(rho.setup());
    std::size_t pairs = 0;
    for (const auto& y : g.points())
        for (Element h = 0; h < 2; ++h)
            for (Element k = 0; k < 2; ++k)
                for (const auto& s : g.translations(1))
                    for (const auto& t : g.translations(1)) {
                        FlowArrow a{h, s}, b{k, t};
                        CHECK(rho(y, rho.mul(a, b)) == qm.mul(rho(y, a), rho(rho.act(y, a), b)));
                        ++pairs;
                    }
    CHECK(pairs == 4 * 4 * 81);
}

TEST_CASE("eigen operator") {
    FlowGrid g(8);
    auto r = eigen_check(g, Rational(3, 8), Rational(3, 8), Rational(1, 5));
    CHECK(r.constant);
    CHECK(r.value.is_zero());
    r = eigen_check(g, 0, 1, Rational(1, 2));
    CHECK(r.constant);
    CHECK(r.value == CircleValue(1, 2));
    r = eigen_check(g, Rational(1, 4), Rational(9, 4), Rational(1, 3));
    CHECK(r.constant);
    CHECK(r.value == CircleValue(2, 3));
    CHECK(r.pairing == CircleValue(1, 3));
    CHECK_THROWS_AS(eigen_check(g, 0, Rational(1, 2), Rational(1, 2)), input_error);
}

TEST_CASE("exhaustive grid checks") {
    for (std::int64_t D : {2, 4, 8}) {
        FlowGrid g(D);
        CAPTURE(D);
        for (const auto& rep : {check_szet(g), check_cobound(g), check_rho(g), check_eigen(g)}) {
            CHECK(rep.ok());
            for (const auto& i : rep.identities) {
                CAPTURE(i.name);
                CHECK(i.failed == 0);
                CHECK(i.checked > 0);
            }
        }
    }
}
