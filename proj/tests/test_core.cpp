#include <doctest.h>

#include <random>

#include "cocycle/group.hpp"

using namespace cocycle;

TEST_CASE("circle values are reduced rationals mod 1") {
    CHECK(CircleValue(3, 2) == CircleValue(1, 2));
    CHECK(CircleValue(-1, 3) == CircleValue(2, 3));
    CHECK(CircleValue(2, 4).denominator() == 2);
    CHECK((CircleValue(1, 2) + CircleValue(1, 2)).is_zero());
    CHECK(3 * CircleValue(1, 3) == CircleValue());
    CHECK(CircleValue::parse("-5/6") == CircleValue(1, 6));
    CHECK_THROWS(Rational::parse("0.5"));
    CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("circle arithmetic is an exact abelian group") {
    std::mt19937_64 rng(7);
    auto draw = [&] {
        std::int64_t d = static_cast<std::int64_t>(rng() % 60) + 1;
        return CircleValue(static_cast<std::int64_t>(rng() % 1000) - 500, d);
    };
    for (int i = 0; i < 2000; ++i) {
        auto a = draw(), b = draw(), c = draw();
        CHECK((a + (-a)).is_zero());
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a - b == a + (-b));
    }
}

TEST_CASE("circle addition agrees with rational addition across denominator sizes") {
    std::mt19937_64 rng(11);
    // small, near 2^31 and large denominators hit all three addition paths
    const std::vector<std::int64_t> dens = {1, 2, 12, 840, (std::int64_t{1} << 31) - 1, std::int64_t{1} << 31, 1000000007LL * 3};
    for (int i = 0; i < 500; ++i) {
        std::int64_t d1 = dens[rng() % dens.size()], d2 = dens[rng() % dens.size()];
        Rational x(static_cast<std::int64_t>(rng() % 1000000), d1), y(static_cast<std::int64_t>(rng() % 1000000), d2);
        CHECK(CircleValue(x) + CircleValue(y) == CircleValue(x + y));
        CHECK(CircleValue(x) - CircleValue(y) == CircleValue(x - y));
    }
}

TEST_CASE("rational overflow is reported, not wrapped") {
    Rational big(INT64_MAX / 2);
    CHECK_THROWS_AS(big * Rational(4), overflow_error);
    CHECK_THROWS_AS(Rational(1, INT64_MAX / 3) + Rational(1, INT64_MAX / 5), overflow_error);
}

TEST_CASE("presets") {
    auto z1 = build_group("Z_1");
    CHECK(z1.order() == 1);
    auto v4 = build_group("Z_2⊕Z_2");
    CHECK(v4.order() == 4);
    for (Element g = 0; g < 4; ++g) CHECK(v4.inv(g) == g);
    CHECK(build_group("z2xz2") == v4);
    auto d4 = build_group("D_4");
    CHECK(d4.order() == 8);
    // brute-force centre
    int central = 0;
    for (Element a = 0; a < 8; ++a) {
        bool c = true;
        for (Element b = 0; b < 8; ++b) c = c && d4.mul(a, b) == d4.mul(b, a);
        central += c;
    }
    CHECK(central == 2);
    CHECK(d4.center().size() == 2);
    CHECK_THROWS_AS(build_group("Q_8"), input_error);
    CHECK(build_group("z6").mul(4, 5) == 3);
}

TEST_CASE("table validation names the failing triple") {
    // Z_3 table with one entry corrupted so that associativity fails
    std::vector<std::vector<int>> t = {{0, 1, 2}, {1, 2, 0}, {2, 0, 0}};
    try {
        FiniteGroup g("bad", t);
        FAIL("accepted a bad table");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("triple") != std::string::npos);
    }
    CHECK_THROWS_AS(FiniteGroup("open", {{0, 1}, {1, 2}}), input_error);
}

TEST_CASE("every preset of order <= 8 is associative") {
    for (auto name : {"Z_1", "Z_2", "Z_3", "Z_4", "Z_5", "Z_6", "Z_7", "Z_8", "Z_2xZ_2", "Z_2xZ_4", "Z_2xZ_2xZ_2",
                      "D_3", "D_4"}) {
        auto g = build_group(name);
        for (Element a = 0; a < g.order(); ++a)
            for (Element b = 0; b < g.order(); ++b)
                for (Element c = 0; c < g.order(); ++c) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
}

TEST_CASE("quotients") {
    auto z4 = build_group("Z_4");
    auto q = quotient(z4, make_subgroup(z4, {0, 2}));
    CHECK(q.Q.order() == 2);
    CHECK(q.pi(3) == 1);

    auto id = quotient(z4, make_subgroup(z4, {0}));
    CHECK(id.Q == z4);
    for (Element g = 0; g < 4; ++g) CHECK(id.pi(g) == g);

    auto v4 = build_group("Z_2xZ_2");
    auto diag = quotient(v4, make_subgroup(v4, {0, 3}));  // (0,0) and (1,1)
    CHECK(diag.Q.order() == 2);
    CHECK(diag.pi(1) == diag.pi(2));
    CHECK(diag.pi(1) == 1);

    auto d3 = build_group("D_3");
    auto refl = make_subgroup(d3, {0, 3});
    CHECK_FALSE(refl.normal);
    CHECK_THROWS_AS(quotient(d3, refl), input_error);
}

TEST_CASE("sections and their cocycles") {
    auto z4 = build_group("Z_4");
    auto q = quotient(z4, make_subgroup(z4, {0, 2}));
    auto s = make_section(q.pi);
    CHECK(s(0) == 0);
    CHECK(s(1) == 1);
    auto nN = section_cocycle(s);
    CHECK(nN(1, 1) == 2);
    CHECK(nN(0, 1) == 0);
    CHECK(nN(1, 0) == 0);
    // element-wise: n_N(g) = s(pi g) g^-1
    CHECK(nN.element[3] == z4.mul(1, z4.inv(3)));

    auto z6 = build_group("Z_6");
    auto q6 = quotient(z6, make_subgroup(z6, {0, 3}));
    auto s6 = make_section(q6.pi);
    CHECK(s6.choice == std::vector<Element>{0, 1, 2});

    auto ident = make_section(make_hom(z4, z4, {0, 1, 2, 3}));
    CHECK(ident.choice == std::vector<Element>{0, 1, 2, 3});

    // split extension: Z_2 x Z_2 -> Z_2 on the first factor, section is a homomorphism
    auto v4 = build_group("Z_2xZ_2");
    auto qs = quotient(v4, make_subgroup(v4, {0, 1}));
    auto split = section_cocycle(make_section(qs.pi));
    for (auto v : split.pair) CHECK(v == 0);
}

TEST_CASE("section cocycle identity holds for every central quotient") {
    for (auto name : {"Z_4", "Z_6", "Z_8", "Z_2xZ_4", "D_4", "Z_2xZ_2xZ_2"}) {
        auto g = build_group(name);
        for (const auto& n : central_subgroups(g)) {
            auto q = quotient(g, n);
            auto c = section_cocycle(make_section(q.pi));
            const auto& Q = q.Q;
            for (Element a = 0; a < Q.order(); ++a)
                for (Element b = 0; b < Q.order(); ++b)
                    for (Element d = 0; d < Q.order(); ++d)
                        REQUIRE(g.mul(c(a, b), c(Q.mul(a, b), d)) == g.mul(c(b, d), c(a, Q.mul(b, d))));
        }
    }
}

TEST_CASE("carry cocycle") {
    auto z2 = build_group("Z_2");
    auto zero = carry_cocycle(z2, zero_modulus(2));
    for (int v : zero.values) CHECK(v == 0);

    ModulusMap half{{Period::TPrime, CircleValue()}, {Period::TPrime, CircleValue(1, 2)}};
    auto t = carry_cocycle(z2, half);
    CHECK(t(1, 1) == 1);
    CHECK(t(0, 1) == 0);

    auto z3 = build_group("Z_3");
    ModulusMap third{{Period::TPrime, CircleValue()}, {Period::TPrime, CircleValue(1, 3)}, {Period::TPrime, CircleValue(2, 3)}};
    auto t3 = carry_cocycle(z3, third);
    CHECK(t3(1, 2) == 1);
    CHECK(t3(1, 1) == 0);
    for (Element a = 0; a < 3; ++a)
        for (Element b = 0; b < 3; ++b)
            for (Element c = 0; c < 3; ++c) CHECK(t3(a, b) + t3(z3.mul(a, b), c) == t3(b, c) + t3(a, z3.mul(b, c)));

    ModulusMap broken = third;
    broken[2].value = CircleValue(1, 3);
    CHECK_THROWS_AS(carry_cocycle(z3, broken), input_error);
}

TEST_CASE("pairing") {
    TorusPoint s{Period::T, CircleValue(2, 7)};
    CHECK(pairing(s, 0).is_zero());
    CHECK(pairing({Period::T, CircleValue(1, 2)}, 1) == CircleValue(1, 2));
    CHECK(pairing({Period::T, CircleValue(1, 3)}, 2) == CircleValue(1, 3));
    for (int j = -5; j <= 5; ++j)
        for (int k = -5; k <= 5; ++k) CHECK(pairing(s, j + k) == pairing(s, j) + pairing(s, k));
}
