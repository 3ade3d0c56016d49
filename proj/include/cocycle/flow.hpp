#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cocycle/obstruction.hpp"

namespace cocycle {

// The flow on R/T'Z at resolution D: points j/D and translations in (1/D)Z, both in units of T'.
// s-parameters are in units of T. Brackets are exact floors.
struct FlowGrid {
    std::int64_t D = 1;

    explicit FlowGrid(std::int64_t d);
    std::vector<Rational> points() const;                       // j/D, 0 <= j < D
    std::vector<Rational> translations(std::int64_t reach) const;  // j/D, |j| <= reach D
};

// Every a/b in [0,1) with b <= max_den.
std::vector<Rational> fractions(std::int64_t max_den);

// s (floor(x) - floor(x+t)).
CircleValue szet_cocycle(const Rational& s, const Rational& t, const Rational& x);
// [[s]] floor(x).
CircleValue u_psi(const Rational& s, const Rational& x);
// <s, floor(x+t) - floor(x)>.
CircleValue s_z(const Rational& s, const Rational& t, const Rational& x);
// u(s; x+t) - u(s; x) = kCoboundarySign s_Z(s, t; x): with <s,k> = -k s the translation x -> x+t
// makes u pick up -s_Z.
inline constexpr int kCoboundarySign = -1;

// Arrows of X x (H x R): (y, h, s), range y, source y.(h,s) = [[y - m(h) + s]].
struct FlowArrow {
    Element h = 0;
    Rational s;
};

class RhoMap {
public:
    // H with m; H_m is Q_m of the setup (H, {0}, m).
    RhoMap(const FiniteGroup& h, ModulusMap m);

    const ModulusSetup& setup() const { return setup_; }
    Rational act(const Rational& y, const FlowArrow& a) const;
    // (h, s - [[y - m(h) + s]] + [[y]]) as a Q_m element; throws if the second coordinate misses m(h) + Z.
    QmElement operator()(const Rational& y, const FlowArrow& a) const;
    // Second coordinate of rho in units of T'.
    Rational second(const Rational& y, const FlowArrow& a) const;
    FlowArrow mul(const FlowArrow& a, const FlowArrow& b) const { return {setup_.G.mul(a.h, b.h), a.s + b.s}; }

private:
    ModulusSetup setup_;
};

using QmCochain = std::function<CircleValue(const std::vector<QmElement>&)>;
using FlowCochain = std::function<CircleValue(const Rational&, const std::vector<FlowArrow>&)>;

// rho*(c)(x; a1..an) = c(rho(x, a1), rho(x a1, a2), ..). The result refers to rho, which must outlive it.
FlowCochain rho_pullback(const RhoMap& rho, QmCochain c);
// Trivial coefficients on both sides.
CircleValue qm_cochain_coboundary(const Qm& qm, const QmCochain& f, const std::vector<QmElement>& t);
CircleValue flow_cochain_coboundary(const RhoMap& rho, const FlowCochain& f, const Rational& y, const std::vector<FlowArrow>& t);

struct EigenResult {
    bool constant = true;
    CircleValue value;    // u(t; x + s - k) - u(t; x)
    CircleValue pairing;  // <t, (s - k)/T'>, equal to -value
};

// Requires s - k in Z (units of T').
EigenResult eigen_check(const FlowGrid& g, const Rational& k, const Rational& s, const Rational& t);

struct IdentityCount {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
};

struct FlowReport {
    std::int64_t D = 1;
    std::string convention;
    std::vector<IdentityCount> identities;

    bool ok() const;
};

// The three identities of c including c(1, t, x) = 0, s of denominator <= max_den.
FlowReport check_szet(const FlowGrid& g, std::int64_t max_den = 8);
// The coboundary relation and the period of u in s.
FlowReport check_cobound(const FlowGrid& g, std::int64_t max_den = 8);
// Multiplicativity and range of rho, rho* d = d rho* in degrees 0..2, i* rho* = id and rho* of
// standard 3-cocycles on sampled tuples.
FlowReport check_rho(const FlowGrid& g, std::uint64_t seed = 1);
FlowReport check_eigen(const FlowGrid& g);

}  // namespace cocycle
