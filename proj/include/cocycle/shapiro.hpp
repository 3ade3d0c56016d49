#pragma once

#include <optional>

#include "cocycle/groupoid.hpp"

namespace cocycle {

// B(x) = A(x)-valued functions on s^-1(x), coordinates ordered by from(x) with A(x) inside each slot;
// (beta_g b)(h) = alpha_g(b(hg)).
GroupoidModule shapiro_module(const FiniteGroupoid& g, const GroupoidModule& a);
// C(x) = B(x)/A(x), stored as functions vanishing at the unit.
GroupoidModule shapiro_quotient_module(const FiniteGroupoid& g, const GroupoidModule& a);

// A, its induced module B and the quotient C over the same groupoid.
class ShapiroTower {
public:
    ShapiroTower(const FiniteGroupoid& g, const GroupoidModule& a, std::int64_t bound = 0);

    const GroupoidComplex& base() const { return a_; }
    const GroupoidComplex& induced() const { return b_; }
    const GroupoidComplex& quotient() const { return c_; }

    GroupoidCochain include(const GroupoidCochain& xi) const;   // i_*, constants
    GroupoidCochain project(const GroupoidCochain& eta) const;  // j_*, subtract the value at the unit
    std::size_t slot(Point x, Arrow h) const;                   // position of h in from(x)

private:
    GroupoidComplex a_, b_, c_;
    std::vector<std::vector<Arrow>> from_;
    std::vector<int> slot_;  // arrow -> position in from(s(arrow))
};

// eta(g1..g_{n-1})(g) = alpha_g^-1(xi(g, g1, .., g_{n-1})(r g)); d eta = xi for every cocycle xi in B.
// Throws input_error when xi is not a cocycle.
GroupoidCochain shapiro_contract(const ShapiroTower& t, const GroupoidCochain& xi);
// A degree-n cocycle with values in A to the degree n-1 cocycle j(eta) with values in C, i_* xi = d eta.
GroupoidCochain dimension_shift(const ShapiroTower& t, const GroupoidCochain& xi);

// Ind: the module over f*(H) with A(x) = B(f x) and alpha_(z,h,x) = beta_h.
GroupoidModule induce_module(const Pullback& p, const GroupoidModule& b);

// G against its reduction G_Y for a saturating Y.
class ReductionMaps {
public:
    ReductionMaps(const GroupoidComplex& full, std::vector<Point> Y);

    const GroupoidComplex& full() const { return full_; }
    const GroupoidComplex& reduced() const { return part_; }
    const SaturatingSection& section() const { return sec_; }
    const Reduction& reduction() const { return red_; }

    GroupoidCochain restrict(const GroupoidCochain& xi) const;
    // xi(g1..gn) = alpha_{gamma(r g1)}^-1 xi_Y(f_* g1, .., f_* gn); degree 0: alpha_{gamma(x)}^-1 xi_Y(f x).
    GroupoidCochain inflate(const GroupoidCochain& xi_y) const;
    // eta with d eta = inflate(restrict(xi)) - xi; degree 0 needs the difference to vanish and returns zero.
    std::optional<GroupoidCochain> witness(const GroupoidCochain& xi) const;

private:
    GroupoidComplex full_;
    SaturatingSection sec_;
    Reduction red_;
    GroupoidComplex part_;
    std::vector<Arrow> push_;  // f_* as child arrows
};

}  // namespace cocycle
