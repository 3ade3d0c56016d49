#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "cocycle/bar.hpp"
#include "cocycle/group.hpp"
#include "cocycle/quotient.hpp"

namespace cocycle {

using Arrow = int;
using Point = int;

// A finite groupoid on points 0..points-1. g*h is defined when source(g) == range(h).
struct FiniteGroupoid {
    int points = 1;
    std::vector<Point> range, source;
    std::vector<Arrow> inverse;
    std::vector<Arrow> unit;     // per point
    std::vector<Arrow> product;  // arrows x arrows, -1 where not composable

    int arrows() const { return static_cast<int>(range.size()); }
    bool composable(Arrow g, Arrow h) const { return source[static_cast<std::size_t>(g)] == range[static_cast<std::size_t>(h)]; }
    Arrow mul(Arrow g, Arrow h) const;  // throws when not composable
    bool is_unit(Arrow g) const { return unit[static_cast<std::size_t>(range[static_cast<std::size_t>(g)])] == g; }
    std::vector<Arrow> from(Point x) const;  // s^-1(x), ascending
    std::vector<Arrow> isotropy(Point x) const;
    std::vector<std::vector<Point>> orbits() const;
};

// Checks units, inverses and associativity on all composable triples.
void validate_groupoid(const FiniteGroupoid& g);
FiniteGroupoid group_as_groupoid(const FiniteGroup& g);

// X x G~ with arrows (y, g), r = y, s = y.g; arrow (y, g) has index y |G~| + g.
struct ActionGroupoid {
    FiniteGroup group;
    std::vector<std::vector<Point>> action;  // action[y][g] = y.g
    FiniteGroupoid groupoid;

    Arrow arrow(Point y, Element g) const { return y * group.order() + g; }
    Point point_of(Arrow a) const { return a / group.order(); }
    Element element_of(Arrow a) const { return a % group.order(); }
};

ActionGroupoid action_groupoid(const FiniteGroup& g, std::vector<std::vector<Point>> action);
// G acting on the right cosets Hx by right multiplication; H = G gives the one-point base.
ActionGroupoid coset_action(const FiniteGroup& g, const std::vector<Element>& h);

// G_Y: arrows with both ends in Y.
struct Reduction {
    FiniteGroupoid groupoid;
    std::vector<Point> points;        // Y, ascending, as parent points
    std::vector<Arrow> arrows;        // child arrow -> parent arrow
    std::vector<int> point_index;     // parent point -> child point or -1
    std::vector<int> arrow_index;     // parent arrow -> child arrow or -1
};

Reduction reduce(const FiniteGroupoid& g, std::vector<Point> Y);

// f*(H) for f : X -> H's points: arrows (z, h, x) with f(z) = r(h), s(h) = f(x).
struct Pullback {
    FiniteGroupoid groupoid;
    std::vector<std::array<int, 3>> triple;  // (z, h, x) per arrow
    std::vector<Point> f;

    Arrow arrow(Point z, Arrow h, Point x) const;
};

Pullback pullback_groupoid(const FiniteGroupoid& h, std::vector<Point> f);

// gamma(x): the least arrow with source x and range in Y, the unit on Y; f(x) = r(gamma(x)).
struct SaturatingSection {
    std::vector<Point> Y;
    std::vector<Arrow> gamma;
    std::vector<Point> f;  // into parent points
};

SaturatingSection saturating_section(const FiniteGroupoid& g, std::vector<Point> Y);

// G is isomorphic to f*(G_Y): pi(z, h, x) = gamma(z)^-1 h gamma(x), pi^-1(g) = (z, gamma(z) g gamma(x)^-1, x).
struct PullbackIso {
    SaturatingSection section;
    Reduction reduced;
    Pullback pullback;
    std::vector<Arrow> pi;      // pullback arrow -> arrow of G
    std::vector<Arrow> pi_inv;  // arrow of G -> pullback arrow
};

PullbackIso pullback_iso(const FiniteGroupoid& g, std::vector<Point> Y);

// f_*(g) = gamma(r g) g gamma(s g)^-1, an arrow of G_Y (as a parent arrow).
Arrow push_forward(const FiniteGroupoid& g, const SaturatingSection& sec, Arrow a);

// A field of carriers over the points with isomorphisms alpha_g : A(s g) -> A(r g).
struct GroupoidModule {
    std::vector<Carrier> fiber;
    std::vector<IntMatrixX> alpha;

    std::size_t width(Point x) const { return fiber[static_cast<std::size_t>(x)].size(); }
};

GroupoidModule trivial_groupoid_module(const FiniteGroupoid& g, const Carrier& c);
// A G~-module over a one-point base pulled to the action groupoid (alpha_{(y,g)} = a_g).
GroupoidModule constant_module(const ActionGroupoid& g, const CoefficientModule& a);
GroupoidModule group_module(const FiniteGroup& g, const CoefficientModule& a);
// Chain rule on composable pairs and identities at units.
void validate_module(const FiniteGroupoid& g, const GroupoidModule& a);
GroupoidModule restrict_module(const Reduction& r, const GroupoidModule& a);

// The composable n-tuples of a groupoid, with value offsets for a given module.
struct CochainLayout {
    int degree = 0;
    std::vector<std::vector<Arrow>> tuples;  // degree 0: one point per tuple
    std::vector<std::size_t> offset;
    std::vector<Point> fiber;                // r(g1), or the point itself
    std::unordered_map<std::uint64_t, std::size_t> index;
    Carrier carrier;                         // flat carrier of all values
    std::uint64_t base = 1;

    std::size_t size() const { return carrier.size(); }
    std::optional<std::size_t> find(const std::vector<Arrow>& t) const;
    std::size_t at(const std::vector<Arrow>& t) const;  // throws if t is not composable
};

struct GroupoidCochain {
    std::shared_ptr<const CochainLayout> layout;
    std::vector<CircleValue> values;

    int degree() const { return layout->degree; }
    CircleValue* at(const std::vector<Arrow>& t) { return values.data() + layout->offset[layout->at(t)]; }
    const CircleValue* at(const std::vector<Arrow>& t) const { return values.data() + layout->offset[layout->at(t)]; }
    bool is_zero() const;

    GroupoidCochain& operator+=(const GroupoidCochain& o);
    GroupoidCochain& operator-=(const GroupoidCochain& o);
    friend GroupoidCochain operator+(GroupoidCochain a, const GroupoidCochain& b) { return a += b; }
    friend GroupoidCochain operator-(GroupoidCochain a, const GroupoidCochain& b) { return a -= b; }
    friend bool operator==(const GroupoidCochain& a, const GroupoidCochain& b) { return a.values == b.values; }
};

// A groupoid with a module, caching layouts per degree.
class GroupoidComplex {
public:
    GroupoidComplex(FiniteGroupoid g, GroupoidModule a, std::int64_t bound = 0);

    const FiniteGroupoid& groupoid() const { return g_; }
    const GroupoidModule& module() const { return a_; }
    std::int64_t bound() const { return bound_; }
    std::shared_ptr<const CochainLayout> layout(int degree) const;

    GroupoidCochain zero(int degree) const;
    GroupoidCochain random(int degree, std::mt19937_64& rng, std::int64_t denominator = 0) const;
    GroupoidCochain from_values(int degree, std::vector<CircleValue> values) const;
    // alpha_g applied to values of A(s g), written to out (values of A(r g)).
    void act(Arrow g, const CircleValue* x, CircleValue* out) const;
    void act_inverse(Arrow g, const CircleValue* x, CircleValue* out) const { act(g_.inverse[static_cast<std::size_t>(g)], x, out); }

private:
    FiniteGroupoid g_;
    GroupoidModule a_;
    std::int64_t bound_;
    mutable std::vector<std::shared_ptr<const CochainLayout>> layouts_;
};

// Degree 0: (dxi)(g) = alpha_g xi(s g) - xi(r g); higher degrees as in the bar complex.
GroupoidCochain groupoid_coboundary(const GroupoidComplex& c, const GroupoidCochain& xi);
IntMatrixX groupoid_coboundary_matrix(const GroupoidComplex& c, int degree);
bool is_cocycle(const GroupoidComplex& c, const GroupoidCochain& xi);
CochainQuotient groupoid_quotient(const GroupoidComplex& c, int degree);
std::optional<GroupoidCochain> is_coboundary(const GroupoidComplex& c, const CochainQuotient& q, const GroupoidCochain& xi);
std::optional<GroupoidCochain> is_coboundary(const GroupoidComplex& c, const GroupoidCochain& xi);
FinAbReport groupoid_cohomology(const GroupoidComplex& c, int degree, std::int64_t bound = 0);

}  // namespace cocycle
