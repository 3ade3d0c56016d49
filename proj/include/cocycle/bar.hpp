#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "cocycle/group.hpp"
#include "cocycle/quotient.hpp"

namespace cocycle {

// A G-module whose carrier is a torus coordinate system (see Carrier). Automorphisms are integer
// matrices on value coordinates, one per group element.
struct CoefficientModule {
    Carrier carrier;
    std::vector<IntMatrixX> action;
    std::int64_t bound = 0;  // denominator bound M for circle carriers; 0 selects |G|^2

    std::size_t width() const { return carrier.size(); }
    bool trivial_action() const;
    // alpha_g applied to the `width()` values starting at x.
    void act(Element g, const CircleValue* x, CircleValue* out) const;
};

CoefficientModule trivial_module(const FiniteGroup& g, Carrier carrier, std::int64_t bound = 0);
CoefficientModule circle_module(const FiniteGroup& g, std::int64_t bound = 0);
// Action matrices in element coordinates (u_j in Z/k_j), converted to value coordinates.
CoefficientModule cyclic_module(const FiniteGroup& g, std::vector<std::int64_t> orders,
                                const std::vector<IntMatrixX>& element_action = {});
// Homomorphism law, identity acts trivially, carrier preserved.
void validate_module(const FiniteGroup& g, const CoefficientModule& a);
std::int64_t default_bound(const FiniteGroup& g, const CoefficientModule& a);

// Values on G^n, tuples in big-endian order: (g1,...,gn) -> ((g1 |G| + g2) |G| + ...) .
struct GroupCochain {
    int degree = 0;
    int group_order = 1;
    std::size_t width = 1;
    std::vector<CircleValue> values;

    std::size_t tuples() const { return values.size() / width; }
    std::size_t index(std::initializer_list<Element> t) const;
    CircleValue& operator()(std::initializer_list<Element> t, std::size_t comp = 0) { return values[index(t) * width + comp]; }
    const CircleValue& operator()(std::initializer_list<Element> t, std::size_t comp = 0) const {
        return values[index(t) * width + comp];
    }
    bool is_zero() const;

    GroupCochain& operator+=(const GroupCochain& o);
    GroupCochain& operator-=(const GroupCochain& o);
    friend GroupCochain operator+(GroupCochain a, const GroupCochain& b) { return a += b; }
    friend GroupCochain operator-(GroupCochain a, const GroupCochain& b) { return a -= b; }
    friend GroupCochain operator*(std::int64_t k, GroupCochain a);
    friend bool operator==(const GroupCochain&, const GroupCochain&) = default;
};

std::size_t power(std::size_t base, int exp);
// Decodes a tuple index into its n entries.
std::vector<Element> decode_tuple(std::size_t index, int order, int n);

GroupCochain zero_cochain(const FiniteGroup& g, const CoefficientModule& a, int degree);
// Circle components get values with denominator dividing `denominator`; finite components get
// uniform elements.
GroupCochain random_cochain(const FiniteGroup& g, const CoefficientModule& a, int degree, std::mt19937_64& rng,
                            std::int64_t denominator = 0);

// (dxi)(g0..gn) = a_{g0} xi(g1..gn) + sum_k (-1)^k xi(.., g_{k-1} g_k, ..) + (-1)^{n+1} xi(g0..g_{n-1}).
GroupCochain coboundary(const FiniteGroup& g, const CoefficientModule& a, const GroupCochain& xi);
// The same operator as an integer matrix on value coordinates.
IntMatrixX coboundary_matrix(const FiniteGroup& g, const CoefficientModule& a, int degree);
Carrier cochain_carrier(const FiniteGroup& g, const CoefficientModule& a, int degree);

bool is_cocycle(const FiniteGroup& g, const CoefficientModule& a, const GroupCochain& xi);

// Z^n / B^n for one degree, reusable across many membership queries.
CochainQuotient bar_quotient(const FiniteGroup& g, const CoefficientModule& a, int degree);
std::optional<GroupCochain> is_coboundary(const FiniteGroup& g, const CoefficientModule& a, const GroupCochain& xi);
std::optional<GroupCochain> is_coboundary(const FiniteGroup& g, const CoefficientModule& a, const CochainQuotient& q,
                                          const GroupCochain& xi);

struct FinAbReport {
    int degree = 0;
    std::vector<std::int64_t> invariant_factors;  // d_1 | d_2 | ...
    std::vector<std::vector<CircleValue>> representatives;  // value vectors, one per invariant factor
    std::int64_t bound = 0;                        // M; 0 for finite carriers
    std::vector<std::int64_t> exact_torsion;      // circle: full torsion before intersecting with (1/M)
    std::int64_t continuous_rank = 0;              // circle directions (degree 0 only)
    bool verified = false;                         // reps are cocycles with the expected, distinct classes
    bool stable = true;                            // torsion part unchanged at 2M

    std::int64_t order() const;
};

FinAbReport cohomology(const FiniteGroup& g, const CoefficientModule& a, int degree, std::int64_t bound = 0);
// Shared by the groupoid and obstruction code: build a report from a prepared quotient.
FinAbReport report_from_quotient(const CochainQuotient& q, const Carrier& mid, int degree, std::int64_t bound,
                                 bool has_prev);

GroupCochain as_cochain(const FiniteGroup& g, const CoefficientModule& a, int degree, std::vector<CircleValue> values);

// (p,q,r,s) -> u(p,q) * v(r,s).
GroupCochain cup_carry(const FiniteGroup& q, const std::vector<int>& u, const GroupCochain& v);

// Rows and columns beyond this are refused rather than attempted.
inline constexpr std::size_t kMatrixCap = 1u << 14;

}  // namespace cocycle
