#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cocycle/rational.hpp"
#include "cocycle/smith.hpp"

namespace cocycle {

// Coordinates of a torus T^c where component j is the full circle (modulus 0) or its cyclic
// subgroup (1/k)Z/Z (modulus k). A carrier is either all-circle or all-finite.
struct Carrier {
    std::vector<std::int64_t> moduli;

    static Carrier circle(std::size_t c = 1) { return {std::vector<std::int64_t>(c, 0)}; }
    static Carrier cyclics(std::vector<std::int64_t> orders);

    std::size_t size() const { return moduli.size(); }
    bool is_circle() const;
    bool is_finite() const;
    bool admits(std::size_t j, const CircleValue& v) const {
        return moduli[j] == 0 || moduli[j] % v.denominator() == 0;
    }
    friend bool operator==(const Carrier&, const Carrier&) = default;
};

// D acting on value vectors mod 1. D must have integer entries.
std::vector<CircleValue> apply_matrix(const IntMatrixX& D, const std::vector<CircleValue>& x);

// The quotient {x : D x = 0 mod 1} / (D_prev y + integer vectors) for integer matrices acting on
// value coordinates. For finite carriers D is rewritten in element coordinates first.
//
// All circle case: L D R = diag(s_i) gives the torsion of coker D; w = R^-1 x locates a class.
// Finite case: the cocycle lattice and the coboundary lattice are both explicit, and a second
// Smith form presents their quotient.
class CochainQuotient {
public:
    // D_prev : C^{n-1} -> C^n and D : C^n -> C^{n+1}, both integer on value coordinates. Pass a
    // matrix with zero columns for degree 0.
    CochainQuotient(const IntMatrixX& D_prev, const IntMatrixX& D, Carrier prev, Carrier mid, Carrier next);

    // Invariant factors of the quotient (each > 1), in divisibility order.
    const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
    // Dimension of the connected part; only nonzero in degree 0 over the circle.
    std::int64_t continuous_rank() const { return continuous_; }
    // Invariant factors of the subgroup of classes killed by M, i.e. those representable inside
    // (1/M)Z/Z when the carrier is the circle. Continuous directions contribute factors M.
    std::vector<std::int64_t> factors_within(std::int64_t M) const;

    bool is_cocycle(const std::vector<CircleValue>& x) const;
    // Coordinates of the class of x, one per invariant factor (reduced mod that factor).
    std::vector<std::int64_t> class_of(const std::vector<CircleValue>& x) const;
    // Representative of generator i; with `order` < the factor, the generator of its order-`order`
    // subgroup instead.
    std::vector<CircleValue> representative(std::size_t i, std::int64_t order = 0) const;
    // Generator k of the connected part, cut down to its (1/M) points. Degree 0 only.
    std::vector<CircleValue> continuous_representative(std::size_t k, std::int64_t M) const;
    // y with D_prev y = x mod 1 when x is a coboundary.
    std::optional<std::vector<CircleValue>> preimage(const std::vector<CircleValue>& x) const;

private:
    IntMatrixX D_prev_, D_;
    Carrier prev_, mid_, next_;
    bool finite_ = false;
    std::vector<std::int64_t> factors_;
    std::int64_t continuous_ = 0;

    SmithForm<std::int64_t> snf_;  // of D (rows rescaled in the finite case), with R and R^-1
    std::vector<std::size_t> torsion_index_;  // circle case: positions i < rank with s_i > 1
    mutable std::optional<SmithForm<std::int64_t>> prev_snf_;  // of D_prev, with L and R, built lazily

    IntVectorX scale_;  // e: the cocycle lattice is R diag(e) Z^V in element coordinates
    SmithForm<std::int64_t> rel_;  // of the coboundary lattice in basis coordinates, all transforms
    std::vector<std::size_t> rel_index_;

    std::vector<Rational> circle_coords(const std::vector<CircleValue>& x) const;
    IntVectorX element_coords(const std::vector<CircleValue>& x) const;
};

}  // namespace cocycle
