#pragma once

#include <algorithm>
#include <random>

#include "cocycle/groupoid.hpp"
#include "cocycle/obstruction.hpp"

namespace fixture {

using namespace cocycle;

inline ActionGroupoid coset_groupoid(const FiniteGroup& g, const std::vector<Element>& h) { return coset_action(g, h); }

inline GroupoidModule circle_over(const FiniteGroupoid& g) { return trivial_groupoid_module(g, Carrier::circle()); }

inline GroupCochain normalized(GroupCochain c) {
    for (std::size_t i = 0; i < c.tuples(); ++i) {
        auto t = decode_tuple(i, c.group_order, c.degree);
        if (std::find(t.begin(), t.end(), 0) != t.end()) c.values[i] = CircleValue();
    }
    return c;
}

inline QmWitness random_witness(const ModulusSetup& s, std::mt19937_64& rng, std::int64_t den) {
    auto A = circle_module(s.Q());
    return {normalized(random_cochain(s.Q(), A, 2, rng, den)), normalized(random_cochain(s.Q(), A, 1, rng, den))};
}

// A normalized Q_m coboundary plus normalized H^3(Q) classes with d = 0.
inline StandardCocycle random_standard(const ModulusSetup& s, std::mt19937_64& rng, std::int64_t den) {
    auto c = qm_coboundary_of(s, random_witness(s, rng, den));
    const auto& Q = s.Q();
    auto h3 = compute_hout(make_setup(Q, make_subgroup(Q, {0}), zero_modulus(Q.order())));
    for (const auto& r : h3.representatives) c.cbar += static_cast<std::int64_t>(rng() % 7) * r.c.cbar;
    return c;
}

}  // namespace fixture
