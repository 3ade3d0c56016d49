#pragma once

#include <optional>
#include <string>

#include "cocycle/groupoid.hpp"

namespace cocycle {

// N(x) inside the isotropy at x, closed under conjugation by every arrow.
struct NormalSubgroupoid {
    std::vector<std::vector<Arrow>> at;  // per point, ascending
    std::vector<char> member;            // per arrow

    bool contains(Arrow a) const { return member[static_cast<std::size_t>(a)] != 0; }
};

NormalSubgroupoid make_normal_subgroupoid(const FiniteGroupoid& g, std::vector<std::vector<Arrow>> at);
// {(x, m) : m in L} for an action groupoid; L must act trivially on the base and be normal.
NormalSubgroupoid kernel_subgroupoid(const ActionGroupoid& g, const SubgroupData& l);

// The data a pair lives on. N must act trivially on the module.
struct CharContext {
    FiniteGroupoid groupoid;
    NormalSubgroupoid normal;
    GroupoidModule module;
};

CharContext make_char_context(FiniteGroupoid g, NormalSubgroupoid n, GroupoidModule a);

// lambda(m; g) in A(r g) for m in N(r g); mu(m, n) in A(x) for m, n in N(x).
// Both are dense over arrow pairs, empty where undefined.
struct CharacteristicPair {
    int arrows = 0;
    std::vector<std::vector<CircleValue>> lambda, mu;

    std::vector<CircleValue>& lam(Arrow m, Arrow g) { return lambda[static_cast<std::size_t>(m * arrows + g)]; }
    const std::vector<CircleValue>& lam(Arrow m, Arrow g) const { return lambda[static_cast<std::size_t>(m * arrows + g)]; }
    std::vector<CircleValue>& mu_at(Arrow m, Arrow n) { return mu[static_cast<std::size_t>(m * arrows + n)]; }
    const std::vector<CircleValue>& mu_at(Arrow m, Arrow n) const { return mu[static_cast<std::size_t>(m * arrows + n)]; }

    CharacteristicPair& operator+=(const CharacteristicPair& o);
    CharacteristicPair& operator-=(const CharacteristicPair& o);
    friend CharacteristicPair operator+(CharacteristicPair a, const CharacteristicPair& b) { return a += b; }
    friend CharacteristicPair operator-(CharacteristicPair a, const CharacteristicPair& b) { return a -= b; }
    friend bool operator==(const CharacteristicPair&, const CharacteristicPair&) = default;
};

CharacteristicPair zero_pair(const CharContext& ctx);

struct CharCheck {
    bool ok = true;
    int identity = 0;  // 1..4 for the first failing family, 0 when ok
    std::string detail;
};

// (i)   mu is a 2-cocycle on each N(x)
// (ii)  lambda(m; gh) = lambda(m; g) + alpha_g lambda(g^-1 m g; h)
// (iii) lambda(m; n) = mu(n, n^-1 m n) - mu(m, n)
// (iv)  lambda(m; g) + lambda(n; g) - lambda(mn; g) = alpha_g mu(g^-1 m g, g^-1 n g) - mu(m, n)
CharCheck verify_char_pair(const CharContext& ctx, const CharacteristicPair& p);

// c : N -> A, one value vector per member arrow (empty elsewhere).
using CharCochain = std::vector<std::vector<CircleValue>>;
CharCochain zero_char_cochain(const CharContext& ctx);
// mu_c(m, n) = c(m) + c(n) - c(mn); lambda_c(m; g) = alpha_g c(g^-1 m g) - c(m).
CharacteristicPair char_coboundary(const CharContext& ctx, const CharCochain& c);
// Exact solve for c with char_coboundary(c) = p; the result is verified.
std::optional<CharCochain> char_coboundary_witness(const CharContext& ctx, const CharacteristicPair& p);

// Group level: L normal in H~ acting on X, A = T^X with (alpha_g F)(x) = F(x.g).
// Groupoid level: X x H~ with N(x) = {(x, m)} and trivial T coefficients.
struct CharTranslation {
    ActionGroupoid action;
    SubgroupData kernel;
    CharContext group_level;
    CharContext groupoid_level;
};

CharTranslation make_char_translation(const FiniteGroup& h, const SubgroupData& l, std::vector<std::vector<Point>> action);
// lambda~((x,m); (x,g)) = lambda(m; g)(x), mu~((x,m), (x,n)) = mu(m, n)(x)
CharacteristicPair translate_char_pair(const CharTranslation& t, const CharacteristicPair& p);
CharacteristicPair untranslate_char_pair(const CharTranslation& t, const CharacteristicPair& p);
CharCochain translate_char_cochain(const CharTranslation& t, const CharCochain& c);
CharCochain untranslate_char_cochain(const CharTranslation& t, const CharCochain& c);

// The pair restricted to G_Y with N(y), y in Y.
std::pair<CharContext, CharacteristicPair> restrict_char_pair(const CharContext& ctx, const CharacteristicPair& p,
                                                              const Reduction& r);

}  // namespace cocycle
