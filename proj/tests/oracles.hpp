#pragma once

// Reference computations that share no code path with the library's Smith normal form. They
// build their own matrices from the group table and count kernels over Z/p^k by local-ring
// elimination.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "cocycle/group.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<std::int64_t>>;

inline std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline int valuation(std::int64_t a, std::int64_t p, int cap) {
    if (a == 0) return cap;
    int v = 0;
    while (a % p == 0 && v < cap) { a /= p; ++v; }
    return v;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1 != 0) {
        std::int64_t q = g / a1;
        std::int64_t t = g - q * a1; g = a1; a1 = t;
        t = x - q * x1; x = x1; x1 = t;
    }
    return mod(x, m);
}

// log_p of |ker(A : (Z/p^k)^n -> (Z/p^k)^m)|.
inline int kernel_exponent(Matrix a, std::int64_t p, int k) {
    const std::int64_t q = ipow(p, k);
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    for (auto& row : a)
        for (auto& v : row) v = mod(v, q);
    int exponent = 0;
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        int best = k;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                int v = valuation(a[i][j], p, k);
                if (v < best) { best = v; bi = i; bj = j; }
            }
        if (best == k) break;
        std::swap(a[t], a[bi]);
        for (auto& row : a) std::swap(row[t], row[bj]);
        std::int64_t pv = ipow(p, best);
        std::int64_t unit_inv = inverse_mod(a[t][t] / pv, q);
        for (auto& v : a[t]) v = mod(v * unit_inv, q);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == t || a[i][t] == 0) continue;
            std::int64_t c = a[i][t] / pv;
            for (std::size_t j = t; j < n; ++j) a[i][j] = mod(a[i][j] - c * a[t][j], q);
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (a[t][j] == 0) continue;
            std::int64_t c = a[t][j] / pv;
            for (std::size_t i = 0; i < m; ++i) a[i][j] = mod(a[i][j] - c * a[i][t], q);
        }
        exponent += best;
    }
    exponent += static_cast<int>(n - t) * k;
    return exponent;
}

// Inhomogeneous bar coboundary C^n -> C^{n+1} for trivial coefficients, written out directly.
inline Matrix bar_matrix(const cocycle::FiniteGroup& g, int n) {
    const std::size_t N = static_cast<std::size_t>(g.order());
    std::size_t cols = 1, rows;
    for (int i = 0; i < n; ++i) cols *= N;
    rows = cols * N;
    Matrix d(rows, std::vector<std::int64_t>(cols, 0));
    std::vector<int> t(static_cast<std::size_t>(n + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t x = r;
        for (int i = n; i >= 0; --i) { t[static_cast<std::size_t>(i)] = static_cast<int>(x % N); x /= N; }
        auto encode = [&](const std::vector<int>& s) {
            std::size_t c = 0;
            for (int v : s) c = c * N + static_cast<std::size_t>(v);
            return c;
        };
        std::vector<int> s(t.begin() + 1, t.end());
        d[r][encode(s)] += 1;
        for (int k = 1; k <= n; ++k) {
            std::vector<int> u;
            for (int i = 0; i <= n; ++i) {
                if (i == k) continue;
                u.push_back(i == k - 1 ? g.mul(t[static_cast<std::size_t>(k - 1)], t[static_cast<std::size_t>(k)]) : t[static_cast<std::size_t>(i)]);
            }
            d[r][encode(u)] += (k % 2 ? -1 : 1);
        }
        std::vector<int> h(t.begin(), t.end() - 1);
        d[r][encode(h)] += ((n + 1) % 2 ? -1 : 1);
    }
    return d;
}

inline std::map<std::int64_t, int> factor(std::int64_t m) {
    std::map<std::int64_t, int> f;
    for (std::int64_t p = 2; p * p <= m; ++p)
        while (m % p == 0) { f[p]++; m /= p; }
    if (m > 1) f[m]++;
    return f;
}

// log_p |H^n(G, Z/p^k)| (trivial action) = log|ker d_n| - (n log|C^{n-1}| - log|ker d_{n-1}|).
inline int finite_cohomology_exponent(const cocycle::FiniteGroup& g, int n, std::int64_t p, int k) {
    int ker_n = kernel_exponent(bar_matrix(g, n), p, k);
    if (n == 0) return ker_n;
    int dim_prev = 1;
    for (int i = 0; i < n - 1; ++i) dim_prev *= g.order();
    int ker_prev = kernel_exponent(bar_matrix(g, n - 1), p, k);
    int image_prev = dim_prev * k - ker_prev;
    return ker_n - image_prev;
}

// log_p |H^n(G,T)[p^j]| from the Bockstein sequence
// 0 -> H^{n-1}(G,T)/p^j -> H^n(G,Z/p^j) -> H^n(G,T)[p^j] -> 0, with H^0(G,T)/p^j = 0 and
// |A/p^j| = |A[p^j]| for finite A.
inline int circle_torsion_exponent(const cocycle::FiniteGroup& g, int n, std::int64_t p, int j) {
    if (n == 0) return j;  // T[p^j]
    int fin = finite_cohomology_exponent(g, n, p, j);
    if (n == 1) return fin;
    return fin - circle_torsion_exponent(g, n - 1, p, j);
}

// Invariant factors (ascending, each dividing the next) of H^n(G,T)[M] for n >= 1.
inline std::vector<std::int64_t> circle_cohomology_within(const cocycle::FiniteGroup& g, int n, std::int64_t M) {
    std::vector<std::vector<std::int64_t>> parts;  // per prime, cyclic orders descending
    for (auto [p, k] : factor(M)) {
        std::vector<int> at_least(static_cast<std::size_t>(k + 2), 0);
        int prev = 0;
        for (int j = 1; j <= k; ++j) {
            int e = circle_torsion_exponent(g, n, p, j);
            at_least[static_cast<std::size_t>(j)] = e - prev;
            prev = e;
        }
        std::vector<std::int64_t> orders;
        for (int j = 1; j <= k; ++j) {
            int exactly = at_least[static_cast<std::size_t>(j)] - at_least[static_cast<std::size_t>(j + 1)];
            for (int c = 0; c < exactly; ++c) orders.push_back(ipow(p, j));
        }
        std::sort(orders.rbegin(), orders.rend());
        parts.push_back(orders);
    }
    std::size_t len = 0;
    for (auto& v : parts) len = std::max(len, v.size());
    std::vector<std::int64_t> inv(len, 1);
    for (auto& v : parts)
        for (std::size_t i = 0; i < v.size(); ++i) inv[i] *= v[i];
    std::sort(inv.begin(), inv.end());
    return inv;
}

}  // namespace oracle
