#pragma once

// Brute-force side of the standard-cocycle checks. Q_m is multiplied here from the brackets of m
// directly, and c is expanded symbolically: every evaluation is an integer row over the unknowns
// (cbar on Q^3, then d on Q^2).

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cocycle/obstruction.hpp"
#include "oracles.hpp"

namespace oracle {

using cocycle::Element;
using cocycle::FiniteGroup;
using cocycle::Rational;

struct LabeledSetup {
    std::string label;
    cocycle::ModulusSetup setup;
};

// Every homomorphism G -> Q/Z with values of denominator <= 4, found from a greedy generating set.
inline std::vector<cocycle::ModulusMap> small_moduli(const FiniteGroup& g) {
    std::vector<Element> gens;
    auto span = [&](const std::vector<Element>& s) { return cocycle::generated_subgroup(g, s).elements.size(); };
    for (Element x = 1; x < g.order(); ++x)
        if (span(gens) < static_cast<std::size_t>(g.order())) {
            auto with = gens;
            with.push_back(x);
            if (span(with) > span(gens)) gens = with;
        }
    std::vector<cocycle::ModulusMap> out;
    std::vector<int> choice(gens.size(), 0);
    while (true) {
        // propagate generator values along words
        std::vector<int> val(static_cast<std::size_t>(g.order()), -1);  // in units of 1/12
        val[0] = 0;
        std::vector<Element> frontier{0};
        bool ok = true;
        for (std::size_t i = 0; i < frontier.size() && ok; ++i)
            for (std::size_t j = 0; j < gens.size(); ++j) {
                Element y = g.mul(frontier[i], gens[j]);
                int v = (val[static_cast<std::size_t>(frontier[i])] + choice[j]) % 12;
                if (val[static_cast<std::size_t>(y)] < 0) { val[static_cast<std::size_t>(y)] = v; frontier.push_back(y); }
                else if (val[static_cast<std::size_t>(y)] != v) { ok = false; break; }
            }
        if (ok) {
            cocycle::ModulusMap m;
            for (int v : val) {
                cocycle::CircleValue c(v, 12);
                if (c.denominator() > 4) ok = false;
                m.push_back({cocycle::Period::TPrime, c});
            }
            if (ok) {
                try { cocycle::check_modulus(g, m); out.push_back(m); } catch (const cocycle::input_error&) {}
            }
        }
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == 12) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return out;
}

inline std::string modulus_label(const cocycle::ModulusMap& m) {
    std::string s = "m=[";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + m[i].value.str();
    return s + "]";
}

// G in {Z_4, Z_2+Z_2, Z_6}, every central N, every m of denominator <= 4 vanishing on N.
inline std::vector<LabeledSetup> suite_setups() {
    std::vector<LabeledSetup> out;
    for (const char* name : {"Z_4", "Z_2xZ_2", "Z_6"}) {
        auto g = cocycle::build_group(name);
        for (const auto& n : cocycle::central_subgroups(g))
            for (const auto& m : small_moduli(g)) {
                bool vanishes = true;
                for (Element a : n.elements) vanishes = vanishes && m[static_cast<std::size_t>(a)].value.is_zero();
                if (!vanishes) continue;
                std::string label = std::string(name) + " N={";
                for (std::size_t i = 0; i < n.elements.size(); ++i) label += (i ? "," : "") + std::to_string(n.elements[i]);
                out.push_back({label + "} " + modulus_label(m), cocycle::make_setup(g, n, m)});
            }
    }
    return out;
}

struct BruteQm {
    FiniteGroup q;
    std::vector<Rational> bracket;  // [[m(p)]]

    explicit BruteQm(const cocycle::ModulusSetup& s) : q(s.Q()) {
        for (const auto& v : s.mQ) bracket.push_back(v.value.value());
    }

    // (p, [[m(p)]] + a) (q, [[m(q)]] + b) read back in the same form.
    std::pair<Element, std::int64_t> mul(std::pair<Element, std::int64_t> x, std::pair<Element, std::int64_t> y) const {
        Element pq = q.mul(x.first, y.first);
        Rational total = bracket[static_cast<std::size_t>(x.first)] + Rational(x.second) +
                         bracket[static_cast<std::size_t>(y.first)] + Rational(y.second);
        Rational k = total - bracket[static_cast<std::size_t>(pq)];
        if (!k.is_integer()) throw std::logic_error("product left Q_m");
        return {pq, k.num()};
    }
};

// Row certificate: for every quadruple with exponents in [-2, 2], the symbolic 3-cocycle
// expression equals -a1 (d-cocycle row at p2,p3,p4) + (cup row at p1..p4). Returns the number of
// quadruples where it does not. With zero mismatches the two constraints imply the truncated
// identity; the converse holds because a1 = 0 gives the cup rows alone and a1 = 1 minus a1 = 0
// gives the d rows, so both sets lie in the span of the identity rows.
inline std::size_t certificate_mismatches(const cocycle::ModulusSetup& s) {
    BruteQm qm(s);
    const int n = s.Q().order();
    const std::size_t n3 = static_cast<std::size_t>(n * n * n), cols = n3 + static_cast<std::size_t>(n * n);
    auto cb = [&](Element p, Element q, Element r) { return static_cast<std::size_t>((p * n + q) * n + r); };
    auto dd = [&](Element q, Element r) { return n3 + static_cast<std::size_t>(q * n + r); };
    using E = std::pair<Element, std::int64_t>;
    std::vector<std::int64_t> row(cols, 0), want(cols, 0);
    auto eval = [&](std::vector<std::int64_t>& r, E x, E y, E z, std::int64_t sign) {
        r[dd(y.first, z.first)] += sign * x.second;
        r[cb(x.first, y.first, z.first)] += sign;
    };
    auto carry = [&](Element p, Element q) {
        Rational v = qm.bracket[static_cast<std::size_t>(p)] + qm.bracket[static_cast<std::size_t>(q)] -
                     qm.bracket[static_cast<std::size_t>(s.Q().mul(p, q))];
        return v.num();
    };
    std::vector<E> elems;
    for (Element p = 0; p < n; ++p)
        for (std::int64_t k = -2; k <= 2; ++k) elems.push_back({p, k});
    std::size_t bad = 0;
    for (E a : elems)
        for (E b : elems)
            for (E c : elems)
                for (E e : elems) {
                    std::fill(row.begin(), row.end(), 0);
                    std::fill(want.begin(), want.end(), 0);
                    eval(row, b, c, e, 1);
                    eval(row, qm.mul(a, b), c, e, -1);
                    eval(row, a, qm.mul(b, c), e, 1);
                    eval(row, a, b, qm.mul(c, e), -1);
                    eval(row, a, b, c, 1);
                    const Element p1 = a.first, p2 = b.first, p3 = c.first, p4 = e.first;
                    // -a1 (d(p3,p4) - d(p2 p3, p4) + d(p2, p3 p4) - d(p2, p3))
                    want[dd(p3, p4)] -= a.second;
                    want[dd(s.Q().mul(p2, p3), p4)] += a.second;
                    want[dd(p2, s.Q().mul(p3, p4))] -= a.second;
                    want[dd(p2, p3)] += a.second;
                    // d cbar (p1..p4) - n_Z(p1,p2) d(p3,p4)
                    want[cb(p2, p3, p4)] += 1;
                    want[cb(s.Q().mul(p1, p2), p3, p4)] -= 1;
                    want[cb(p1, s.Q().mul(p2, p3), p4)] += 1;
                    want[cb(p1, p2, s.Q().mul(p3, p4))] -= 1;
                    want[cb(p1, p2, p3)] += 1;
                    want[dd(p3, p4)] -= carry(p1, p2);
                    if (row != want) ++bad;
                }
    return bad;
}

// The truncated 3-cocycle identity evaluated numerically.
inline bool brute_valid(const cocycle::ModulusSetup& s, const cocycle::StandardCocycle& c) {
    BruteQm qm(s);
    const int n = s.Q().order();
    using E = std::pair<Element, std::int64_t>;
    auto ev = [&](E x, E y, E z) { return x.second * c.d({y.first, z.first}) + c.cbar({x.first, y.first, z.first}); };
    std::vector<E> elems;
    for (Element p = 0; p < n; ++p)
        for (std::int64_t k = -2; k <= 2; ++k) elems.push_back({p, k});
    for (E a : elems)
        for (E b : elems)
            for (E x : elems)
                for (E e : elems) {
                    auto v = ev(b, x, e) - ev(qm.mul(a, b), x, e) + ev(a, qm.mul(b, x), e) - ev(a, b, qm.mul(x, e)) + ev(a, b, x);
                    if (!v.is_zero()) return false;
                }
    return true;
}

// |Z|/|B| and the largest order of a class, by enumeration at denominator `den`; B from f at
// denominator den^2. Unknowns are cbar and nu; everything is rebuilt from the tables.
struct GridCount {
    std::size_t order = 0;
    std::int64_t exponent = 1;
};

inline GridCount enumerate_hout(const cocycle::ModulusSetup& s, std::int64_t den) {
    const auto& Q = s.Q();
    const int n = Q.order();
    const std::size_t n3 = static_cast<std::size_t>(n * n * n), nn = s.N.elements.size();
    auto d3 = bar_matrix(Q, 3);
    auto d2 = bar_matrix(Q, 2);
    std::vector<Rational> br;
    for (auto v : s.mQ) br.push_back(v.value.value());
    auto carry = [&](Element p, Element q) { return (br[static_cast<std::size_t>(p)] + br[static_cast<std::size_t>(q)] - br[static_cast<std::size_t>(Q.mul(p, q))]).num(); };
    auto nidx = [&](Element g) { return static_cast<std::size_t>(std::find(s.N.elements.begin(), s.N.elements.end(), g) - s.N.elements.begin()); };
    // n_N(p,q) from the section directly
    auto nN = [&](Element p, Element q) {
        const auto& G = s.G;
        return G.mul(G.mul(s.section(p), s.section(q)), G.inv(s.section(Q.mul(p, q))));
    };

    std::set<std::vector<std::int64_t>> Z, B;
    const std::size_t unknowns = n3 + nn;
    std::vector<std::int64_t> x(unknowns, 0);  // numerators over den
    while (true) {
        bool ok = true;
        for (std::size_t a = 0; a < nn && ok; ++a)
            for (std::size_t b = 0; b < nn && ok; ++b)
                ok = mod(x[n3 + a] + x[n3 + b] - x[n3 + nidx(s.G.mul(s.N.elements[a], s.N.elements[b]))], den) == 0;
        for (std::size_t r = 0; r < d3.size() && ok; ++r) {
            std::int64_t v = 0;
            for (std::size_t c = 0; c < n3; ++c) v += d3[r][c] * x[c];
            // row (p,q,t,u): -n_Z(p,q) d(t,u) with d = -nu(n_N)
            int p = static_cast<int>(r / static_cast<std::size_t>(n * n * n)), q = static_cast<int>(r / static_cast<std::size_t>(n * n) % static_cast<std::size_t>(n));
            int t = static_cast<int>(r / static_cast<std::size_t>(n) % static_cast<std::size_t>(n)), u = static_cast<int>(r % static_cast<std::size_t>(n));
            v += carry(p, q) * x[n3 + nidx(nN(t, u))];
            ok = mod(v, den) == 0;
        }
        if (ok) Z.insert(x);
        std::size_t k = 0;
        while (k < unknowns && ++x[k] == den) x[k++] = 0;
        if (k == unknowns) break;
    }
    const std::int64_t fine = den * den;
    std::vector<std::int64_t> f(static_cast<std::size_t>(n * n), 0);
    while (true) {
        std::vector<std::int64_t> img(unknowns, 0);
        bool in_grid = true;
        for (std::size_t r = 0; r < n3 && in_grid; ++r) {
            std::int64_t v = 0;
            for (std::size_t c = 0; c < f.size(); ++c) v += d2[r][c] * f[c];
            v = mod(v, fine);
            in_grid = v % den == 0;
            img[r] = v / den;
        }
        if (in_grid) B.insert(img);
        std::size_t k = 0;
        while (k < f.size() && ++f[k] == fine) f[k++] = 0;
        if (k == f.size()) break;
    }
    GridCount out;
    out.order = Z.size() / B.size();
    for (const auto& z : Z) {
        for (std::int64_t k = 1; k <= den; ++k) {
            std::vector<std::int64_t> kz(z.size());
            for (std::size_t i = 0; i < z.size(); ++i) kz[i] = mod(k * z[i], den);
            if (B.count(kz)) { out.exponent = std::max(out.exponent, k); break; }
        }
    }
    return out;
}

}  // namespace oracle
