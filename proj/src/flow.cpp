#include "cocycle/flow.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace cocycle {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

// A fixed pseudo-random cochain on Q_m with values in (1/24)Z/Z.
QmCochain hashed_cochain(std::uint64_t seed) {
    return [seed](const std::vector<QmElement>& t) {
        std::uint64_t h = seed * 0x9E3779B97F4A7C15ull + t.size();
        for (const auto& e : t) {
            h ^= static_cast<std::uint64_t>(e.p) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h ^= static_cast<std::uint64_t>(e.k) * 0xBF58476D1CE4E5B9ull + (h << 6) + (h >> 2);
        }
        h ^= h >> 31;
        h *= 0x94D049BB133111EBull;
        h ^= h >> 29;
        return CircleValue(static_cast<std::int64_t>(h % 24), 24);
    };
}

void tally(IdentityCount& c, bool ok) {
    ++c.checked;
    if (!ok) ++c.failed;
}

// Calls f on every tuple of length n drawn from items.
template <class T, class F>
void for_tuples(const std::vector<T>& items, int n, F&& f) {
    std::vector<std::size_t> idx(sz(n), 0);
    std::vector<T> t(sz(n));
    if (items.empty()) return;
    while (true) {
        for (int i = 0; i < n; ++i) t[sz(i)] = items[idx[sz(i)]];
        f(t);
        int k = 0;
        while (k < n && ++idx[sz(k)] == items.size()) idx[sz(k++)] = 0;
        if (k == n) break;
    }
}

}  // namespace

FlowGrid::FlowGrid(std::int64_t d) : D(d) {
    if (d < 1) throw input_error("resolution must be positive");
}

std::vector<Rational> FlowGrid::points() const {
    std::vector<Rational> out;
    for (std::int64_t j = 0; j < D; ++j) out.emplace_back(j, D);
    return out;
}

std::vector<Rational> FlowGrid::translations(std::int64_t reach) const {
    std::vector<Rational> out;
    for (std::int64_t j = -reach * D; j <= reach * D; ++j) out.emplace_back(j, D);
    return out;
}

std::vector<Rational> fractions(std::int64_t max_den) {
    std::set<Rational> s;
    for (std::int64_t b = 1; b <= max_den; ++b)
        for (std::int64_t a = 0; a < b; ++a) s.insert(Rational(a, b));
    return {s.begin(), s.end()};
}

CircleValue szet_cocycle(const Rational& s, const Rational& t, const Rational& x) {
    return CircleValue(s * Rational(x.floor() - (x + t).floor()));
}

CircleValue u_psi(const Rational& s, const Rational& x) { return CircleValue(s.frac() * Rational(x.floor())); }

CircleValue s_z(const Rational& s, const Rational& t, const Rational& x) {
    return pairing({Period::T, CircleValue(s)}, (x + t).floor() - x.floor());
}

RhoMap::RhoMap(const FiniteGroup& h, ModulusMap m) : setup_(make_setup(h, make_subgroup(h, {0}), std::move(m))) {}

Rational RhoMap::act(const Rational& y, const FlowArrow& a) const {
    return (y - setup_.m[sz(a.h)].bracket() + a.s).frac();
}

Rational RhoMap::second(const Rational& y, const FlowArrow& a) const {
    return a.s - (y - setup_.m[sz(a.h)].bracket() + a.s).frac() + y.frac();
}

QmElement RhoMap::operator()(const Rational& y, const FlowArrow& a) const {
    Rational k = second(y, a) - setup_.m[sz(a.h)].bracket();
    if (!k.is_integer()) throw std::logic_error("rho left H_m");
    return {a.h, k.num()};
}

FlowCochain rho_pullback(const RhoMap& rho, QmCochain c) {
    return [&rho, c = std::move(c)](const Rational& y, const std::vector<FlowArrow>& t) {
        std::vector<QmElement> img;
        img.reserve(t.size());
        Rational x = y;
        for (const auto& a : t) {
            img.push_back(rho(x, a));
            x = rho.act(x, a);
        }
        return c(img);
    };
}

CircleValue qm_cochain_coboundary(const Qm& qm, const QmCochain& f, const std::vector<QmElement>& t) {
    const std::size_t n = t.size();
    CircleValue out = f({t.begin() + 1, t.end()});
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<QmElement> u;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i + 1) continue;
            u.push_back(j == i ? qm.mul(t[i], t[i + 1]) : t[j]);
        }
        out += ((i + 1) % 2 ? -1 : 1) * f(u);
    }
    out += (n % 2 ? -1 : 1) * f({t.begin(), t.end() - 1});
    return out;
}

CircleValue flow_cochain_coboundary(const RhoMap& rho, const FlowCochain& f, const Rational& y, const std::vector<FlowArrow>& t) {
    const std::size_t n = t.size();
    CircleValue out = f(rho.act(y, t[0]), {t.begin() + 1, t.end()});
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<FlowArrow> u;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i + 1) continue;
            u.push_back(j == i ? rho.mul(t[i], t[i + 1]) : t[j]);
        }
        out += ((i + 1) % 2 ? -1 : 1) * f(y, u);
    }
    out += (n % 2 ? -1 : 1) * f(y, {t.begin(), t.end() - 1});
    return out;
}

EigenResult eigen_check(const FlowGrid& g, const Rational& k, const Rational& s, const Rational& t) {
    Rational shift = s - k;
    if (!shift.is_integer()) throw input_error("s - k must be an integer multiple of T'");
    EigenResult r;
    bool first = true;
    for (const auto& x : g.points()) {
        CircleValue v = u_psi(t, x + shift) - u_psi(t, x);
        if (first) r.value = v;
        else if (v != r.value) r.constant = false;
        first = false;
    }
    r.pairing = pairing({Period::T, CircleValue(t)}, shift.num());
    return r;
}

bool FlowReport::ok() const {
    for (const auto& i : identities)
        if (i.failed != 0 || i.checked == 0) return false;
    return true;
}

FlowReport check_szet(const FlowGrid& g, std::int64_t max_den) {
    FlowReport rep{g.D, "c(s,t,x) = s (floor(x) - floor(x+t)), s in units of T, t and x in units of T'", {}};
    IdentityCount add_s{"c(r+s,t,x) = c(r,t,x) + c(s,t,x)"}, add_t{"c(r,s+t,x) = c(r,s,x) + c(r,t,x+s)"},
        period{"c(T,t,x) = 0"}, same_cell{"c = 0 when x and x+t share a cell"};
    auto svals = fractions(max_den);
    auto ts = g.translations(2);
    auto xs = g.points();
    for (const auto& x : xs)
        for (const auto& t : ts) {
            tally(period, szet_cocycle(1, t, x).is_zero());
            if (x.floor() == (x + t).floor())
                for (const auto& r : svals) tally(same_cell, szet_cocycle(r, t, x).is_zero());
            for (const auto& r : svals)
                for (const auto& s : svals) tally(add_s, szet_cocycle(r + s, t, x) == szet_cocycle(r, t, x) + szet_cocycle(s, t, x));
            for (const auto& r : svals)
                for (const auto& u : ts) tally(add_t, szet_cocycle(r, u + t, x) == szet_cocycle(r, u, x) + szet_cocycle(r, t, x + u));
        }
    rep.identities = {add_s, add_t, period, same_cell};
    return rep;
}

FlowReport check_cobound(const FlowGrid& g, std::int64_t max_den) {
    FlowReport rep{g.D, "u(s; x+t) - u(s; x) = -s_Z(s, t; x) with <s, k> = -k s", {}};
    IdentityCount rel{"coboundary relation"}, period{"u(s+T; x) = u(s; x)"}, cell{"u(s; x) = 0 on [0, T')"};
    auto ts = g.translations(2);
    for (const auto& s : fractions(max_den))
        for (const auto& x : g.points()) {
            tally(period, u_psi(s + 1, x) == u_psi(s, x));
            tally(cell, u_psi(s, x).is_zero());
            for (const auto& t : ts) tally(rel, u_psi(s, x + t) - u_psi(s, x) == kCoboundarySign * s_z(s, t, x));
        }
    rep.identities = {rel, period, cell};
    return rep;
}

FlowReport check_rho(const FlowGrid& g, std::uint64_t seed) {
    FlowReport rep{g.D, "rho(y,h,s) = (h, s - [[y - m(h) + s]] + [[y]]), y.(h,s) = [[y - m(h) + s]]", {}};
    IdentityCount mult{"rho(y, hk, s+t) = rho(y,h,s) rho(y.(h,s), k, t)"}, unit{"rho(y, 1, 0) = 1"},
        fixed{"rho(0, h~) = h~ on H_m"}, comm{"rho* d = d rho* (degrees 0..2)"}, restrict{"i* rho* = id (degree 3)"},
        cocycle{"rho* of standard 3-cocycles is a cocycle (sampled)"};
    std::mt19937_64 rng(seed);
    struct Case {
        const char* group;
        std::int64_t num, den;  // m(generator)
    };
    for (Case cs : {Case{"Z_2", 1, 2}, Case{"Z_3", 1, 3}, Case{"Z_4", 1, 4}, Case{"Z_2", 0, 1}}) {
        auto H = build_group(cs.group);
        ModulusMap m = zero_modulus(H.order());
        for (Element a = 0; a < H.order(); ++a) m[sz(a)].value = CircleValue(a * cs.num, cs.den);
        RhoMap rho(H, m);
        Qm qm(rho.setup());
        auto xs = g.points();

        std::vector<FlowArrow> window, small;
        for (Element h = 0; h < H.order(); ++h) {
            for (const auto& s : g.translations(1)) window.push_back({h, s});
            for (std::int64_t j = -2; j <= 2; ++j) small.push_back({h, Rational(j, g.D)});
        }
        for (const auto& y : xs) {
            tally(unit, rho(y, {0, 0}) == QmElement{});
            for (const auto& a : window)
                for (const auto& b : window)
                    tally(mult, rho(y, rho.mul(a, b)) == qm.mul(rho(y, a), rho(rho.act(y, a), b)));
        }
        std::vector<QmElement> hm;
        for (Element h = 0; h < H.order(); ++h)
            for (std::int64_t k = -2; k <= 2; ++k) hm.push_back({h, k});
        for (auto e : hm) {
            FlowArrow a{e.p, qm.lift(e, rho.setup().mQ)};
            tally(fixed, rho(0, a) == e && rho.act(0, a) == Rational(0));
        }

        for (int n = 0; n <= 2; ++n) {
            QmCochain f = hashed_cochain(rng());
            auto pf = rho_pullback(rho, f);
            QmCochain df = [&qm, f](const std::vector<QmElement>& t) { return qm_cochain_coboundary(qm, f, t); };
            auto pdf = rho_pullback(rho, df);
            const auto& items = n < 2 ? window : small;
            for (const auto& y : xs)
                for_tuples(items, n + 1, [&](const std::vector<FlowArrow>& t) {
                    tally(comm, flow_cochain_coboundary(rho, pf, y, t) == pdf(y, t));
                });
        }

        QmCochain c3 = hashed_cochain(rng());
        auto pc3 = rho_pullback(rho, c3);
        for_tuples(hm, 3, [&](const std::vector<QmElement>& t) {
            std::vector<FlowArrow> a;
            for (auto e : t) a.push_back({e.p, qm.lift(e, rho.setup().mQ)});
            tally(restrict, pc3(0, a) == c3(t));
        });

        std::vector<StandardCocycle> standard;
        for (const auto& r : compute_hout(rho.setup()).representatives) standard.push_back(r.c);
        auto A = circle_module(H);
        QmWitness w{random_cochain(H, A, 2, rng, 12), random_cochain(H, A, 1, rng, 12)};
        standard.push_back(qm_coboundary_of(rho.setup(), w));
        for (const auto& sc : standard) {
            QmCochain c = [sc](const std::vector<QmElement>& t) { return eval_standard(sc, t[0], t[1], t[2]); };
            auto pc = rho_pullback(rho, c);
            for (int trial = 0; trial < 400; ++trial) {
                Rational y = xs[rng() % xs.size()];
                std::vector<FlowArrow> t;
                for (int i = 0; i < 4; ++i) t.push_back(window[rng() % window.size()]);
                tally(cocycle, flow_cochain_coboundary(rho, pc, y, t).is_zero());
            }
        }
    }
    rep.identities = {mult, unit, fixed, comm, restrict, cocycle};
    return rep;
}

FlowReport check_eigen(const FlowGrid& g) {
    FlowReport rep{g.D, "u(t; x+s-k) - u(t; x) is constant and equals -<t, (s-k)/T'>", {}};
    IdentityCount constant{"x -> u(t; x+s-k) - u(t; x) is constant"}, value{"constant = -<t, (s-k)/T'>"},
        refuse{"s - k outside T'Z is refused"};
    for (const auto& k : g.translations(1))
        for (std::int64_t j = -2; j <= 2; ++j)
            for (const auto& t : fractions(6)) {
                auto r = eigen_check(g, k, k + Rational(j), t);
                tally(constant, r.constant);
                tally(value, r.value == -r.pairing && r.value == CircleValue(Rational(j) * t));
            }
    bool threw = false;
    try {
        eigen_check(g, 0, Rational(1, 2), Rational(1, 2));
    } catch (const input_error&) {
        threw = true;
    }
    tally(refuse, threw);
    rep.identities = {constant, value, refuse};
    return rep;
}

}  // namespace cocycle
