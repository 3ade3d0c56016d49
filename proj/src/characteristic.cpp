#include "cocycle/characteristic.hpp"

#include <algorithm>
#include <stdexcept>

namespace cocycle {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

std::vector<CircleValue> act(const GroupoidModule& a, Arrow g, const std::vector<CircleValue>& x) {
    const auto& m = a.alpha[sz(g)];
    std::vector<CircleValue> out(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out[static_cast<std::size_t>(i)] += m(i, j) * x[static_cast<std::size_t>(j)];
    return out;
}

void add_into(std::vector<CircleValue>& acc, const std::vector<CircleValue>& x, int sign) {
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (sign > 0) acc[i] += x[i];
        else acc[i] -= x[i];
    }
}

bool all_zero(const std::vector<CircleValue>& x) {
    return std::all_of(x.begin(), x.end(), [](const CircleValue& v) { return v.is_zero(); });
}

Arrow conj(const FiniteGroupoid& g, Arrow a, Arrow m) { return g.mul(g.mul(g.inverse[sz(a)], m), a); }

std::string arrows_str(std::initializer_list<Arrow> xs) {
    std::string s = "(";
    for (Arrow a : xs) s += (s.size() > 1 ? "," : "") + std::to_string(a);
    return s + ")";
}

}  // namespace

NormalSubgroupoid make_normal_subgroupoid(const FiniteGroupoid& g, std::vector<std::vector<Arrow>> at) {
    if (static_cast<int>(at.size()) != g.points) throw input_error("normal subgroupoid needs one subgroup per point");
    NormalSubgroupoid n;
    n.member.assign(sz(g.arrows()), 0);
    for (Point x = 0; x < g.points; ++x) {
        auto& s = at[sz(x)];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!std::binary_search(s.begin(), s.end(), g.unit[sz(x)])) throw input_error("N(" + std::to_string(x) + ") misses the unit");
        for (Arrow m : s) {
            if (m < 0 || m >= g.arrows() || g.range[sz(m)] != x || g.source[sz(m)] != x)
                throw input_error("N(" + std::to_string(x) + ") contains a non-isotropy arrow");
            n.member[sz(m)] = 1;
        }
        for (Arrow m : s)
            for (Arrow k : s)
                if (!std::binary_search(s.begin(), s.end(), g.mul(m, g.inverse[sz(k)])))
                    throw input_error("N(" + std::to_string(x) + ") is not a subgroup");
    }
    for (Arrow a = 0; a < g.arrows(); ++a)
        for (Arrow m : at[sz(g.range[sz(a)])])
            if (!n.member[sz(conj(g, a, m))])
                throw input_error("N is not normal: conjugating " + std::to_string(m) + " by arrow " + std::to_string(a) + " leaves it");
    n.at = std::move(at);
    return n;
}

NormalSubgroupoid kernel_subgroupoid(const ActionGroupoid& g, const SubgroupData& l) {
    if (!l.normal) throw input_error("L is not normal");
    std::vector<std::vector<Arrow>> at(sz(g.groupoid.points));
    for (Point x = 0; x < g.groupoid.points; ++x)
        for (Element m : l.elements) {
            if (g.action[sz(x)][sz(m)] != x) throw input_error("L acts nontrivially on the base: element " + std::to_string(m) + " moves point " + std::to_string(x));
            at[sz(x)].push_back(g.arrow(x, m));
        }
    return make_normal_subgroupoid(g.groupoid, std::move(at));
}

CharContext make_char_context(FiniteGroupoid g, NormalSubgroupoid n, GroupoidModule a) {
    validate_groupoid(g);
    validate_module(g, a);
    for (Point x = 0; x < g.points; ++x)
        for (Arrow m : n.at[sz(x)]) {
            const auto& am = a.alpha[sz(m)];
            if (am != IntMatrixX::Identity(am.rows(), am.cols())) throw input_error("N acts nontrivially on the coefficients");
        }
    return {std::move(g), std::move(n), std::move(a)};
}

CharacteristicPair& CharacteristicPair::operator+=(const CharacteristicPair& o) {
    if (o.arrows != arrows) throw std::invalid_argument("pair shape mismatch");
    for (std::size_t i = 0; i < lambda.size(); ++i) add_into(lambda[i], o.lambda[i], 1);
    for (std::size_t i = 0; i < mu.size(); ++i) add_into(mu[i], o.mu[i], 1);
    return *this;
}

CharacteristicPair& CharacteristicPair::operator-=(const CharacteristicPair& o) {
    if (o.arrows != arrows) throw std::invalid_argument("pair shape mismatch");
    for (std::size_t i = 0; i < lambda.size(); ++i) add_into(lambda[i], o.lambda[i], -1);
    for (std::size_t i = 0; i < mu.size(); ++i) add_into(mu[i], o.mu[i], -1);
    return *this;
}

CharacteristicPair zero_pair(const CharContext& ctx) {
    const auto& g = ctx.groupoid;
    CharacteristicPair p;
    p.arrows = g.arrows();
    p.lambda.resize(sz(p.arrows * p.arrows));
    p.mu.resize(sz(p.arrows * p.arrows));
    for (Point x = 0; x < g.points; ++x) {
        const std::size_t w = ctx.module.width(x);
        for (Arrow m : ctx.normal.at[sz(x)]) {
            for (Arrow a = 0; a < g.arrows(); ++a)
                if (g.range[sz(a)] == x) p.lam(m, a).assign(w, CircleValue());
            for (Arrow n : ctx.normal.at[sz(x)]) p.mu_at(m, n).assign(w, CircleValue());
        }
    }
    return p;
}

CharCheck verify_char_pair(const CharContext& ctx, const CharacteristicPair& p) {
    const auto& g = ctx.groupoid;
    const auto& a = ctx.module;
    auto shape = zero_pair(ctx);
    if (p.arrows != shape.arrows) throw input_error("pair does not match the groupoid");
    for (std::size_t i = 0; i < p.lambda.size(); ++i)
        if (p.lambda[i].size() != shape.lambda[i].size() || p.mu[i].size() != shape.mu[i].size())
            throw input_error("pair is defined off N *_r G or N^(2)");
    auto fail = [](int id, std::string what) { return CharCheck{false, id, std::move(what)}; };

    for (Point x = 0; x < g.points; ++x) {
        const auto& N = ctx.normal.at[sz(x)];
        const std::size_t w = a.width(x);
        for (Arrow m : N)
            for (Arrow n : N)
                for (Arrow k : N) {
                    std::vector<CircleValue> s(w);
                    add_into(s, p.mu_at(n, k), 1);
                    add_into(s, p.mu_at(g.mul(m, n), k), -1);
                    add_into(s, p.mu_at(m, g.mul(n, k)), 1);
                    add_into(s, p.mu_at(m, n), -1);
                    if (!all_zero(s)) return fail(1, "mu is not a 2-cocycle at " + arrows_str({m, n, k}));
                }
    }
    for (Arrow ga = 0; ga < g.arrows(); ++ga) {
        Point y = g.range[sz(ga)];
        for (Arrow m : ctx.normal.at[sz(y)]) {
            Arrow mc = conj(g, ga, m);
            for (Arrow h = 0; h < g.arrows(); ++h) {
                if (!g.composable(ga, h)) continue;
                auto s = p.lam(m, g.mul(ga, h));
                add_into(s, p.lam(m, ga), -1);
                add_into(s, act(a, ga, p.lam(mc, h)), -1);
                if (!all_zero(s)) return fail(2, "lambda is not multiplicative at m=" + std::to_string(m) + ", " + arrows_str({ga, h}));
            }
        }
    }
    for (Point x = 0; x < g.points; ++x) {
        const auto& N = ctx.normal.at[sz(x)];
        for (Arrow m : N)
            for (Arrow n : N) {
                auto s = p.lam(m, n);
                add_into(s, p.mu_at(n, conj(g, n, m)), -1);
                add_into(s, p.mu_at(m, n), 1);
                if (!all_zero(s)) return fail(3, "lambda on N is not the mu-commutator at " + arrows_str({m, n}));
            }
    }
    for (Arrow ga = 0; ga < g.arrows(); ++ga) {
        const auto& N = ctx.normal.at[sz(g.range[sz(ga)])];
        for (Arrow m : N)
            for (Arrow n : N) {
                auto s = p.lam(m, ga);
                add_into(s, p.lam(n, ga), 1);
                add_into(s, p.lam(g.mul(m, n), ga), -1);
                add_into(s, act(a, ga, p.mu_at(conj(g, ga, m), conj(g, ga, n))), -1);
                add_into(s, p.mu_at(m, n), 1);
                if (!all_zero(s)) return fail(4, "lambda and mu are incompatible at " + arrows_str({m, n, ga}));
            }
    }
    return {};
}

CharCochain zero_char_cochain(const CharContext& ctx) {
    CharCochain c(sz(ctx.groupoid.arrows()));
    for (Point x = 0; x < ctx.groupoid.points; ++x)
        for (Arrow m : ctx.normal.at[sz(x)]) c[sz(m)].assign(ctx.module.width(x), CircleValue());
    return c;
}

CharacteristicPair char_coboundary(const CharContext& ctx, const CharCochain& c) {
    const auto& g = ctx.groupoid;
    auto p = zero_pair(ctx);
    for (Arrow ga = 0; ga < g.arrows(); ++ga)
        for (Arrow m : ctx.normal.at[sz(g.range[sz(ga)])]) {
            auto& v = p.lam(m, ga);
            v = act(ctx.module, ga, c[sz(conj(g, ga, m))]);
            add_into(v, c[sz(m)], -1);
        }
    for (Point x = 0; x < g.points; ++x)
        for (Arrow m : ctx.normal.at[sz(x)])
            for (Arrow n : ctx.normal.at[sz(x)]) {
                auto& v = p.mu_at(m, n);
                v = c[sz(m)];
                add_into(v, c[sz(n)], 1);
                add_into(v, c[sz(g.mul(m, n))], -1);
            }
    return p;
}

std::optional<CharCochain> char_coboundary_witness(const CharContext& ctx, const CharacteristicPair& p) {
    const auto& g = ctx.groupoid;
    auto shape = zero_pair(ctx);
    if (p.arrows != shape.arrows) throw input_error("pair does not match the groupoid");
    // unknown offsets per member arrow
    std::vector<std::size_t> col(sz(g.arrows()), 0);
    Carrier unknowns;
    for (Arrow m = 0; m < g.arrows(); ++m)
        if (ctx.normal.contains(m)) {
            col[sz(m)] = unknowns.size();
            const auto& f = ctx.module.fiber[sz(g.range[sz(m)])];
            unknowns.moduli.insert(unknowns.moduli.end(), f.moduli.begin(), f.moduli.end());
        }
    Carrier rows;
    std::vector<CircleValue> rhs;
    std::vector<std::pair<std::size_t, int>> entries;  // (entry index, 0 lambda / 1 mu)
    for (int kind = 0; kind < 2; ++kind) {
        const auto& src = kind == 0 ? p.lambda : p.mu;
        const auto& ref = kind == 0 ? shape.lambda : shape.mu;
        for (std::size_t i = 0; i < ref.size(); ++i) {
            if (ref[i].empty()) continue;
            if (src[i].size() != ref[i].size()) throw input_error("pair is defined off N *_r G or N^(2)");
            entries.emplace_back(i, kind);
            Arrow first = static_cast<Arrow>(i / sz(p.arrows));
            const auto& f = ctx.module.fiber[sz(g.range[sz(first)])];
            rows.moduli.insert(rows.moduli.end(), f.moduli.begin(), f.moduli.end());
            rhs.insert(rhs.end(), src[i].begin(), src[i].end());
        }
    }
    if (rows.size() > kMatrixCap || unknowns.size() > kMatrixCap) throw input_error("pair system exceeds the size cap");
    IntMatrixX D = IntMatrixX::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(unknowns.size()));
    Eigen::Index r0 = 0;
    for (auto [i, kind] : entries) {
        Arrow first = static_cast<Arrow>(i / sz(p.arrows)), second = static_cast<Arrow>(i % sz(p.arrows));
        auto w = static_cast<Eigen::Index>(ctx.module.width(g.range[sz(first)]));
        auto block = [&](Arrow m) { return D.block(r0, static_cast<Eigen::Index>(col[sz(m)]), w, static_cast<Eigen::Index>(ctx.module.width(g.range[sz(m)]))); };
        if (kind == 0) {
            block(conj(g, second, first)) += ctx.module.alpha[sz(second)];
            block(first).diagonal().array() -= 1;
        } else {
            block(first).diagonal().array() += 1;
            block(second).diagonal().array() += 1;
            block(g.mul(first, second)).diagonal().array() -= 1;
        }
        r0 += w;
    }
    CochainQuotient q(D, IntMatrixX(0, D.rows()), unknowns, rows, Carrier{});
    auto y = q.preimage(rhs);
    if (!y) return std::nullopt;
    auto c = zero_char_cochain(ctx);
    for (Arrow m = 0; m < g.arrows(); ++m)
        for (std::size_t j = 0; j < c[sz(m)].size(); ++j) c[sz(m)][j] = (*y)[col[sz(m)] + j];
    if (char_coboundary(ctx, c) != p) throw std::logic_error("pair coboundary witness failed verification");
    return c;
}

CharTranslation make_char_translation(const FiniteGroup& h, const SubgroupData& l, std::vector<std::vector<Point>> action) {
    auto ag = action_groupoid(h, std::move(action));
    const int X = ag.groupoid.points;
    auto N = kernel_subgroupoid(ag, l);

    std::vector<IntMatrixX> mats;
    for (Element g = 0; g < h.order(); ++g) {
        IntMatrixX m = IntMatrixX::Zero(X, X);
        for (Point x = 0; x < X; ++x) m(x, ag.action[sz(x)][sz(g)]) = 1;
        mats.push_back(std::move(m));
    }
    CoefficientModule A{Carrier::circle(sz(X)), mats, 0};
    validate_module(h, A);
    auto gg = group_as_groupoid(h);
    auto NL = make_normal_subgroupoid(gg, {l.elements});
    CharTranslation t{ag, l, make_char_context(gg, NL, group_module(h, A)),
                      make_char_context(ag.groupoid, N, trivial_groupoid_module(ag.groupoid, Carrier::circle()))};
    return t;
}

CharacteristicPair translate_char_pair(const CharTranslation& t, const CharacteristicPair& p) {
    const auto& ag = t.action;
    auto out = zero_pair(t.groupoid_level);
    const int n = ag.group.order();
    for (Point x = 0; x < ag.groupoid.points; ++x)
        for (Element m : t.kernel.elements) {
            for (Element g = 0; g < n; ++g) out.lam(ag.arrow(x, m), ag.arrow(x, g))[0] = p.lam(m, g).at(sz(x));
            for (Element k : t.kernel.elements) out.mu_at(ag.arrow(x, m), ag.arrow(x, k))[0] = p.mu_at(m, k).at(sz(x));
        }
    return out;
}

CharacteristicPair untranslate_char_pair(const CharTranslation& t, const CharacteristicPair& p) {
    const auto& ag = t.action;
    auto out = zero_pair(t.group_level);
    const int n = ag.group.order();
    for (Point x = 0; x < ag.groupoid.points; ++x)
        for (Element m : t.kernel.elements) {
            for (Element g = 0; g < n; ++g) out.lam(m, g)[sz(x)] = p.lam(ag.arrow(x, m), ag.arrow(x, g)).at(0);
            for (Element k : t.kernel.elements) out.mu_at(m, k)[sz(x)] = p.mu_at(ag.arrow(x, m), ag.arrow(x, k)).at(0);
        }
    return out;
}

CharCochain translate_char_cochain(const CharTranslation& t, const CharCochain& c) {
    auto out = zero_char_cochain(t.groupoid_level);
    for (Point x = 0; x < t.action.groupoid.points; ++x)
        for (Element m : t.kernel.elements) out[sz(t.action.arrow(x, m))][0] = c[sz(m)].at(sz(x));
    return out;
}

CharCochain untranslate_char_cochain(const CharTranslation& t, const CharCochain& c) {
    auto out = zero_char_cochain(t.group_level);
    for (Point x = 0; x < t.action.groupoid.points; ++x)
        for (Element m : t.kernel.elements) out[sz(m)][sz(x)] = c[sz(t.action.arrow(x, m))].at(0);
    return out;
}

std::pair<CharContext, CharacteristicPair> restrict_char_pair(const CharContext& ctx, const CharacteristicPair& p,
                                                              const Reduction& r) {
    std::vector<std::vector<Arrow>> at;
    for (Point y : r.points) {
        std::vector<Arrow> s;
        for (Arrow m : ctx.normal.at[sz(y)]) s.push_back(r.arrow_index[sz(m)]);
        at.push_back(std::move(s));
    }
    auto sub = make_char_context(r.groupoid, make_normal_subgroupoid(r.groupoid, std::move(at)), restrict_module(r, ctx.module));
    auto out = zero_pair(sub);
    for (std::size_t i = 0; i < out.lambda.size(); ++i) {
        Arrow a = r.arrows[i / sz(out.arrows)], b = r.arrows[i % sz(out.arrows)];
        if (!out.lambda[i].empty()) out.lambda[i] = p.lam(a, b);
        if (!out.mu[i].empty()) out.mu[i] = p.mu_at(a, b);
    }
    return {std::move(sub), std::move(out)};
}

}  // namespace cocycle
