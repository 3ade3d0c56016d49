#include "cocycle/groupoid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cocycle {

Arrow FiniteGroupoid::mul(Arrow g, Arrow h) const {
    Arrow p = product[static_cast<std::size_t>(g * arrows() + h)];
    if (p < 0)
        throw std::invalid_argument("arrows " + std::to_string(g) + " and " + std::to_string(h) + " are not composable");
    return p;
}

std::vector<Arrow> FiniteGroupoid::from(Point x) const {
    std::vector<Arrow> out;
    for (Arrow g = 0; g < arrows(); ++g)
        if (source[static_cast<std::size_t>(g)] == x) out.push_back(g);
    return out;
}

std::vector<Arrow> FiniteGroupoid::isotropy(Point x) const {
    std::vector<Arrow> out;
    for (Arrow g = 0; g < arrows(); ++g)
        if (source[static_cast<std::size_t>(g)] == x && range[static_cast<std::size_t>(g)] == x) out.push_back(g);
    return out;
}

std::vector<std::vector<Point>> FiniteGroupoid::orbits() const {
    std::vector<int> seen(static_cast<std::size_t>(points), -1);
    std::vector<std::vector<Point>> out;
    for (Point x = 0; x < points; ++x) {
        if (seen[static_cast<std::size_t>(x)] >= 0) continue;
        std::vector<Point> orbit;
        for (Arrow g = 0; g < arrows(); ++g)
            if (source[static_cast<std::size_t>(g)] == x) {
                Point y = range[static_cast<std::size_t>(g)];
                if (seen[static_cast<std::size_t>(y)] < 0) {
                    seen[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(orbit);
    }
    return out;
}

void validate_groupoid(const FiniteGroupoid& g) {
    const int n = g.arrows();
    if (static_cast<int>(g.source.size()) != n || static_cast<int>(g.inverse.size()) != n ||
        static_cast<int>(g.unit.size()) != g.points || static_cast<int>(g.product.size()) != n * n)
        throw input_error("groupoid tables have inconsistent sizes");
    for (Point x = 0; x < g.points; ++x) {
        Arrow u = g.unit[static_cast<std::size_t>(x)];
        if (g.range[static_cast<std::size_t>(u)] != x || g.source[static_cast<std::size_t>(u)] != x)
            throw input_error("unit at point " + std::to_string(x) + " is not a loop");
    }
    for (Arrow a = 0; a < n; ++a) {
        for (Arrow b = 0; b < n; ++b) {
            Arrow p = g.product[static_cast<std::size_t>(a * n + b)];
            if (g.composable(a, b) != (p >= 0)) throw input_error("product defined off the composable pairs");
            if (p >= 0 && (g.range[static_cast<std::size_t>(p)] != g.range[static_cast<std::size_t>(a)] ||
                           g.source[static_cast<std::size_t>(p)] != g.source[static_cast<std::size_t>(b)]))
                throw input_error("product has the wrong ends at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
        if (g.mul(g.unit[static_cast<std::size_t>(g.range[static_cast<std::size_t>(a)])], a) != a ||
            g.mul(a, g.unit[static_cast<std::size_t>(g.source[static_cast<std::size_t>(a)])]) != a)
            throw input_error("units fail at arrow " + std::to_string(a));
        Arrow i = g.inverse[static_cast<std::size_t>(a)];
        if (!g.composable(a, i) || !g.is_unit(g.mul(a, i)) || !g.is_unit(g.mul(i, a)))
            throw input_error("inverse fails at arrow " + std::to_string(a));
    }
    for (Arrow a = 0; a < n; ++a)
        for (Arrow b = 0; b < n; ++b) {
            if (!g.composable(a, b)) continue;
            for (Arrow c = 0; c < n; ++c)
                if (g.composable(b, c) && g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw input_error("groupoid product not associative at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
        }
}

FiniteGroupoid group_as_groupoid(const FiniteGroup& g) {
    FiniteGroupoid out;
    const int n = g.order();
    out.points = 1;
    out.range.assign(static_cast<std::size_t>(n), 0);
    out.source.assign(static_cast<std::size_t>(n), 0);
    out.unit = {0};
    out.inverse.resize(static_cast<std::size_t>(n));
    out.product.resize(static_cast<std::size_t>(n) * n);
    for (Element a = 0; a < n; ++a) {
        out.inverse[static_cast<std::size_t>(a)] = g.inv(a);
        for (Element b = 0; b < n; ++b) out.product[static_cast<std::size_t>(a * n + b)] = g.mul(a, b);
    }
    return out;
}

ActionGroupoid action_groupoid(const FiniteGroup& g, std::vector<std::vector<Point>> action) {
    const int X = static_cast<int>(action.size());
    const int n = g.order();
    if (X == 0) throw input_error("action groupoid needs at least one point");
    for (Point y = 0; y < X; ++y) {
        if (static_cast<int>(action[static_cast<std::size_t>(y)].size()) != n) throw input_error("action table has wrong shape");
        for (Point v : action[static_cast<std::size_t>(y)])
            if (v < 0 || v >= X) throw input_error("action leaves the base set");
        if (action[static_cast<std::size_t>(y)][0] != y) throw input_error("identity moves point " + std::to_string(y));
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                if (action[static_cast<std::size_t>(action[static_cast<std::size_t>(y)][static_cast<std::size_t>(a)])][static_cast<std::size_t>(b)] !=
                    action[static_cast<std::size_t>(y)][static_cast<std::size_t>(g.mul(a, b))])
                    throw input_error("not a right action at (" + std::to_string(y) + "," + std::to_string(a) + "," +
                                      std::to_string(b) + ")");
    }
    ActionGroupoid ag{g, action, {}};
    auto& G = ag.groupoid;
    G.points = X;
    const int A = X * n;
    G.range.resize(static_cast<std::size_t>(A));
    G.source.resize(static_cast<std::size_t>(A));
    G.inverse.resize(static_cast<std::size_t>(A));
    G.product.assign(static_cast<std::size_t>(A) * A, -1);
    G.unit.resize(static_cast<std::size_t>(X));
    for (Point y = 0; y < X; ++y) {
        G.unit[static_cast<std::size_t>(y)] = ag.arrow(y, 0);
        for (Element a = 0; a < n; ++a) {
            Arrow e = ag.arrow(y, a);
            Point x = action[static_cast<std::size_t>(y)][static_cast<std::size_t>(a)];
            G.range[static_cast<std::size_t>(e)] = y;
            G.source[static_cast<std::size_t>(e)] = x;
            G.inverse[static_cast<std::size_t>(e)] = ag.arrow(x, g.inv(a));
        }
    }
    for (Arrow e = 0; e < A; ++e)
        for (Element b = 0; b < n; ++b) {
            Point x = G.source[static_cast<std::size_t>(e)];
            Arrow f = ag.arrow(x, b);
            G.product[static_cast<std::size_t>(e * A + f)] = ag.arrow(ag.point_of(e), g.mul(ag.element_of(e), b));
        }
    validate_groupoid(G);
    return ag;
}

ActionGroupoid coset_action(const FiniteGroup& g, const std::vector<Element>& h) {
    auto sub = make_subgroup(g, h);
    std::vector<Element> reps;
    std::vector<int> coset(static_cast<std::size_t>(g.order()), -1);
    for (Element x = 0; x < g.order(); ++x) {
        if (coset[static_cast<std::size_t>(x)] >= 0) continue;
        for (Element e : sub.elements) coset[static_cast<std::size_t>(g.mul(e, x))] = static_cast<int>(reps.size());
        reps.push_back(x);
    }
    std::vector<std::vector<Point>> act(reps.size(), std::vector<Point>(static_cast<std::size_t>(g.order())));
    for (std::size_t y = 0; y < reps.size(); ++y)
        for (Element a = 0; a < g.order(); ++a) act[y][static_cast<std::size_t>(a)] = coset[static_cast<std::size_t>(g.mul(reps[y], a))];
    return action_groupoid(g, act);
}

Reduction reduce(const FiniteGroupoid& g, std::vector<Point> Y) {
    std::sort(Y.begin(), Y.end());
    Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
    Reduction r;
    r.points = Y;
    r.point_index.assign(static_cast<std::size_t>(g.points), -1);
    for (std::size_t i = 0; i < Y.size(); ++i) {
        if (Y[i] < 0 || Y[i] >= g.points) throw input_error("reduction point out of range");
        r.point_index[static_cast<std::size_t>(Y[i])] = static_cast<int>(i);
    }
    r.arrow_index.assign(static_cast<std::size_t>(g.arrows()), -1);
    for (Arrow a = 0; a < g.arrows(); ++a)
        if (r.point_index[static_cast<std::size_t>(g.range[static_cast<std::size_t>(a)])] >= 0 &&
            r.point_index[static_cast<std::size_t>(g.source[static_cast<std::size_t>(a)])] >= 0) {
            r.arrow_index[static_cast<std::size_t>(a)] = static_cast<int>(r.arrows.size());
            r.arrows.push_back(a);
        }
    auto& G = r.groupoid;
    const int A = static_cast<int>(r.arrows.size());
    G.points = static_cast<int>(Y.size());
    for (Arrow a : r.arrows) {
        G.range.push_back(r.point_index[static_cast<std::size_t>(g.range[static_cast<std::size_t>(a)])]);
        G.source.push_back(r.point_index[static_cast<std::size_t>(g.source[static_cast<std::size_t>(a)])]);
        G.inverse.push_back(r.arrow_index[static_cast<std::size_t>(g.inverse[static_cast<std::size_t>(a)])]);
    }
    for (Point y : Y) G.unit.push_back(r.arrow_index[static_cast<std::size_t>(g.unit[static_cast<std::size_t>(y)])]);
    G.product.assign(static_cast<std::size_t>(A) * A, -1);
    for (int i = 0; i < A; ++i)
        for (int j = 0; j < A; ++j)
            if (g.composable(r.arrows[static_cast<std::size_t>(i)], r.arrows[static_cast<std::size_t>(j)]))
                G.product[static_cast<std::size_t>(i * A + j)] =
                    r.arrow_index[static_cast<std::size_t>(g.mul(r.arrows[static_cast<std::size_t>(i)], r.arrows[static_cast<std::size_t>(j)]))];
    validate_groupoid(G);
    return r;
}

Arrow Pullback::arrow(Point z, Arrow h, Point x) const {
    for (std::size_t i = 0; i < triple.size(); ++i)
        if (triple[i] == std::array<int, 3>{z, h, x}) return static_cast<Arrow>(i);
    throw std::invalid_argument("no such pullback arrow");
}

Pullback pullback_groupoid(const FiniteGroupoid& h, std::vector<Point> f) {
    const int X = static_cast<int>(f.size());
    std::vector<char> hit(static_cast<std::size_t>(h.points), 0);
    for (Point y : f) {
        if (y < 0 || y >= h.points) throw input_error("pullback map leaves the base");
        hit[static_cast<std::size_t>(y)] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) throw input_error("pullback map is not surjective");
    Pullback p;
    p.f = f;
    std::map<std::array<int, 3>, Arrow> index;
    for (Point z = 0; z < X; ++z)
        for (Arrow a = 0; a < h.arrows(); ++a)
            for (Point x = 0; x < X; ++x)
                if (h.range[static_cast<std::size_t>(a)] == f[static_cast<std::size_t>(z)] &&
                    h.source[static_cast<std::size_t>(a)] == f[static_cast<std::size_t>(x)]) {
                    index[{z, a, x}] = static_cast<Arrow>(p.triple.size());
                    p.triple.push_back({z, a, x});
                }
    auto& G = p.groupoid;
    const int A = static_cast<int>(p.triple.size());
    G.points = X;
    for (const auto& t : p.triple) {
        G.range.push_back(t[0]);
        G.source.push_back(t[2]);
        G.inverse.push_back(index.at({t[2], h.inverse[static_cast<std::size_t>(t[1])], t[0]}));
    }
    for (Point x = 0; x < X; ++x) G.unit.push_back(index.at({x, h.unit[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])], x}));
    G.product.assign(static_cast<std::size_t>(A) * A, -1);
    for (int i = 0; i < A; ++i)
        for (int j = 0; j < A; ++j) {
            const auto& a = p.triple[static_cast<std::size_t>(i)];
            const auto& b = p.triple[static_cast<std::size_t>(j)];
            if (a[2] == b[0]) G.product[static_cast<std::size_t>(i * A + j)] = index.at({a[0], h.mul(a[1], b[1]), b[2]});
        }
    validate_groupoid(G);
    return p;
}

SaturatingSection saturating_section(const FiniteGroupoid& g, std::vector<Point> Y) {
    std::sort(Y.begin(), Y.end());
    Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
    std::vector<char> inY(static_cast<std::size_t>(g.points), 0);
    for (Point y : Y) inY[static_cast<std::size_t>(y)] = 1;
    SaturatingSection s{Y, std::vector<Arrow>(static_cast<std::size_t>(g.points), -1), std::vector<Point>(static_cast<std::size_t>(g.points), -1)};
    for (Point x = 0; x < g.points; ++x) {
        if (inY[static_cast<std::size_t>(x)]) {
            s.gamma[static_cast<std::size_t>(x)] = g.unit[static_cast<std::size_t>(x)];
        } else {
            for (Arrow a = 0; a < g.arrows(); ++a)
                if (g.source[static_cast<std::size_t>(a)] == x && inY[static_cast<std::size_t>(g.range[static_cast<std::size_t>(a)])]) {
                    s.gamma[static_cast<std::size_t>(x)] = a;
                    break;
                }
        }
        if (s.gamma[static_cast<std::size_t>(x)] < 0)
            throw input_error("Y does not saturate the base: point " + std::to_string(x) + " has no arrow into Y");
        s.f[static_cast<std::size_t>(x)] = g.range[static_cast<std::size_t>(s.gamma[static_cast<std::size_t>(x)])];
    }
    return s;
}

Arrow push_forward(const FiniteGroupoid& g, const SaturatingSection& sec, Arrow a) {
    Point z = g.range[static_cast<std::size_t>(a)], x = g.source[static_cast<std::size_t>(a)];
    return g.mul(g.mul(sec.gamma[static_cast<std::size_t>(z)], a), g.inverse[static_cast<std::size_t>(sec.gamma[static_cast<std::size_t>(x)])]);
}

PullbackIso pullback_iso(const FiniteGroupoid& g, std::vector<Point> Y) {
    PullbackIso iso;
    iso.section = saturating_section(g, Y);
    iso.reduced = reduce(g, iso.section.Y);
    std::vector<Point> f;
    for (Point x = 0; x < g.points; ++x) f.push_back(iso.reduced.point_index[static_cast<std::size_t>(iso.section.f[static_cast<std::size_t>(x)])]);
    iso.pullback = pullback_groupoid(iso.reduced.groupoid, f);
    const auto& P = iso.pullback;
    iso.pi.resize(P.triple.size());
    for (std::size_t i = 0; i < P.triple.size(); ++i) {
        auto [z, h, x] = P.triple[i];
        Arrow hp = iso.reduced.arrows[static_cast<std::size_t>(h)];
        Arrow gz = iso.section.gamma[static_cast<std::size_t>(z)], gx = iso.section.gamma[static_cast<std::size_t>(x)];
        iso.pi[i] = g.mul(g.mul(g.inverse[static_cast<std::size_t>(gz)], hp), gx);
    }
    iso.pi_inv.resize(static_cast<std::size_t>(g.arrows()));
    for (Arrow a = 0; a < g.arrows(); ++a) {
        Arrow h = iso.reduced.arrow_index[static_cast<std::size_t>(push_forward(g, iso.section, a))];
        iso.pi_inv[static_cast<std::size_t>(a)] = P.arrow(g.range[static_cast<std::size_t>(a)], h, g.source[static_cast<std::size_t>(a)]);
    }
    return iso;
}

GroupoidModule trivial_groupoid_module(const FiniteGroupoid& g, const Carrier& c) {
    auto w = static_cast<Eigen::Index>(c.size());
    return {std::vector<Carrier>(static_cast<std::size_t>(g.points), c),
            std::vector<IntMatrixX>(static_cast<std::size_t>(g.arrows()), IntMatrixX::Identity(w, w))};
}

GroupoidModule constant_module(const ActionGroupoid& g, const CoefficientModule& a) {
    GroupoidModule m;
    m.fiber.assign(static_cast<std::size_t>(g.groupoid.points), a.carrier);
    for (Arrow e = 0; e < g.groupoid.arrows(); ++e) m.alpha.push_back(a.action[static_cast<std::size_t>(g.element_of(e))]);
    return m;
}

GroupoidModule group_module(const FiniteGroup& g, const CoefficientModule& a) {
    if (static_cast<int>(a.action.size()) != g.order()) throw input_error("module does not match the group");
    return {std::vector<Carrier>{a.carrier}, a.action};
}

void validate_module(const FiniteGroupoid& g, const GroupoidModule& a) {
    if (static_cast<int>(a.fiber.size()) != g.points || static_cast<int>(a.alpha.size()) != g.arrows())
        throw input_error("module does not match the groupoid");
    for (const auto& c : a.fiber)
        if (!c.is_circle() && !c.is_finite()) throw input_error("fiber mixes circle and finite components");
    auto same_map = [](const IntMatrixX& m1, const IntMatrixX& m2, const Carrier& src) {
        if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) return false;
        for (Eigen::Index i = 0; i < m1.rows(); ++i)
            for (Eigen::Index j = 0; j < m1.cols(); ++j) {
                auto k = src.moduli[static_cast<std::size_t>(j)];
                auto d = m1(i, j) - m2(i, j);
                if (k == 0 ? d != 0 : d % k != 0) return false;
            }
        return true;
    };
    for (Arrow e = 0; e < g.arrows(); ++e) {
        const auto& src = a.fiber[static_cast<std::size_t>(g.source[static_cast<std::size_t>(e)])];
        const auto& dst = a.fiber[static_cast<std::size_t>(g.range[static_cast<std::size_t>(e)])];
        const auto& m = a.alpha[static_cast<std::size_t>(e)];
        if (m.rows() != static_cast<Eigen::Index>(dst.size()) || m.cols() != static_cast<Eigen::Index>(src.size()))
            throw input_error("fiber mismatch at arrow " + std::to_string(e));
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                auto ki = dst.moduli[static_cast<std::size_t>(i)], kj = src.moduli[static_cast<std::size_t>(j)];
                if ((ki == 0) != (kj == 0) || (kj != 0 && checked::mul(m(i, j), ki) % kj != 0))
                    throw input_error("alpha at arrow " + std::to_string(e) + " does not map carriers");
            }
        if (g.is_unit(e) && !same_map(m, IntMatrixX::Identity(m.rows(), m.cols()), src))
            throw input_error("unit arrow " + std::to_string(e) + " acts nontrivially");
    }
    for (Arrow e = 0; e < g.arrows(); ++e)
        for (Arrow f = 0; f < g.arrows(); ++f)
            if (g.composable(e, f) &&
                !same_map(a.alpha[static_cast<std::size_t>(g.mul(e, f))], a.alpha[static_cast<std::size_t>(e)] * a.alpha[static_cast<std::size_t>(f)],
                          a.fiber[static_cast<std::size_t>(g.source[static_cast<std::size_t>(f)])]))
                throw input_error("chain rule fails at (" + std::to_string(e) + "," + std::to_string(f) + ")");
}

GroupoidModule restrict_module(const Reduction& r, const GroupoidModule& a) {
    GroupoidModule m;
    for (Point y : r.points) m.fiber.push_back(a.fiber[static_cast<std::size_t>(y)]);
    for (Arrow e : r.arrows) m.alpha.push_back(a.alpha[static_cast<std::size_t>(e)]);
    return m;
}

std::optional<std::size_t> CochainLayout::find(const std::vector<Arrow>& t) const {
    std::uint64_t key = 0;
    for (Arrow a : t) key = key * base + static_cast<std::uint64_t>(a);
    auto it = index.find(key);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::size_t CochainLayout::at(const std::vector<Arrow>& t) const {
    auto i = find(t);
    if (!i) throw std::invalid_argument("tuple is not composable");
    return *i;
}

bool GroupoidCochain::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const CircleValue& v) { return v.is_zero(); });
}

GroupoidCochain& GroupoidCochain::operator+=(const GroupoidCochain& o) {
    if (o.values.size() != values.size()) throw std::invalid_argument("cochain shape mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

GroupoidCochain& GroupoidCochain::operator-=(const GroupoidCochain& o) {
    if (o.values.size() != values.size()) throw std::invalid_argument("cochain shape mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
}

GroupoidComplex::GroupoidComplex(FiniteGroupoid g, GroupoidModule a, std::int64_t bound)
    : g_(std::move(g)), a_(std::move(a)), bound_(bound) {
    validate_groupoid(g_);
    validate_module(g_, a_);
    if (bound_ == 0) {
        // |isotropy|^2 bounds the torsion of every orbit's cohomology
        std::int64_t iso = 1;
        for (Point x = 0; x < g_.points; ++x) iso = std::max<std::int64_t>(iso, static_cast<std::int64_t>(g_.isotropy(x).size()));
        bound_ = iso * iso;
    }
}

std::shared_ptr<const CochainLayout> GroupoidComplex::layout(int degree) const {
    if (degree < 0 || degree > 4) throw input_error("unsupported groupoid cochain degree " + std::to_string(degree));
    if (layouts_.size() <= static_cast<std::size_t>(degree)) layouts_.resize(static_cast<std::size_t>(degree) + 1);
    auto& slot = layouts_[static_cast<std::size_t>(degree)];
    if (slot) return slot;
    auto L = std::make_shared<CochainLayout>();
    L->degree = degree;
    L->base = static_cast<std::uint64_t>(std::max(g_.arrows(), g_.points)) + 1;
    auto push = [&](std::vector<Arrow> t, Point fiber) {
        std::uint64_t key = 0;
        for (Arrow a : t) key = key * L->base + static_cast<std::uint64_t>(a);
        L->index[key] = L->tuples.size();
        L->offset.push_back(L->carrier.size());
        L->fiber.push_back(fiber);
        const auto& c = a_.fiber[static_cast<std::size_t>(fiber)];
        L->carrier.moduli.insert(L->carrier.moduli.end(), c.moduli.begin(), c.moduli.end());
        L->tuples.push_back(std::move(t));
    };
    if (degree == 0) {
        for (Point x = 0; x < g_.points; ++x) push({x}, x);
    } else {
        // extend composable chains one arrow at a time, lexicographically
        std::vector<std::vector<Arrow>> chains;
        for (Arrow a = 0; a < g_.arrows(); ++a) chains.push_back({a});
        for (int d = 1; d < degree; ++d) {
            std::vector<std::vector<Arrow>> next;
            for (const auto& c : chains)
                for (Arrow a = 0; a < g_.arrows(); ++a)
                    if (g_.composable(c.back(), a)) {
                        auto e = c;
                        e.push_back(a);
                        next.push_back(std::move(e));
                    }
            chains = std::move(next);
        }
        for (auto& c : chains) {
            Point fiber = g_.range[static_cast<std::size_t>(c.front())];
            push(std::move(c), fiber);
        }
    }
    slot = L;
    return slot;
}

GroupoidCochain GroupoidComplex::zero(int degree) const {
    auto L = layout(degree);
    return {L, std::vector<CircleValue>(L->size())};
}

GroupoidCochain GroupoidComplex::random(int degree, std::mt19937_64& rng, std::int64_t denominator) const {
    if (denominator == 0) denominator = bound_;
    auto xi = zero(degree);
    for (std::size_t i = 0; i < xi.values.size(); ++i) {
        auto k = xi.layout->carrier.moduli[i];
        if (k == 0) k = denominator;
        xi.values[i] = CircleValue(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k)), k);
    }
    return xi;
}

GroupoidCochain GroupoidComplex::from_values(int degree, std::vector<CircleValue> values) const {
    auto L = layout(degree);
    if (values.size() != L->size()) throw std::invalid_argument("value vector has wrong length for this degree");
    return {L, std::move(values)};
}

void GroupoidComplex::act(Arrow g, const CircleValue* x, CircleValue* out) const {
    const auto& m = a_.alpha[static_cast<std::size_t>(g)];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        CircleValue s;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) s += m(i, j) * x[j];
        out[i] = s;
    }
}

namespace {

// Visits the terms of (d xi)(t) as (sign, tuple of degree n, optional arrow acting first).
template <typename F>
void coboundary_terms(const FiniteGroupoid& g, const std::vector<Arrow>& t, int n, F&& emit) {
    if (n == 0) {
        Arrow a = t[0];
        emit(1, std::vector<Arrow>{g.source[static_cast<std::size_t>(a)]}, a);
        emit(-1, std::vector<Arrow>{g.range[static_cast<std::size_t>(a)]}, -1);
        return;
    }
    emit(1, std::vector<Arrow>(t.begin() + 1, t.end()), t[0]);
    for (int k = 1; k <= n; ++k) {
        std::vector<Arrow> u;
        for (int i = 0; i <= n; ++i) {
            if (i == k) continue;
            u.push_back(i == k - 1 ? g.mul(t[static_cast<std::size_t>(k - 1)], t[static_cast<std::size_t>(k)]) : t[static_cast<std::size_t>(i)]);
        }
        emit(k % 2 ? -1 : 1, std::move(u), -1);
    }
    emit((n + 1) % 2 ? -1 : 1, std::vector<Arrow>(t.begin(), t.end() - 1), -1);
}

}  // namespace

GroupoidCochain groupoid_coboundary(const GroupoidComplex& c, const GroupoidCochain& xi) {
    const int n = xi.degree();
    if (xi.layout->tuples != c.layout(n)->tuples || xi.values.size() != c.layout(n)->size())
        throw std::invalid_argument("cochain does not belong to this complex");
    const auto& g = c.groupoid();
    auto out = c.zero(n + 1);
    const auto& L = *out.layout;
    std::vector<CircleValue> tmp;
    for (std::size_t i = 0; i < L.tuples.size(); ++i) {
        CircleValue* dst = out.values.data() + L.offset[i];
        const std::size_t w = c.module().width(L.fiber[i]);
        coboundary_terms(g, L.tuples[i], n, [&](int sign, const std::vector<Arrow>& u, Arrow act) {
            const std::size_t j = xi.layout->at(u);
            const CircleValue* src = xi.values.data() + xi.layout->offset[j];
            const CircleValue* val = src;
            if (act >= 0) {
                tmp.assign(w, CircleValue());
                c.act(act, src, tmp.data());
                val = tmp.data();
            } else if (xi.layout->fiber[j] != L.fiber[i]) {
                throw std::logic_error("fiber mismatch at arrow " + std::to_string(L.tuples[i][0]));
            }
            for (std::size_t k = 0; k < w; ++k) {
                if (sign > 0) dst[k] += val[k];
                else dst[k] -= val[k];
            }
        });
    }
    return out;
}

IntMatrixX groupoid_coboundary_matrix(const GroupoidComplex& c, int degree) {
    auto Lsrc = c.layout(degree);
    auto Ldst = c.layout(degree + 1);
    if (Lsrc->size() > kMatrixCap || Ldst->size() > kMatrixCap)
        throw input_error("groupoid coboundary matrix exceeds the size cap in degree " + std::to_string(degree));
    const auto& g = c.groupoid();
    IntMatrixX D = IntMatrixX::Zero(static_cast<Eigen::Index>(Ldst->size()), static_cast<Eigen::Index>(Lsrc->size()));
    for (std::size_t i = 0; i < Ldst->tuples.size(); ++i) {
        auto r0 = static_cast<Eigen::Index>(Ldst->offset[i]);
        auto w = static_cast<Eigen::Index>(c.module().width(Ldst->fiber[i]));
        coboundary_terms(g, Ldst->tuples[i], degree, [&](int sign, const std::vector<Arrow>& u, Arrow act) {
            const std::size_t j = Lsrc->at(u);
            auto c0 = static_cast<Eigen::Index>(Lsrc->offset[j]);
            auto wj = static_cast<Eigen::Index>(c.module().width(Lsrc->fiber[j]));
            if (act >= 0) D.block(r0, c0, w, wj) += sign * c.module().alpha[static_cast<std::size_t>(act)];
            else D.block(r0, c0, w, w).diagonal().array() += sign;
        });
    }
    return D;
}

bool is_cocycle(const GroupoidComplex& c, const GroupoidCochain& xi) {
    for (std::size_t i = 0; i < xi.values.size(); ++i)
        if (!xi.layout->carrier.admits(i, xi.values[i])) return false;
    return groupoid_coboundary(c, xi).is_zero();
}

CochainQuotient groupoid_quotient(const GroupoidComplex& c, int degree) {
    if (degree < 0 || degree > 3) throw input_error("unsupported degree " + std::to_string(degree) + " (0..3)");
    IntMatrixX D = groupoid_coboundary_matrix(c, degree);
    IntMatrixX P = degree > 0 ? groupoid_coboundary_matrix(c, degree - 1) : IntMatrixX(D.cols(), 0);
    Carrier prev = degree > 0 ? c.layout(degree - 1)->carrier : Carrier{};
    return CochainQuotient(P, D, prev, c.layout(degree)->carrier, c.layout(degree + 1)->carrier);
}

std::optional<GroupoidCochain> is_coboundary(const GroupoidComplex& c, const CochainQuotient& q, const GroupoidCochain& xi) {
    if (xi.degree() == 0) return std::nullopt;
    auto y = q.preimage(xi.values);
    if (!y) return std::nullopt;
    auto eta = c.from_values(xi.degree() - 1, *y);
    if (groupoid_coboundary(c, eta) != xi) throw std::logic_error("coboundary witness failed verification");
    return eta;
}

std::optional<GroupoidCochain> is_coboundary(const GroupoidComplex& c, const GroupoidCochain& xi) {
    return is_coboundary(c, groupoid_quotient(c, xi.degree()), xi);
}

FinAbReport groupoid_cohomology(const GroupoidComplex& c, int degree, std::int64_t bound) {
    if (bound == 0) bound = c.bound();
    auto q = groupoid_quotient(c, degree);
    return report_from_quotient(q, c.layout(degree)->carrier, degree, bound, degree > 0);
}

}  // namespace cocycle
