#include "cocycle/shapiro.hpp"

#include <algorithm>
#include <stdexcept>

namespace cocycle {

namespace {

std::vector<int> slots(const FiniteGroupoid& g) {
    std::vector<int> out(static_cast<std::size_t>(g.arrows()));
    std::vector<int> next(static_cast<std::size_t>(g.points), 0);
    for (Arrow a = 0; a < g.arrows(); ++a) out[static_cast<std::size_t>(a)] = next[static_cast<std::size_t>(g.source[static_cast<std::size_t>(a)])]++;
    return out;
}

Carrier repeat(const Carrier& c, std::size_t times) {
    Carrier out;
    for (std::size_t i = 0; i < times; ++i) out.moduli.insert(out.moduli.end(), c.moduli.begin(), c.moduli.end());
    return out;
}

}  // namespace

GroupoidModule shapiro_module(const FiniteGroupoid& g, const GroupoidModule& a) {
    validate_module(g, a);
    auto slot = slots(g);
    GroupoidModule b;
    for (Point x = 0; x < g.points; ++x) b.fiber.push_back(repeat(a.fiber[static_cast<std::size_t>(x)], g.from(x).size()));
    for (Arrow e = 0; e < g.arrows(); ++e) {
        Point y = g.range[static_cast<std::size_t>(e)], x = g.source[static_cast<std::size_t>(e)];
        auto wy = static_cast<Eigen::Index>(a.width(y)), wx = static_cast<Eigen::Index>(a.width(x));
        IntMatrixX m = IntMatrixX::Zero(static_cast<Eigen::Index>(b.fiber[static_cast<std::size_t>(y)].size()),
                                        static_cast<Eigen::Index>(b.fiber[static_cast<std::size_t>(x)].size()));
        for (Arrow h : g.from(y)) {
            Arrow hg = g.mul(h, e);
            m.block(slot[static_cast<std::size_t>(h)] * wy, slot[static_cast<std::size_t>(hg)] * wx, wy, wx) = a.alpha[static_cast<std::size_t>(e)];
        }
        b.alpha.push_back(std::move(m));
    }
    return b;
}

GroupoidModule shapiro_quotient_module(const FiniteGroupoid& g, const GroupoidModule& a) {
    auto b = shapiro_module(g, a);
    auto slot = slots(g);
    // P : B(x) -> C(x) drops the unit slot after subtracting it; E : C(x) -> B(x) fills it with zero
    auto project = [&](Point x) {
        auto w = static_cast<Eigen::Index>(a.width(x));
        auto n = static_cast<Eigen::Index>(g.from(x).size());
        auto u = static_cast<Eigen::Index>(slot[static_cast<std::size_t>(g.unit[static_cast<std::size_t>(x)])]);
        IntMatrixX P = IntMatrixX::Zero((n - 1) * w, n * w);
        for (Eigen::Index k = 0, row = 0; k < n; ++k) {
            if (k == u) continue;
            P.block(row * w, k * w, w, w) = IntMatrixX::Identity(w, w);
            P.block(row * w, u * w, w, w) = -IntMatrixX::Identity(w, w);
            ++row;
        }
        return P;
    };
    auto embed = [&](Point x) {
        IntMatrixX P = project(x);
        IntMatrixX E = IntMatrixX::Zero(P.cols(), P.rows());
        auto w = static_cast<Eigen::Index>(a.width(x));
        auto u = static_cast<Eigen::Index>(slot[static_cast<std::size_t>(g.unit[static_cast<std::size_t>(x)])]);
        for (Eigen::Index k = 0, row = 0; k < static_cast<Eigen::Index>(g.from(x).size()); ++k) {
            if (k == u) continue;
            E.block(k * w, row * w, w, w) = IntMatrixX::Identity(w, w);
            ++row;
        }
        return E;
    };
    GroupoidModule c;
    for (Point x = 0; x < g.points; ++x) c.fiber.push_back(repeat(a.fiber[static_cast<std::size_t>(x)], g.from(x).size() - 1));
    for (Arrow e = 0; e < g.arrows(); ++e)
        c.alpha.push_back(project(g.range[static_cast<std::size_t>(e)]) * b.alpha[static_cast<std::size_t>(e)] *
                          embed(g.source[static_cast<std::size_t>(e)]));
    return c;
}

ShapiroTower::ShapiroTower(const FiniteGroupoid& g, const GroupoidModule& a, std::int64_t bound)
    : a_(g, a, bound), b_(g, shapiro_module(g, a), a_.bound()), c_(g, shapiro_quotient_module(g, a), a_.bound()) {
    for (Point x = 0; x < g.points; ++x) from_.push_back(g.from(x));
    slot_ = slots(g);
}

std::size_t ShapiroTower::slot(Point x, Arrow h) const {
    if (a_.groupoid().source[static_cast<std::size_t>(h)] != x) throw std::invalid_argument("arrow does not start at the point");
    return static_cast<std::size_t>(slot_[static_cast<std::size_t>(h)]);
}

GroupoidCochain ShapiroTower::include(const GroupoidCochain& xi) const {
    const int n = xi.degree();
    auto out = b_.zero(n);
    const auto& L = *xi.layout;
    const auto& LB = *out.layout;
    for (std::size_t i = 0; i < L.tuples.size(); ++i) {
        Point x = L.fiber[i];
        const std::size_t w = a_.module().width(x);
        for (std::size_t k = 0; k < from_[static_cast<std::size_t>(x)].size(); ++k)
            for (std::size_t j = 0; j < w; ++j) out.values[LB.offset[i] + k * w + j] = xi.values[L.offset[i] + j];
    }
    return out;
}

GroupoidCochain ShapiroTower::project(const GroupoidCochain& eta) const {
    auto out = c_.zero(eta.degree());
    const auto& LB = *eta.layout;
    const auto& LC = *out.layout;
    for (std::size_t i = 0; i < LB.tuples.size(); ++i) {
        Point x = LB.fiber[i];
        const std::size_t w = a_.module().width(x);
        const std::size_t u = static_cast<std::size_t>(slot_[static_cast<std::size_t>(a_.groupoid().unit[static_cast<std::size_t>(x)])]);
        const CircleValue* b = eta.values.data() + LB.offset[i];
        CircleValue* c = out.values.data() + LC.offset[i];
        for (std::size_t k = 0, row = 0; k < from_[static_cast<std::size_t>(x)].size(); ++k) {
            if (k == u) continue;
            for (std::size_t j = 0; j < w; ++j) c[row * w + j] = b[k * w + j] - b[u * w + j];
            ++row;
        }
    }
    return out;
}

GroupoidCochain shapiro_contract(const ShapiroTower& t, const GroupoidCochain& xi) {
    const int n = xi.degree();
    if (n < 1) throw input_error("contraction needs degree at least 1");
    const auto& B = t.induced();
    if (xi.values.size() != B.layout(n)->size()) throw input_error("cochain is not valued in the induced module");
    if (!is_cocycle(B, xi)) throw input_error("contraction needs a cocycle");
    const auto& g = B.groupoid();
    const auto& A = t.base();
    auto eta = B.zero(n - 1);
    const auto& L = *eta.layout;
    std::vector<Arrow> u;
    for (std::size_t i = 0; i < L.tuples.size(); ++i) {
        Point x = L.fiber[i];
        const std::size_t w = A.module().width(x);
        for (Arrow h : g.from(x)) {
            u.assign(1, h);
            if (n > 1) u.insert(u.end(), L.tuples[i].begin(), L.tuples[i].end());
            Point y = g.range[static_cast<std::size_t>(h)];
            const CircleValue* src = xi.at(u) + t.slot(y, g.unit[static_cast<std::size_t>(y)]) * A.module().width(y);
            A.act_inverse(h, src, eta.values.data() + L.offset[i] + t.slot(x, h) * w);
        }
    }
    return eta;
}

GroupoidCochain dimension_shift(const ShapiroTower& t, const GroupoidCochain& xi) {
    if (!is_cocycle(t.base(), xi)) throw input_error("dimension shift needs a cocycle");
    auto eta = shapiro_contract(t, t.include(xi));
    return t.project(eta);
}

GroupoidModule induce_module(const Pullback& p, const GroupoidModule& b) {
    GroupoidModule a;
    for (Point y : p.f) a.fiber.push_back(b.fiber[static_cast<std::size_t>(y)]);
    for (const auto& t : p.triple) a.alpha.push_back(b.alpha[static_cast<std::size_t>(t[1])]);
    validate_module(p.groupoid, a);
    return a;
}

ReductionMaps::ReductionMaps(const GroupoidComplex& full, std::vector<Point> Y)
    : full_(full),
      sec_(saturating_section(full.groupoid(), std::move(Y))),
      red_(reduce(full.groupoid(), sec_.Y)),
      part_(red_.groupoid, restrict_module(red_, full.module()), full.bound()) {
    const auto& g = full_.groupoid();
    for (Arrow a = 0; a < g.arrows(); ++a) push_.push_back(red_.arrow_index[static_cast<std::size_t>(push_forward(g, sec_, a))]);
}

GroupoidCochain ReductionMaps::restrict(const GroupoidCochain& xi) const {
    auto out = part_.zero(xi.degree());
    const auto& L = *out.layout;
    std::vector<Arrow> parent;
    for (std::size_t i = 0; i < L.tuples.size(); ++i) {
        parent.clear();
        for (Arrow a : L.tuples[i]) parent.push_back(xi.degree() == 0 ? red_.points[static_cast<std::size_t>(a)] : red_.arrows[static_cast<std::size_t>(a)]);
        const CircleValue* src = xi.at(parent);
        std::copy(src, src + part_.module().width(L.fiber[i]), out.values.begin() + static_cast<std::ptrdiff_t>(L.offset[i]));
    }
    return out;
}

GroupoidCochain ReductionMaps::inflate(const GroupoidCochain& xi_y) const {
    const int n = xi_y.degree();
    auto out = full_.zero(n);
    const auto& L = *out.layout;
    std::vector<Arrow> child;
    for (std::size_t i = 0; i < L.tuples.size(); ++i) {
        Point z = L.fiber[i];
        child.clear();
        if (n == 0) {
            child.push_back(red_.point_index[static_cast<std::size_t>(sec_.f[static_cast<std::size_t>(z)])]);
        } else {
            for (Arrow a : L.tuples[i]) child.push_back(push_[static_cast<std::size_t>(a)]);
        }
        full_.act_inverse(sec_.gamma[static_cast<std::size_t>(z)], xi_y.at(child), out.values.data() + L.offset[i]);
    }
    return out;
}

std::optional<GroupoidCochain> ReductionMaps::witness(const GroupoidCochain& xi) const {
    auto diff = inflate(restrict(xi)) - xi;
    if (xi.degree() == 0) {
        if (!diff.is_zero()) return std::nullopt;
        return diff;
    }
    return is_coboundary(full_, diff);
}

}  // namespace cocycle
