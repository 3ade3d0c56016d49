#include "cocycle/bar.hpp"

#include <algorithm>
#include <stdexcept>

namespace cocycle {

bool CoefficientModule::trivial_action() const {
    for (const auto& m : action)
        if (m != IntMatrixX::Identity(m.rows(), m.cols())) return false;
    return true;
}

void CoefficientModule::act(Element g, const CircleValue* x, CircleValue* out) const {
    const IntMatrixX& m = action[static_cast<std::size_t>(g)];
    const std::size_t c = width();
    for (std::size_t i = 0; i < c; ++i) {
        CircleValue s;
        for (std::size_t j = 0; j < c; ++j) {
            auto e = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            if (e == 1) s += x[j];
            else if (e != 0) s += e * x[j];
        }
        out[i] = s;
    }
}

CoefficientModule trivial_module(const FiniteGroup& g, Carrier carrier, std::int64_t bound) {
    auto c = static_cast<Eigen::Index>(carrier.size());
    CoefficientModule a{std::move(carrier), std::vector<IntMatrixX>(static_cast<std::size_t>(g.order()), IntMatrixX::Identity(c, c)),
                        bound};
    return a;
}

CoefficientModule circle_module(const FiniteGroup& g, std::int64_t bound) { return trivial_module(g, Carrier::circle(), bound); }

CoefficientModule cyclic_module(const FiniteGroup& g, std::vector<std::int64_t> orders,
                                const std::vector<IntMatrixX>& element_action) {
    Carrier carrier = Carrier::cyclics(std::move(orders));
    if (element_action.empty()) return trivial_module(g, carrier);
    if (static_cast<int>(element_action.size()) != g.order()) throw input_error("module action needs one matrix per element");
    const auto c = static_cast<Eigen::Index>(carrier.size());
    std::vector<IntMatrixX> action;
    for (const auto& u : element_action) {
        if (u.rows() != c || u.cols() != c) throw input_error("action matrix has wrong shape");
        // x_i = u_i / k_i, so the value matrix is K^-1 U K.
        IntMatrixX v(c, c);
        for (Eigen::Index i = 0; i < c; ++i)
            for (Eigen::Index j = 0; j < c; ++j) {
                auto ki = carrier.moduli[static_cast<std::size_t>(i)], kj = carrier.moduli[static_cast<std::size_t>(j)];
                auto num = checked::mul(u(i, j), kj);
                if (num % ki != 0) throw input_error("action matrix is not a homomorphism of the carrier");
                v(i, j) = num / ki;
            }
        action.push_back(v);
    }
    CoefficientModule a{carrier, action, 0};
    validate_module(g, a);
    return a;
}

void validate_module(const FiniteGroup& g, const CoefficientModule& a) {
    const auto c = static_cast<Eigen::Index>(a.width());
    if (static_cast<int>(a.action.size()) != g.order()) throw input_error("module action needs one matrix per element");
    if (!a.carrier.is_circle() && !a.carrier.is_finite()) throw input_error("carrier mixes circle and finite components");
    // Integer matrices M and M' induce the same map iff (M - M')_{ij} x_j is integral for every
    // admissible x_j, i.e. divisible by k_j (exact equality on circle components).
    auto same_map = [&](const IntMatrixX& m1, const IntMatrixX& m2) {
        for (Eigen::Index i = 0; i < c; ++i)
            for (Eigen::Index j = 0; j < c; ++j) {
                auto k = a.carrier.moduli[static_cast<std::size_t>(j)];
                auto d = m1(i, j) - m2(i, j);
                if (k == 0 ? d != 0 : d % k != 0) return false;
            }
        return true;
    };
    for (Element x = 0; x < g.order(); ++x) {
        const auto& m = a.action[static_cast<std::size_t>(x)];
        if (m.rows() != c || m.cols() != c) throw input_error("action matrix has wrong shape");
        for (Eigen::Index i = 0; i < c; ++i)
            for (Eigen::Index j = 0; j < c; ++j) {
                auto ki = a.carrier.moduli[static_cast<std::size_t>(i)], kj = a.carrier.moduli[static_cast<std::size_t>(j)];
                if (kj != 0 && checked::mul(m(i, j), ki) % kj != 0)
                    throw input_error("action of element " + std::to_string(x) + " leaves the carrier");
            }
    }
    if (!same_map(a.action[0], IntMatrixX::Identity(c, c))) throw input_error("identity does not act trivially");
    for (Element x = 0; x < g.order(); ++x)
        for (Element y = 0; y < g.order(); ++y)
            if (!same_map(a.action[static_cast<std::size_t>(g.mul(x, y))],
                          a.action[static_cast<std::size_t>(x)] * a.action[static_cast<std::size_t>(y)]))
                throw input_error("module action is not a homomorphism at pair (" + std::to_string(x) + "," +
                                  std::to_string(y) + ")");
}

std::int64_t default_bound(const FiniteGroup& g, const CoefficientModule& a) {
    if (!a.carrier.is_circle()) return 0;
    return a.bound ? a.bound : static_cast<std::int64_t>(g.order()) * g.order();
}

std::size_t power(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::vector<Element> decode_tuple(std::size_t index, int order, int n) {
    std::vector<Element> t(static_cast<std::size_t>(n));
    for (int i = n; i-- > 0;) {
        t[static_cast<std::size_t>(i)] = static_cast<Element>(index % static_cast<std::size_t>(order));
        index /= static_cast<std::size_t>(order);
    }
    return t;
}

std::size_t GroupCochain::index(std::initializer_list<Element> t) const {
    if (static_cast<int>(t.size()) != degree) throw std::invalid_argument("tuple length does not match degree");
    std::size_t i = 0;
    for (Element x : t) i = i * static_cast<std::size_t>(group_order) + static_cast<std::size_t>(x);
    return i;
}

bool GroupCochain::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const CircleValue& v) { return v.is_zero(); });
}

GroupCochain& GroupCochain::operator+=(const GroupCochain& o) {
    if (o.values.size() != values.size() || o.width != width) throw std::invalid_argument("cochain shape mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

GroupCochain& GroupCochain::operator-=(const GroupCochain& o) {
    if (o.values.size() != values.size() || o.width != width) throw std::invalid_argument("cochain shape mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
}

GroupCochain operator*(std::int64_t k, GroupCochain a) {
    for (auto& v : a.values) v = k * v;
    return a;
}

GroupCochain zero_cochain(const FiniteGroup& g, const CoefficientModule& a, int degree) {
    GroupCochain xi{degree, g.order(), a.width(), {}};
    xi.values.assign(power(static_cast<std::size_t>(g.order()), degree) * a.width(), CircleValue());
    return xi;
}

GroupCochain random_cochain(const FiniteGroup& g, const CoefficientModule& a, int degree, std::mt19937_64& rng,
                            std::int64_t denominator) {
    if (denominator == 0) denominator = std::max<std::int64_t>(default_bound(g, a), 1);
    GroupCochain xi = zero_cochain(g, a, degree);
    for (std::size_t i = 0; i < xi.values.size(); ++i) {
        auto k = a.carrier.moduli[i % a.width()];
        if (k == 0) k = denominator;
        xi.values[i] = CircleValue(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k)), k);
    }
    return xi;
}

namespace {

// Running sum in T kept over a common denominator and reduced once at the end.
class CircleSum {
public:
    void add(const CircleValue& v, bool negate) {
        std::int64_t vn = v.numerator(), vd = v.denominator();
        if (vn == 0) return;
        if (d_ % vd != 0) {
            std::int64_t l = lcm(d_, vd);
            n_ = checked::mul(n_, l / d_);
            d_ = l;
        }
        std::int64_t term = checked::mul(vn, d_ / vd);
        n_ = negate ? n_ - term : n_ + term;  // both in (-d, d)
        if (n_ >= d_) n_ -= d_;
        else if (n_ < 0) n_ += d_;
    }
    CircleValue value() const { return CircleValue(n_, d_); }

private:
    std::int64_t n_ = 0, d_ = 1;
};

}  // namespace

GroupCochain coboundary(const FiniteGroup& g, const CoefficientModule& a, const GroupCochain& xi) {
    const int n = xi.degree;
    const std::size_t c = a.width();
    if (xi.width != c || xi.group_order != g.order()) throw std::invalid_argument("coefficient mismatch between cochain and module");
    const auto N = static_cast<std::size_t>(g.order());
    GroupCochain out = zero_cochain(g, a, n + 1);
    std::vector<CircleValue> tmp(c);
    std::vector<bool> plain(N);  // elements acting as the identity
    for (std::size_t e = 0; e < N; ++e) plain[e] = a.action[e].isIdentity();
    // pw[j] = N^j; face k of (t0..tn) has index (prefix(t0..t_{k-2}) N + t_{k-1} t_k) N^{n-k} + suffix(t_{k+1}..tn)
    std::vector<std::size_t> pw(static_cast<std::size_t>(n + 2), 1);
    for (std::size_t j = 1; j < pw.size(); ++j) pw[j] = pw[j - 1] * N;
    std::vector<Element> t(static_cast<std::size_t>(n + 1), 0);
    std::vector<CircleSum> dst(c);
    for (std::size_t idx = 0; idx < out.tuples(); ++idx) {
        if (idx > 0)  // advance t to decode(idx) like an odometer
            for (std::size_t i = t.size(); i-- > 0;) {
                if (++t[i] < g.order()) break;
                t[i] = 0;
            }
        std::fill(dst.begin(), dst.end(), CircleSum{});
        // alpha_{g0} xi(g1..gn): drop the leading entry
        const CircleValue* lead = &xi.values[(idx % pw[static_cast<std::size_t>(n)]) * c];
        if (plain[static_cast<std::size_t>(t[0])]) {
            for (std::size_t j = 0; j < c; ++j) dst[j].add(lead[j], false);
        } else {
            a.act(t[0], lead, tmp.data());
            for (std::size_t j = 0; j < c; ++j) dst[j].add(tmp[j], false);
        }
        for (int k = 1; k <= n; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            const std::size_t rest = pw[static_cast<std::size_t>(n - k)];
            const std::size_t prefix = idx / (rest * N * N);
            const auto prod = static_cast<std::size_t>(g.mul(t[ku - 1], t[ku]));
            const std::size_t merged = (prefix * N + prod) * rest + idx % rest;
            for (std::size_t j = 0; j < c; ++j) dst[j].add(xi.values[merged * c + j], k % 2 == 1);
        }
        std::size_t head = idx / N;
        for (std::size_t j = 0; j < c; ++j) {
            dst[j].add(xi.values[head * c + j], (n + 1) % 2 == 1);
            out.values[idx * c + j] = dst[j].value();
        }
    }
    return out;
}

Carrier cochain_carrier(const FiniteGroup& g, const CoefficientModule& a, int degree) {
    Carrier c;
    std::size_t t = power(static_cast<std::size_t>(g.order()), degree);
    c.moduli.reserve(t * a.width());
    for (std::size_t i = 0; i < t; ++i) c.moduli.insert(c.moduli.end(), a.carrier.moduli.begin(), a.carrier.moduli.end());
    return c;
}

IntMatrixX coboundary_matrix(const FiniteGroup& g, const CoefficientModule& a, int degree) {
    const int n = degree;
    const auto c = static_cast<Eigen::Index>(a.width());
    const auto N = static_cast<std::size_t>(g.order());
    const std::size_t rows_t = power(N, n + 1), cols_t = power(N, n);
    if (rows_t * static_cast<std::size_t>(c) > kMatrixCap || cols_t * static_cast<std::size_t>(c) > kMatrixCap)
        throw input_error("coboundary matrix exceeds the size cap");
    IntMatrixX D = IntMatrixX::Zero(static_cast<Eigen::Index>(rows_t) * c, static_cast<Eigen::Index>(cols_t) * c);
    for (std::size_t idx = 0; idx < rows_t; ++idx) {
        auto t = decode_tuple(idx, g.order(), n + 1);
        auto r0 = static_cast<Eigen::Index>(idx) * c;
        auto tail = static_cast<Eigen::Index>(idx % cols_t) * c;
        D.block(r0, tail, c, c) += a.action[static_cast<std::size_t>(t[0])];
        for (int k = 1; k <= n; ++k) {
            std::size_t merged = 0;
            for (int i = 0; i <= n; ++i) {
                if (i == k) continue;
                Element e = (i == k - 1) ? g.mul(t[static_cast<std::size_t>(k - 1)], t[static_cast<std::size_t>(k)]) : t[static_cast<std::size_t>(i)];
                merged = merged * N + static_cast<std::size_t>(e);
            }
            D.block(r0, static_cast<Eigen::Index>(merged) * c, c, c).diagonal().array() += (k % 2 ? -1 : 1);
        }
        auto head = static_cast<Eigen::Index>(idx / N) * c;
        D.block(r0, head, c, c).diagonal().array() += ((n + 1) % 2 ? -1 : 1);
    }
    return D;
}

bool is_cocycle(const FiniteGroup& g, const CoefficientModule& a, const GroupCochain& xi) {
    for (std::size_t i = 0; i < xi.values.size(); ++i)
        if (!a.carrier.admits(i % a.width(), xi.values[i])) return false;
    return coboundary(g, a, xi).is_zero();
}

CochainQuotient bar_quotient(const FiniteGroup& g, const CoefficientModule& a, int degree) {
    if (degree < 0 || degree > 3) throw input_error("unsupported degree " + std::to_string(degree) + " (0..3)");
    IntMatrixX D = coboundary_matrix(g, a, degree);
    IntMatrixX P = degree > 0 ? coboundary_matrix(g, a, degree - 1) : IntMatrixX(D.cols(), 0);
    Carrier prev = degree > 0 ? cochain_carrier(g, a, degree - 1) : Carrier{};
    return CochainQuotient(P, D, prev, cochain_carrier(g, a, degree), cochain_carrier(g, a, degree + 1));
}

std::optional<GroupCochain> is_coboundary(const FiniteGroup& g, const CoefficientModule& a, const CochainQuotient& q,
                                          const GroupCochain& xi) {
    auto y = q.preimage(xi.values);
    if (!y) return std::nullopt;
    if (xi.degree == 0) return std::nullopt;  // B^0 = 0; preimage only succeeded for xi = 0
    GroupCochain eta = as_cochain(g, a, xi.degree - 1, *y);
    if (coboundary(g, a, eta) != xi) throw std::logic_error("coboundary witness failed verification");
    return eta;
}

std::optional<GroupCochain> is_coboundary(const FiniteGroup& g, const CoefficientModule& a, const GroupCochain& xi) {
    return is_coboundary(g, a, bar_quotient(g, a, xi.degree), xi);
}

GroupCochain as_cochain(const FiniteGroup& g, const CoefficientModule& a, int degree, std::vector<CircleValue> values) {
    GroupCochain xi{degree, g.order(), a.width(), std::move(values)};
    if (xi.values.size() != power(static_cast<std::size_t>(g.order()), degree) * a.width())
        throw std::invalid_argument("value vector has wrong length for this degree");
    return xi;
}

std::int64_t FinAbReport::order() const {
    std::int64_t o = 1;
    for (auto d : invariant_factors) o = checked::mul(o, d);
    return o;
}

FinAbReport report_from_quotient(const CochainQuotient& q, const Carrier& mid, int degree, std::int64_t bound,
                                 bool has_prev) {
    FinAbReport r;
    r.degree = degree;
    const auto& exact = q.invariant_factors();
    std::vector<std::int64_t> expect;  // class coordinate of each representative along its own axis
    if (mid.is_circle()) {
        r.bound = bound;
        r.exact_torsion = exact;
        r.continuous_rank = q.continuous_rank();
        for (std::size_t i = 0; i < exact.size(); ++i) {
            auto gi = gcd(exact[i], bound);
            if (gi <= 1) continue;
            r.invariant_factors.push_back(gi);
            r.representatives.push_back(q.representative(i, gi));
        }
        for (std::int64_t k = 0; k < r.continuous_rank; ++k) {
            if (has_prev) throw std::logic_error("continuous cohomology above degree 0");
            r.invariant_factors.push_back(bound);
            r.representatives.push_back(q.continuous_representative(static_cast<std::size_t>(k), bound));
        }
        // The doubling check concerns the torsion part; continuous directions always grow with M.
        std::vector<std::int64_t> at_m, at_2m;
        for (auto s : exact) {
            if (gcd(s, bound) > 1) at_m.push_back(gcd(s, bound));
            if (gcd(s, 2 * bound) > 1) at_2m.push_back(gcd(s, 2 * bound));
        }
        r.stable = at_m == at_2m;
    } else {
        r.invariant_factors = exact;
        for (std::size_t i = 0; i < exact.size(); ++i) r.representatives.push_back(q.representative(i));
    }

    // Each torsion representative must be a cocycle sitting on its own axis with the right order.
    bool ok = true;
    std::size_t torsion_count = r.representatives.size() - static_cast<std::size_t>(r.continuous_rank);
    std::vector<std::vector<std::int64_t>> classes;
    for (std::size_t i = 0; i < r.representatives.size() && ok; ++i) {
        ok = q.is_cocycle(r.representatives[i]);
        if (ok && i < torsion_count) classes.push_back(q.class_of(r.representatives[i]));
    }
    if (ok) {
        std::size_t t = 0;
        for (std::size_t i = 0; i < exact.size() && ok; ++i) {
            if (mid.is_circle() && gcd(exact[i], bound) <= 1) continue;
            const auto& cls = classes[t++];
            for (std::size_t j = 0; j < cls.size(); ++j) {
                std::int64_t want = (j == i) ? exact[i] / (mid.is_circle() ? gcd(exact[i], bound) : exact[i]) : 0;
                if (cls[j] != want % exact[j]) ok = false;
            }
        }
        for (std::size_t a = 0; a < classes.size(); ++a)
            for (std::size_t b = a + 1; b < classes.size(); ++b)
                if (classes[a] == classes[b]) ok = false;
    }
    r.verified = ok;
    return r;
}

FinAbReport cohomology(const FiniteGroup& g, const CoefficientModule& a, int degree, std::int64_t bound) {
    if (degree < 0 || degree > 3) throw input_error("unsupported degree " + std::to_string(degree) + " (0..3)");
    validate_module(g, a);
    if (bound == 0) bound = default_bound(g, a);
    auto q = bar_quotient(g, a, degree);
    return report_from_quotient(q, cochain_carrier(g, a, degree), degree, bound, degree > 0);
}

GroupCochain cup_carry(const FiniteGroup& q, const std::vector<int>& u, const GroupCochain& v) {
    const auto N = static_cast<std::size_t>(q.order());
    if (u.size() != N * N || v.degree != 2 || v.group_order != q.order()) throw std::invalid_argument("cup_carry shape mismatch");
    GroupCochain out{4, q.order(), v.width, {}};
    out.values.resize(N * N * N * N * v.width);
    for (std::size_t pq = 0; pq < N * N; ++pq)
        for (std::size_t rs = 0; rs < N * N; ++rs)
            for (std::size_t j = 0; j < v.width; ++j)
                out.values[(pq * N * N + rs) * v.width + j] = static_cast<std::int64_t>(u[pq]) * v.values[rs * v.width + j];
    return out;
}

}  // namespace cocycle
