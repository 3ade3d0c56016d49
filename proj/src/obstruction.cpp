#include "cocycle/obstruction.hpp"

#include <algorithm>
#include <stdexcept>

namespace cocycle {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

std::string tuple_str(const std::vector<Element>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

void check_shape(const FiniteGroup& q, const GroupCochain& c, int degree, const char* what) {
    if (c.degree != degree || c.group_order != q.order() || c.width != 1 || c.values.size() != power(sz(q.order()), degree))
        throw input_error(std::string(what) + " has the wrong shape");
}

CircleValue fbar_f(const QmWitness& w, QmElement x, QmElement y) {
    return x.k * w.chi({y.p}) + w.fbar({x.p, y.p});
}

}  // namespace

ModulusSetup make_setup(const FiniteGroup& g, const SubgroupData& n, ModulusMap m,
                        std::optional<std::vector<Element>> section_choice) {
    if (!(n.parent == g)) throw input_error("subgroup belongs to a different group");
    if (!n.central) throw input_error("N is not central");
    check_modulus(g, m);
    for (Element a : n.elements)
        if (!m[sz(a)].value.is_zero()) throw input_error("m does not vanish on N at element " + std::to_string(a));
    auto quo = quotient(g, n);
    auto sec = section_choice ? make_section(quo.pi, std::move(*section_choice)) : make_section(quo.pi);
    auto nN = section_cocycle(sec);
    ModulusMap mq;
    for (Element p = 0; p < quo.Q.order(); ++p) mq.push_back(m[sz(sec(p))]);
    auto nZ = carry_cocycle(quo.Q, mq);
    return {g, n, std::move(m), std::move(quo), std::move(sec), std::move(nN), std::move(mq), std::move(nZ)};
}

ModulusMap modulus_from_quotient(const FiniteGroup& g, const SubgroupData& n, const ModulusMap& mq) {
    auto quo = quotient(g, n);
    check_modulus(quo.Q, mq);
    ModulusMap m;
    for (Element a = 0; a < g.order(); ++a) m.push_back(mq[sz(quo.pi(a))]);
    return m;
}

StandardCocycle zero_standard(const FiniteGroup& q) {
    auto a = circle_module(q);
    return {zero_cochain(q, a, 3), zero_cochain(q, a, 2)};
}

CircleValue eval_standard(const StandardCocycle& c, QmElement x, QmElement y, QmElement z) {
    return x.k * c.d({y.p, z.p}) + c.cbar({x.p, y.p, z.p});
}

CircleValue qm_coboundary(const Qm& qm, const StandardCocycle& c, QmElement a, QmElement b, QmElement e, QmElement f) {
    return eval_standard(c, b, e, f) - eval_standard(c, qm.mul(a, b), e, f) + eval_standard(c, a, qm.mul(b, e), f) -
           eval_standard(c, a, b, qm.mul(e, f)) + eval_standard(c, a, b, e);
}

StandardCheck verify_standard(const ModulusSetup& s, const StandardCocycle& c) {
    const auto& Q = s.Q();
    check_shape(Q, c.cbar, 3, "cbar");
    check_shape(Q, c.d, 2, "d");
    auto A = circle_module(Q);
    auto dd = coboundary(Q, A, c.d);
    for (std::size_t i = 0; i < dd.values.size(); ++i)
        if (!dd.values[i].is_zero())
            return {false, 'a', "d fails the 2-cocycle identity at " + tuple_str(decode_tuple(i, Q.order(), 3))};
    auto lhs = coboundary(Q, A, c.cbar);
    auto rhs = cup_carry(Q, s.nZ.values, c.d);
    for (std::size_t i = 0; i < lhs.values.size(); ++i)
        if (lhs.values[i] != rhs.values[i])
            return {false, 'b', "d cbar differs from n_Z cup d at " + tuple_str(decode_tuple(i, Q.order(), 4))};
    return {};
}

GroupCochain d_part(const StandardCocycle& c) { return c.d; }

StandardCocycle qm_coboundary_of(const ModulusSetup& s, const QmWitness& f) {
    const auto& Q = s.Q();
    check_shape(Q, f.fbar, 2, "fbar");
    check_shape(Q, f.chi, 1, "chi");
    auto A = circle_module(Q);
    StandardCocycle c{coboundary(Q, A, f.fbar), zero_cochain(Q, A, 2)};
    const int n = Q.order();
    for (Element q = 0; q < n; ++q)
        for (Element r = 0; r < n; ++r) c.d({q, r}) = f.chi({Q.mul(q, r)}) - f.chi({q}) - f.chi({r});
    for (Element p = 0; p < n; ++p)
        for (Element q = 0; q < n; ++q)
            for (Element r = 0; r < n; ++r) c.cbar({p, q, r}) -= s.nZ(p, q) * f.chi({r});
    return c;
}

std::optional<QmWitness> is_coboundary_qm(const ModulusSetup& s, const StandardCocycle& c) {
    const auto& Q = s.Q();
    check_shape(Q, c.cbar, 3, "cbar");
    check_shape(Q, c.d, 2, "d");
    const int n = Q.order();
    const auto n2 = static_cast<Eigen::Index>(n * n), n3 = n2 * n;
    auto A = circle_module(Q);
    // columns: fbar (n^2), chi (n); rows: cbar (n^3), d (n^2)
    IntMatrixX M = IntMatrixX::Zero(n3 + n2, n2 + n);
    M.block(0, 0, n3, n2) = coboundary_matrix(Q, A, 2);
    for (Element p = 0; p < n; ++p)
        for (Element q = 0; q < n; ++q)
            for (Element r = 0; r < n; ++r) M((p * n + q) * n + r, n2 + r) -= s.nZ(p, q);
    for (Element q = 0; q < n; ++q)
        for (Element r = 0; r < n; ++r) {
            auto row = n3 + q * n + r;
            M(row, n2 + Q.mul(q, r)) += 1;
            M(row, n2 + q) -= 1;
            M(row, n2 + r) -= 1;
        }
    // A normalized c gets a normalized witness: fbar and chi vanish at the identity.
    std::vector<Eigen::Index> cols;
    const bool norm = is_normalized(c);
    for (Element p = 0; p < n; ++p)
        for (Element q = 0; q < n; ++q)
            if (!norm || (p != 0 && q != 0)) cols.push_back(p * n + q);
    for (Element q = 0; q < n; ++q)
        if (!norm || q != 0) cols.push_back(n2 + q);
    IntMatrixX K(M.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) K.col(static_cast<Eigen::Index>(j)) = M.col(cols[j]);
    std::vector<CircleValue> rhs = c.cbar.values;
    rhs.insert(rhs.end(), c.d.values.begin(), c.d.values.end());
    CochainQuotient solver(K, IntMatrixX(0, K.rows()), Carrier::circle(cols.size()), Carrier::circle(rhs.size()), Carrier{});
    auto y = solver.preimage(rhs);
    if (!y) return std::nullopt;
    QmWitness w{zero_cochain(Q, A, 2), zero_cochain(Q, A, 1)};
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] < n2) w.fbar.values[sz(static_cast<int>(cols[j]))] = (*y)[j];
        else w.chi.values[sz(static_cast<int>(cols[j] - n2))] = (*y)[j];
    }

    // Check d f against c on Q_m itself, exponents |k| <= 2.
    Qm qm(s);
    std::vector<QmElement> elems;
    for (Element p = 0; p < n; ++p)
        for (std::int64_t k = -2; k <= 2; ++k) elems.push_back({p, k});
    for (auto x : elems)
        for (auto yv : elems)
            for (auto z : elems) {
                CircleValue df = fbar_f(w, yv, z) - fbar_f(w, qm.mul(x, yv), z) + fbar_f(w, x, qm.mul(yv, z)) - fbar_f(w, x, yv);
                if (df != eval_standard(c, x, yv, z)) throw std::logic_error("Q_m coboundary witness failed verification");
            }
    return w;
}

GroupCochain fiber_d(const ModulusSetup& s, const NuMap& nu) {
    const auto& Q = s.Q();
    if (nu.size() != s.N.elements.size()) throw input_error("nu needs one value per element of N");
    auto d = zero_cochain(Q, circle_module(Q), 2);
    for (Element q = 0; q < Q.order(); ++q)
        for (Element r = 0; r < Q.order(); ++r) d({q, r}) = -nu[sz(s.n_index(s.nN(q, r)))];
    return d;
}

ObstructionDatum make_datum(const ModulusSetup& s, GroupCochain cbar, NuMap nu) {
    auto d = fiber_d(s, nu);
    return {{std::move(cbar), std::move(d)}, std::move(nu)};
}

bool is_homomorphism(const ModulusSetup& s, const NuMap& nu) {
    if (nu.size() != s.N.elements.size()) return false;
    for (Element a : s.N.elements)
        for (Element b : s.N.elements)
            if (nu[sz(s.n_index(s.G.mul(a, b)))] != nu[sz(s.n_index(a))] + nu[sz(s.n_index(b))]) return false;
    return true;
}

StandardCheck verify_datum(const ModulusSetup& s, const ObstructionDatum& x) {
    auto c = verify_standard(s, x.c);
    if (!c.ok) return c;
    if (!is_homomorphism(s, x.nu)) return {false, 'h', "nu is not a homomorphism on N"};
    if (!(fiber_d(s, x.nu) == x.c.d)) return {false, 'f', "d differs from <nu(n_N), 1>"};
    return {};
}

ObstructionDatum operator+(const ObstructionDatum& a, const ObstructionDatum& b) {
    if (a.nu.size() != b.nu.size()) throw input_error("data over different N");
    ObstructionDatum out{{a.c.cbar + b.c.cbar, a.c.d + b.c.d}, a.nu};
    for (std::size_t i = 0; i < out.nu.size(); ++i) out.nu[i] += b.nu[i];
    return out;
}

namespace {

// Tuples with no identity entry: the normalized cochains.
std::vector<std::size_t> normalized_tuples(int n, int degree) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < power(sz(n), degree); ++i) {
        auto t = decode_tuple(i, n, degree);
        if (std::find(t.begin(), t.end(), 0) == t.end()) out.push_back(i);
    }
    return out;
}

CochainQuotient hout_quotient(const ModulusSetup& s, const std::vector<std::size_t>& keep3, const std::vector<std::size_t>& keep2) {
    const auto& Q = s.Q();
    const int n = Q.order();
    const auto nn = static_cast<Eigen::Index>(s.N.elements.size());
    const Eigen::Index n3 = n * n * n, n4 = n3 * n;
    if (static_cast<std::size_t>(n4 + nn * nn) > kMatrixCap) throw input_error("H^out presentation exceeds the size cap");
    auto A = circle_module(Q);
    const auto k3 = static_cast<Eigen::Index>(keep3.size()), k2 = static_cast<Eigen::Index>(keep2.size());
    IntMatrixX D = IntMatrixX::Zero(n4 + nn * nn, k3 + nn);
    IntMatrixX D3 = coboundary_matrix(Q, A, 3);
    for (Eigen::Index j = 0; j < k3; ++j) D.col(j).head(n4) = D3.col(static_cast<Eigen::Index>(keep3[sz(static_cast<int>(j))]));
    // d cbar - n_Z(p,q) d(r,t) with d(r,t) = -nu(n_N(r,t))
    for (Element p = 0; p < n; ++p)
        for (Element q = 0; q < n; ++q) {
            if (s.nZ(p, q) == 0) continue;
            for (Element r = 0; r < n; ++r)
                for (Element t = 0; t < n; ++t)
                    D(((p * n + q) * n + r) * n + t, k3 + s.n_index(s.nN(r, t))) += s.nZ(p, q);
        }
    for (Eigen::Index a = 0; a < nn; ++a)
        for (Eigen::Index b = 0; b < nn; ++b) {
            auto row = n4 + a * nn + b;
            Element ab = s.G.mul(s.N.elements[sz(static_cast<int>(a))], s.N.elements[sz(static_cast<int>(b))]);
            D(row, k3 + a) += 1;
            D(row, k3 + b) += 1;
            D(row, k3 + s.n_index(ab)) -= 1;
        }
    IntMatrixX D2 = coboundary_matrix(Q, A, 2);
    IntMatrixX P = IntMatrixX::Zero(k3 + nn, k2);
    for (Eigen::Index i = 0; i < k3; ++i)
        for (Eigen::Index j = 0; j < k2; ++j)
            P(i, j) = D2(static_cast<Eigen::Index>(keep3[sz(static_cast<int>(i))]), static_cast<Eigen::Index>(keep2[sz(static_cast<int>(j))]));
    return CochainQuotient(P, D, Carrier::circle(sz(static_cast<int>(k2))), Carrier::circle(sz(static_cast<int>(k3 + nn))),
                           Carrier::circle(sz(static_cast<int>(D.rows()))));
}

}  // namespace

bool is_normalized(const GroupCochain& c) {
    for (std::size_t i = 0; i < c.tuples(); ++i) {
        auto t = decode_tuple(i, c.group_order, c.degree);
        if (std::find(t.begin(), t.end(), 0) == t.end()) continue;
        for (std::size_t j = 0; j < c.width; ++j)
            if (!c.values[i * c.width + j].is_zero()) return false;
    }
    return true;
}

bool is_normalized(const StandardCocycle& c) { return is_normalized(c.cbar) && is_normalized(c.d); }

HoutPresentation::HoutPresentation(const ModulusSetup& s)
    : s_(s),
      keep3_(normalized_tuples(s.Q().order(), 3)),
      keep2_(normalized_tuples(s.Q().order(), 2)),
      mid_(Carrier::circle(keep3_.size() + s.N.elements.size())),
      q_(hout_quotient(s, keep3_, keep2_)) {}

std::vector<CircleValue> HoutPresentation::flatten(const ObstructionDatum& x) const {
    check_shape(s_.Q(), x.c.cbar, 3, "cbar");
    if (x.nu.size() != s_.N.elements.size()) throw input_error("nu needs one value per element of N");
    if (!is_normalized(x.c.cbar)) throw input_error("H^out is presented on normalized cochains");
    std::vector<CircleValue> v;
    for (auto i : keep3_) v.push_back(x.c.cbar.values[i]);
    v.insert(v.end(), x.nu.begin(), x.nu.end());
    return v;
}

ObstructionDatum HoutPresentation::datum(const std::vector<CircleValue>& v) const {
    if (v.size() != mid_.size()) throw input_error("datum vector has the wrong size");
    auto cbar = zero_cochain(s_.Q(), circle_module(s_.Q()), 3);
    for (std::size_t j = 0; j < keep3_.size(); ++j) cbar.values[keep3_[j]] = v[j];
    return make_datum(s_, std::move(cbar), NuMap(v.begin() + static_cast<std::ptrdiff_t>(keep3_.size()), v.end()));
}

std::optional<GroupCochain> HoutPresentation::bout_witness(const ObstructionDatum& x) const {
    auto y = q_.preimage(flatten(x));
    if (!y) return std::nullopt;
    const auto& Q = s_.Q();
    auto A = circle_module(Q);
    auto f = zero_cochain(Q, A, 2);
    for (std::size_t j = 0; j < keep2_.size(); ++j) f.values[keep2_[j]] = (*y)[j];
    if (!(coboundary(Q, A, f) == x.c.cbar)) throw std::logic_error("B^out witness failed verification");
    for (const auto& v : x.nu)
        if (!v.is_zero()) throw std::logic_error("B^out witness with nonzero nu");
    return f;
}

std::int64_t default_hout_bound(const ModulusSetup& s) {
    const std::int64_t q = s.Q().order();
    return q * q * static_cast<std::int64_t>(s.N.elements.size());
}

HoutReport compute_hout(const ModulusSetup& s, std::int64_t bound) {
    if (bound == 0) bound = default_hout_bound(s);
    if (bound < 1) throw input_error("denominator bound must be positive");
    HoutPresentation h(s);
    HoutReport out;
    out.report = report_from_quotient(h.quotient(), h.carrier(), 3, bound, true);
    for (const auto& v : out.report.representatives) {
        out.representatives.push_back(h.datum(v));
        if (!verify_datum(s, out.representatives.back()).ok) out.report.verified = false;
    }
    return out;
}

GroupCochain del_map(const ModulusSetup& s, const ObstructionDatum& x) {
    auto chk = verify_datum(s, x);
    if (!chk.ok) throw input_error("invalid obstruction datum: " + chk.detail);
    const auto& G = s.G;
    auto out = zero_cochain(G, circle_module(G), 3);
    for (Element g = 0; g < G.order(); ++g)
        for (Element h = 0; h < G.order(); ++h)
            for (Element k = 0; k < G.order(); ++k) {
                Element p = s.pi(g), q = s.pi(h);
                CircleValue twist = pairing({Period::T, x.nu[sz(s.n_index(s.nN.element[sz(k)]))]}, 1);
                out({g, h, k}) = x.c.cbar({p, q, s.pi(k)}) - s.nZ(p, q) * twist;
            }
    return out;
}

Type3One::Type3One(const ModulusSetup& s, GroupCochain cQ, NuMap nu) : q_(s.Q()), cQ_(std::move(cQ)) {
    check_shape(q_, cQ_, 3, "c_Q");
    if (!is_cocycle(q_, circle_module(q_), cQ_)) throw input_error("c_Q is not a 3-cocycle on Q");
    if (!is_homomorphism(s, nu)) throw input_error("nu is not a homomorphism on N");
    const int n = q_.order();
    phi_.resize(sz(n * n));
    for (Element q = 0; q < n; ++q)
        for (Element r = 0; r < n; ++r) phi_[sz(q * n + r)] = nu[sz(s.n_index(s.nN(q, r)))].value();
    auto phi = [&](Element a, Element b) { return phi_[sz(a * n + b)]; };
    for (Element p = 0; p < n; ++p)
        for (Element q = 0; q < n; ++q)
            for (Element r = 0; r < n; ++r)
                if (phi(q, r) - phi(q_.mul(p, q), r) + phi(p, q_.mul(q, r)) - phi(p, q) != Rational(0))
                    throw input_error("[[nu(n_N)]] is not an exact rational 2-cocycle at " + tuple_str({p, q, r}));
}

CircleValue Type3One::operator()(const ExtendedElement& a, const ExtendedElement& b, const ExtendedElement& c) const {
    return cQ_({a.p, b.p, c.p}) + CircleValue(-(a.s * phi_[sz(b.p * q_.order() + c.p)]));
}

CircleValue Type3One::defect(const ExtendedElement& a, const ExtendedElement& b, const ExtendedElement& c,
                             const ExtendedElement& d) const {
    const auto& f = *this;
    return f(b, c, d) - f(mul(a, b), c, d) + f(a, mul(b, c), d) - f(a, b, mul(c, d)) + f(a, b, c);
}

}  // namespace cocycle
