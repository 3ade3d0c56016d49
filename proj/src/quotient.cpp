#include "cocycle/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace cocycle {

Carrier Carrier::cyclics(std::vector<std::int64_t> orders) {
    for (auto k : orders)
        if (k <= 0) throw std::invalid_argument("cyclic orders must be positive");
    return {std::move(orders)};
}

bool Carrier::is_circle() const {
    return std::all_of(moduli.begin(), moduli.end(), [](std::int64_t k) { return k == 0; });
}

bool Carrier::is_finite() const {
    return std::all_of(moduli.begin(), moduli.end(), [](std::int64_t k) { return k > 0; });
}

namespace {

std::int64_t common_denominator(const std::vector<CircleValue>& x) {
    std::int64_t d = 1;
    for (const auto& v : x) d = lcm(d, v.denominator());
    return d;
}

// x scaled to integers by the common denominator `den`.
IntVectorX scaled(const std::vector<CircleValue>& x, std::int64_t den) {
    IntVectorX X(static_cast<Eigen::Index>(x.size()));
    for (std::size_t j = 0; j < x.size(); ++j)
        X(static_cast<Eigen::Index>(j)) = checked::mul(x[j].numerator(), den / x[j].denominator());
    return X;
}

// Row i of A times X, exactly.
__int128 row_dot(const IntMatrixX& A, Eigen::Index i, const IntVectorX& X) {
    __int128 s = 0;
    for (Eigen::Index j = 0; j < A.cols(); ++j)
        if (A(i, j) != 0 && X(j) != 0) s += static_cast<__int128>(A(i, j)) * X(j);
    return s;
}

std::int64_t mod128(__int128 a, std::int64_t m) {
    __int128 r = a % m;
    if (r < 0) r += m;
    return static_cast<std::int64_t>(r);
}

}  // namespace

std::vector<CircleValue> apply_matrix(const IntMatrixX& D, const std::vector<CircleValue>& x) {
    if (static_cast<std::size_t>(D.cols()) != x.size()) throw std::invalid_argument("matrix/vector size mismatch");
    std::int64_t den = common_denominator(x);
    IntVectorX X = scaled(x, den);
    std::vector<CircleValue> y(static_cast<std::size_t>(D.rows()));
    for (Eigen::Index i = 0; i < D.rows(); ++i) y[static_cast<std::size_t>(i)] = CircleValue(mod128(row_dot(D, i, X), den), den);
    return y;
}

CochainQuotient::CochainQuotient(const IntMatrixX& D_prev, const IntMatrixX& D, Carrier prev, Carrier mid,
                                 Carrier next)
    : D_prev_(D_prev), D_(D), prev_(std::move(prev)), mid_(std::move(mid)), next_(std::move(next)) {
    const Eigen::Index V = D.cols();
    if (static_cast<std::size_t>(V) != mid_.size() || static_cast<std::size_t>(D.rows()) != next_.size() ||
        D_prev.rows() != V || static_cast<std::size_t>(D_prev.cols()) != prev_.size())
        throw std::invalid_argument("cochain complex dimensions do not match carriers");

    if (mid_.is_circle()) {
        if (!prev_.is_circle() || !next_.is_circle()) throw std::invalid_argument("mixed circle/finite carriers");
        snf_ = smith_normal_form(D, kSmithRight | kSmithRightInverse);
        for (std::size_t i = 0; i < snf_.diagonal.size(); ++i)
            if (snf_.diagonal[i] > 1) {
                torsion_index_.push_back(i);
                factors_.push_back(snf_.diagonal[i]);
            }
        Eigen::Index prev_rank = D_prev.cols() ? integer_rank(D_prev) : 0;
        continuous_ = V - snf_.rank() - prev_rank;
        if (continuous_ < 0) throw std::logic_error("D * D_prev is not zero");
        return;
    }
    if (!mid_.is_finite() || !prev_.is_finite() || !next_.is_finite())
        throw std::invalid_argument("mixed circle/finite carriers");
    finite_ = true;

    // Element coordinates: u_j = k_j x_j.
    auto to_elements = [](const IntMatrixX& A, const Carrier& src, const Carrier& dst) {
        IntMatrixX B(A.rows(), A.cols());
        for (Eigen::Index i = 0; i < A.rows(); ++i)
            for (Eigen::Index j = 0; j < A.cols(); ++j) {
                __int128 num = static_cast<__int128>(A(i, j)) * dst.moduli[static_cast<std::size_t>(i)];
                std::int64_t k = src.moduli[static_cast<std::size_t>(j)];
                if (num % k != 0) throw std::invalid_argument("matrix does not preserve the finite carrier");
                B(i, j) = checked::narrow(num / k);
            }
        return B;
    };
    IntMatrixX Dt = to_elements(D, mid_, next_);
    IntMatrixX Pt = to_elements(D_prev, prev_, mid_);

    std::int64_t E = 1;
    for (auto k : next_.moduli) E = lcm(E, k);
    IntMatrixX Ds = Dt;
    for (Eigen::Index i = 0; i < Ds.rows(); ++i) Ds.row(i) *= E / next_.moduli[static_cast<std::size_t>(i)];
    snf_ = smith_normal_form(Ds, kSmithRight | kSmithRightInverse);
    IntVectorX e = IntVectorX::Ones(V);
    for (std::size_t i = 0; i < snf_.diagonal.size(); ++i)
        e(static_cast<Eigen::Index>(i)) = E / gcd(snf_.diagonal[i], E);
    scale_ = e;

    IntMatrixX gens(V, Pt.cols() + V);
    gens << Pt, IntMatrixX::Zero(V, V);
    for (Eigen::Index j = 0; j < V; ++j) gens(j, Pt.cols() + j) = mid_.moduli[static_cast<std::size_t>(j)];
    IntMatrixX C = snf_.Rinv * gens;
    for (Eigen::Index i = 0; i < V; ++i)
        for (Eigen::Index j = 0; j < C.cols(); ++j) {
            if (C(i, j) % e(i) != 0) throw std::logic_error("coboundary lattice escapes the cocycle lattice");
            C(i, j) /= e(i);
        }
    rel_ = smith_normal_form(C, kSmithAll);
    if (rel_.rank() != V) throw std::logic_error("coboundary lattice has deficient rank");
    for (std::size_t j = 0; j < rel_.diagonal.size(); ++j)
        if (rel_.diagonal[j] > 1) {
            rel_index_.push_back(j);
            factors_.push_back(rel_.diagonal[j]);
        }
}

std::vector<std::int64_t> CochainQuotient::factors_within(std::int64_t M) const {
    std::vector<std::int64_t> out;
    for (auto s : factors_) {
        auto g = gcd(s, M);
        if (g > 1) out.push_back(g);
    }
    for (std::int64_t i = 0; i < continuous_; ++i) out.push_back(M);
    return out;
}

bool CochainQuotient::is_cocycle(const std::vector<CircleValue>& x) const {
    if (x.size() != mid_.size()) return false;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (!mid_.admits(j, x[j])) return false;
    for (const auto& v : apply_matrix(D_, x))
        if (!v.is_zero()) return false;
    return true;
}

std::vector<Rational> CochainQuotient::circle_coords(const std::vector<CircleValue>& x) const {
    std::int64_t den = common_denominator(x);
    IntVectorX X = scaled(x, den);
    std::vector<Rational> w(x.size());
    for (Eigen::Index i = 0; i < snf_.Rinv.rows(); ++i)
        w[static_cast<std::size_t>(i)] = Rational(checked::narrow(row_dot(snf_.Rinv, i, X)), den);
    return w;
}

IntVectorX CochainQuotient::element_coords(const std::vector<CircleValue>& x) const {
    IntVectorX u(static_cast<Eigen::Index>(x.size()));
    for (std::size_t j = 0; j < x.size(); ++j) {
        Rational v = x[j].value() * Rational(mid_.moduli[j]);
        if (!v.is_integer()) throw std::invalid_argument("value outside the finite carrier");
        u(static_cast<Eigen::Index>(j)) = v.num();
    }
    return u;
}

std::vector<std::int64_t> CochainQuotient::class_of(const std::vector<CircleValue>& x) const {
    if (!is_cocycle(x)) throw std::invalid_argument("class_of called on a non-cocycle");
    std::vector<std::int64_t> out;
    if (!finite_) {
        auto w = circle_coords(x);
        for (std::size_t t = 0; t < torsion_index_.size(); ++t) {
            Rational sw = w[torsion_index_[t]] * Rational(factors_[t]);
            out.push_back(checked::mod(sw.num(), factors_[t]));
        }
        return out;
    }
    const Eigen::Index V = D_.cols();
    IntVectorX u = element_coords(x);
    IntVectorX a(V);
    for (Eigen::Index i = 0; i < V; ++i) {
        __int128 s = row_dot(snf_.Rinv, i, u);
        std::int64_t e = scale_(i);
        if (s % e != 0) throw std::logic_error("cocycle outside the computed lattice");
        a(i) = checked::narrow(s / e);
    }
    for (std::size_t t = 0; t < rel_index_.size(); ++t)
        out.push_back(mod128(row_dot(rel_.L, static_cast<Eigen::Index>(rel_index_[t]), a), factors_[t]));
    return out;
}

std::vector<CircleValue> CochainQuotient::representative(std::size_t i, std::int64_t order) const {
    std::int64_t s = factors_.at(i);
    if (order == 0) order = s;
    if (s % order != 0) throw std::invalid_argument("requested order does not divide the invariant factor");
    const Eigen::Index V = D_.cols();
    std::vector<CircleValue> x(static_cast<std::size_t>(V));
    if (!finite_) {
        auto col = static_cast<Eigen::Index>(torsion_index_[i]);
        for (Eigen::Index j = 0; j < V; ++j) x[static_cast<std::size_t>(j)] = CircleValue(snf_.R(j, col), order);
        return x;
    }
    IntVectorX a = rel_.Linv.col(static_cast<Eigen::Index>(rel_index_[i])) * (s / order);
    for (Eigen::Index j = 0; j < V; ++j) a(j) = checked::mul(a(j), scale_(j));
    for (Eigen::Index j = 0; j < V; ++j) {
        std::int64_t k = mid_.moduli[static_cast<std::size_t>(j)];
        __int128 u = 0;
        for (Eigen::Index l = 0; l < V; ++l) u += static_cast<__int128>(snf_.R(j, l)) * (a(l) % k);
        x[static_cast<std::size_t>(j)] = CircleValue(mod128(u, k), k);
    }
    return x;
}

std::vector<CircleValue> CochainQuotient::continuous_representative(std::size_t k, std::int64_t M) const {
    if (D_prev_.cols() != 0) throw std::logic_error("continuous generators are only tracked in degree 0");
    if (static_cast<std::int64_t>(k) >= continuous_) throw std::out_of_range("no such continuous generator");
    auto col = snf_.rank() + static_cast<Eigen::Index>(k);
    std::vector<CircleValue> x(mid_.size());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = CircleValue(snf_.R(static_cast<Eigen::Index>(j), col), M);
    return x;
}

std::optional<std::vector<CircleValue>> CochainQuotient::preimage(const std::vector<CircleValue>& x) const {
    if (!is_cocycle(x)) return std::nullopt;
    const Eigen::Index V = D_.cols();
    const Eigen::Index P = D_prev_.cols();
    if (!finite_) {
        if (P == 0) {
            for (const auto& v : x)
                if (!v.is_zero()) return std::nullopt;
            return std::vector<CircleValue>{};
        }
        // L D_prev R = diag(sigma): need (L x)_i in Z past the rank, then y = R (L x)_i / sigma_i
        if (!prev_snf_) prev_snf_ = smith_normal_form(D_prev_, kSmithLeft | kSmithRight);
        const auto& S = *prev_snf_;
        const std::int64_t den = common_denominator(x);
        IntVectorX X = scaled(x, den);
        std::vector<CircleValue> z(static_cast<std::size_t>(P));
        for (Eigen::Index i = 0; i < V; ++i) {
            __int128 c = row_dot(S.L, i, X);
            if (i >= S.rank()) {
                if (c % den != 0) return std::nullopt;
                continue;
            }
            std::int64_t m = checked::mul(den, S.diagonal[static_cast<std::size_t>(i)]);
            z[static_cast<std::size_t>(i)] = CircleValue(mod128(c, m), m);
        }
        std::vector<CircleValue> out(static_cast<std::size_t>(P));
        for (Eigen::Index j = 0; j < P; ++j)
            for (Eigen::Index i = 0; i < S.rank(); ++i)
                if (S.R(j, i) != 0) out[static_cast<std::size_t>(j)] += S.R(j, i) * z[static_cast<std::size_t>(i)];
        return out;
    }
    IntVectorX u = element_coords(x);
    IntVectorX a(V);
    for (Eigen::Index i = 0; i < V; ++i) {
        __int128 s = row_dot(snf_.Rinv, i, u);
        std::int64_t e = scale_(i);
        if (s % e != 0) throw std::logic_error("cocycle outside the computed lattice");
        a(i) = checked::narrow(s / e);
    }
    IntVectorX v = IntVectorX::Zero(rel_.cols);
    for (Eigen::Index j = 0; j < V; ++j) {
        __int128 c = row_dot(rel_.L, j, a);
        std::int64_t t = rel_.diagonal[static_cast<std::size_t>(j)];
        if (c % t != 0) return std::nullopt;
        v(j) = checked::narrow(c / t);
    }
    std::vector<CircleValue> out(static_cast<std::size_t>(P));
    for (Eigen::Index j = 0; j < P; ++j) {
        std::int64_t k = prev_.moduli[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(j)] = CircleValue(mod128(row_dot(rel_.R, j, v), k), k);
    }
    return out;
}

}  // namespace cocycle
