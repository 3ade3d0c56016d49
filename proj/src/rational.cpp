#include "cocycle/rational.hpp"

#include <charconv>
#include <numeric>

namespace cocycle {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a == INT64_MIN || b == INT64_MIN) throw overflow_error("gcd of INT64_MIN");
    return std::gcd(a, b);
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    std::int64_t g = gcd(a, b);
    return checked::mul(a / g, b < 0 ? -b : b) * (a < 0 ? -1 : 1);
}

namespace {

void reduce(__int128 n, __int128 d, std::int64_t& num, std::int64_t& den) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    if (n >= INT64_MIN + 1 && n <= INT64_MAX && d <= INT64_MAX) {
        // common case: stay in 64 bits, where gcd is cheap
        auto n64 = static_cast<std::int64_t>(n), d64 = static_cast<std::int64_t>(d);
        std::int64_t g = std::gcd(n64, d64);
        num = n64 / g;
        den = d64 / g;
        return;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    num = checked::narrow(n);
    den = checked::narrow(d);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) { reduce(n, d, num_, den_); }

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) {
        reduce(static_cast<__int128>(num_) + o.num_, den_, num_, den_);
        return *this;
    }
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    reduce(n, d, num_, den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    reduce(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_, num_, den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero rational");
    reduce(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_, num_, den_);
    return *this;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        if (s.empty()) throw std::invalid_argument("not a rational: \"" + text + "\"");
        const char* b = s.data();
        if (*b == '+') ++b;
        auto [p, ec] = std::from_chars(b, s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size())
            throw std::invalid_argument("not a rational: \"" + text + "\"");
        return v;
    };
    std::string_view sv(text);
    auto slash = sv.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(sv));
    return Rational(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const CircleValue& c) { return os << c.str(); }

CircleValue pairing(const TorusPoint& s, std::int64_t k) {
    if (s.period != Period::T) throw std::invalid_argument("pairing expects a point of R/TZ");
    return -(k * s.value);
}

}  // namespace cocycle
