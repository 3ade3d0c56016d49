#pragma once

#include <cstdint>
#include <compare>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cocycle {

// Thrown whenever an exact int64 computation would leave the representable range.
struct overflow_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("int64 overflow in addition");
    return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("int64 overflow in subtraction");
    return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("int64 overflow in multiplication");
    return r;
}
inline std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw overflow_error("int64 overflow");
    return static_cast<std::int64_t>(v);
}

// Floor division and the matching non-negative remainder.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline std::int64_t mod(std::int64_t a, std::int64_t b) {
    std::int64_t r = a % b;
    if (r < 0) r += (b < 0 ? -b : b);
    return r;
}

}  // namespace checked

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

class CircleValue;

// Exact rational with int64 numerator and positive denominator, always reduced.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: integers convert implicitly
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t floor() const { return checked::floor_div(num_, den_); }
    // Fractional part in [0,1).
    Rational frac() const { return reduced(checked::mod(num_, den_), den_); }

    Rational operator-() const { return Rational(checked::sub(0, num_), den_); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }

    std::string str() const;
    // Accepts "a/b", "a" and "-a/b"; anything else (decimals, exponents) is rejected.
    static Rational parse(const std::string& text);

private:
    friend class CircleValue;

    // Reduces by the gcd without the overflow-safe path: needs d > 0 and |n| < 2^63.
    static Rational reduced(std::int64_t n, std::int64_t d) {
        std::int64_t g = std::gcd(n, d);
        Rational r;
        r.num_ = n / g;
        r.den_ = d / g;
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// A point of T = R/Z written additively: the rational a/b taken mod 1.
class CircleValue {
public:
    CircleValue() = default;
    CircleValue(const Rational& r) : v_(r.frac()) {}  // NOLINT: reduction mod 1 is the intended conversion
    CircleValue(std::int64_t n, std::int64_t d) : v_(Rational(n, d).frac()) {}

    const Rational& value() const { return v_; }
    std::int64_t numerator() const { return v_.num(); }
    std::int64_t denominator() const { return v_.den(); }
    bool is_zero() const { return v_.num() == 0; }

    CircleValue operator-() const { return CircleValue(-v_); }
    CircleValue& operator+=(const CircleValue& o) { return add(o.v_.num(), o.v_.den()); }
    CircleValue& operator-=(const CircleValue& o) { return add(o.v_.num() == 0 ? 0 : o.v_.den() - o.v_.num(), o.v_.den()); }
    friend CircleValue operator+(CircleValue a, const CircleValue& b) { return a += b; }
    friend CircleValue operator-(CircleValue a, const CircleValue& b) { return a -= b; }
    friend CircleValue operator*(std::int64_t k, const CircleValue& a) {
        return CircleValue(Rational(checked::mul(k % a.v_.den(), a.v_.num()), a.v_.den()));
    }
    friend bool operator==(const CircleValue&, const CircleValue&) = default;
    friend auto operator<=>(const CircleValue& a, const CircleValue& b) { return a.v_ <=> b.v_; }

    std::string str() const { return v_.str(); }
    static CircleValue parse(const std::string& text) { return CircleValue(Rational::parse(text)); }

private:
    // Adds n/d with 0 <= n < d. Numerators lie in [0, den), so small denominators keep every
    // intermediate in 64 bits and cost a single gcd.
    CircleValue& add(std::int64_t n, std::int64_t d) {
        const std::int64_t a = v_.num(), b = v_.den();
        if (b == d) {
            std::int64_t s = a + n;
            if (s >= d) s -= d;
            v_ = Rational::reduced(s, d);
        } else if (b < (std::int64_t{1} << 31) && d < (std::int64_t{1} << 31)) {
            const std::int64_t den = b * d;
            std::int64_t s = a * d + n * b;
            if (s >= den) s -= den;
            v_ = Rational::reduced(s, den);
        } else {
            v_ = (v_ + Rational(n, d)).frac();
        }
        return *this;
    }

    Rational v_;
};

std::ostream& operator<<(std::ostream& os, const CircleValue& c);

// Which period a torus coordinate is measured in: R/TZ or R/T'Z.
enum class Period { T, TPrime };

// A rational point of R/TZ or R/T'Z, stored in units of its period and reduced into [0,1).
struct TorusPoint {
    Period period = Period::T;
    CircleValue value;

    // The representative in [0, period) divided by the period.
    const Rational& bracket() const { return value.value(); }

    friend TorusPoint operator+(const TorusPoint& a, const TorusPoint& b) {
        if (a.period != b.period) throw std::invalid_argument("torus points with different periods");
        return {a.period, a.value + b.value};
    }
    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

// <s, k> = exp(-i T' k [[s]]), additively -k * s mod 1, for s in R/TZ measured in units of T.
CircleValue pairing(const TorusPoint& s, std::int64_t k);

}  // namespace cocycle

template <>
struct std::hash<cocycle::CircleValue> {
    std::size_t operator()(const cocycle::CircleValue& c) const noexcept {
        return std::hash<std::int64_t>()(c.numerator()) * 1000003u ^ std::hash<std::int64_t>()(c.denominator());
    }
};
