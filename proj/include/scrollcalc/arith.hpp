#ifndef SCROLLCALC_ARITH_HPP
#define SCROLLCALC_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace scrollcalc {

using i64 = std::int64_t;
using i128 = __int128;

// All library arithmetic is checked: a 64-bit overflow throws instead of
// wrapping.  Formulas are evaluated in 128 bits and narrowed once.
inline i64 narrow(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error(std::string("integer overflow in ") + what);
    return static_cast<i64>(v);
}

inline i64 checked_add(i64 a, i64 b) { return narrow(i128(a) + i128(b), "add"); }
inline i64 checked_sub(i64 a, i64 b) { return narrow(i128(a) - i128(b), "sub"); }
inline i64 checked_mul(i64 a, i64 b) { return narrow(i128(a) * i128(b), "mul"); }

/// Exact rational number on checked 64-bit integers.  Denominator is kept
/// positive and the fraction reduced after every operation.
class Rational {
public:
    Rational() = default;
    Rational(i64 n) : num_(n) {}  // NOLINT: implicit by design
    Rational(i64 n, i64 d) : num_(n), den_(d) { normalize(); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    i64 as_integer() const {
        if (!is_integer())
            throw std::logic_error("rational " + str() + " is not an integer");
        return num_;
    }

    Rational operator-() const { return Rational(checked_sub(0, num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        i128 d = i128(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "37/6", or plain "12" when integral.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    static Rational make(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 an = n < 0 ? -n : n;
        i128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num_ = narrow(n, "rational numerator");
        r.den_ = narrow(d, "rational denominator");
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        *this = make(num_, den_);
    }

    i64 num_ = 0;
    i64 den_ = 1;
};

}  // namespace scrollcalc

#endif
