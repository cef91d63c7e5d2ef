#pragma once

// Exact rational arithmetic on arbitrary-precision integers.
//
// Invariants: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
// Every value the library reports is one of these; doubles appear only in
// opt-in rendering.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lambdafn {

using BigInt = boost::multiprecision::cpp_int;

// Floor division for possibly negative numerators (den > 0).
inline BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    if (num % den != 0 && (num < 0) != (den < 0)) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& num, const BigInt& den) {
    return -floor_div(-num, den);
}

inline BigInt pow_int(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    for (unsigned e = exp; e != 0; e >>= 1) {
        if (e & 1u) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}           // NOLINT(google-explicit-constructor)
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}   // NOLINT(google-explicit-constructor)
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    std::strong_ordering operator<=>(const Rational& o) const {
        BigInt lhs = num_ * o.den_, rhs = o.num_ * den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // "num/den" (or just "num" when integral).
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // Fixed-point decimal with `digits` fractional digits, exact round-half-up.
    std::string to_decimal(unsigned digits = 15) const {
        BigInt scale = pow_int(10, digits);
        BigInt q = floor_div(num_ * scale * 2 + den_, den_ * 2);
        bool neg = q < 0;
        BigInt a = neg ? BigInt(-q) : q;
        std::string ds = a.str();
        if (ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
        ds.insert(ds.size() - digits, ".");
        return (neg ? "-" : "") + ds;
    }

    // Parses "num", "num/den", or a plain decimal like "-0.125".
    static Rational parse(std::string_view text) {
        auto bad = [&] {
            return std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        };
        if (text.empty()) throw bad();
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash != std::string::npos) {
                BigInt n(s.substr(0, slash));
                BigInt d(s.substr(slash + 1));
                if (d == 0) throw bad();
                return Rational(n, d);
            }
            auto dot = s.find('.');
            if (dot == std::string::npos) return Rational(BigInt(s));
            std::string frac = s.substr(dot + 1);
            BigInt whole(s.substr(0, dot).empty() || s.substr(0, dot) == "-"
                             ? s.substr(0, dot) + "0"
                             : s.substr(0, dot));
            BigInt fnum = frac.empty() ? BigInt(0) : BigInt(frac);
            BigInt fden = pow_int(10, static_cast<unsigned>(frac.size()));
            bool neg = !s.empty() && s[0] == '-';
            Rational r = Rational(whole) + (neg ? -Rational(fnum, fden) : Rational(fnum, fden));
            return r;
        } catch (const std::runtime_error&) {
            throw bad();
        }
    }

private:
    struct unchecked {};
    Rational(unchecked, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ == 0) { den_ = 1; return; }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational operator+(long long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

} // namespace lambdafn
