#pragma once

/**
 * @file exactmath.hpp
 * @brief Exact integers, rationals and the special number sequences
 *
 * BigInt is GMP's mpz_class. Rational wraps mpq_class and is kept in
 * lowest terms with a positive denominator at all times, so equality is
 * structural and the "num/den" text form is canonical.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace riderlab {

using BigInt = mpz_class;

class Rational {
    mpq_class value_;

    explicit Rational(mpq_class v) : value_(std::move(v)) {}

public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT: implicit by design of arithmetic types

    Rational(const BigInt& v) : value_(v) {}  // NOLINT

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    template <std::integral A, std::integral B>
    Rational(A num, B den) : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

    /// Parses "p/q" or "p" (optional leading sign, no whitespace, no decimals).
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Canonical "num/den" form; integers render as "k/1".
    std::string to_string() const;
    /// Human form: integers without "/1".
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.value_ == 0) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt factorial(unsigned n);
/// Binomial coefficient C(n, k) for any integer n (upper negation for n < 0), 0 for k < 0.
BigInt binomial(long n, long k);
/// Falling factorial (x)_k = x(x-1)...(x-k+1).
Rational falling_factorial(const Rational& x, unsigned k);

/// Fibonacci numbers indexed so that F_0 = F_1 = 1.
BigInt fib(unsigned i);

/// Signed Stirling number of the first kind s(n,k); zero outside 0 <= k <= n.
BigInt stirling_first(unsigned n, long k);

/// Stirling number of the second kind S(n,k); zero outside 0 <= k <= n.
BigInt stirling_second(unsigned n, long k);

/// Elementary symmetric polynomial e_q(1, 2, ..., n).
BigInt elem_sym(unsigned q, unsigned n);

}  // namespace riderlab

template <>
struct std::hash<riderlab::Rational> {
    std::size_t operator()(const riderlab::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.to_string());
    }
};
