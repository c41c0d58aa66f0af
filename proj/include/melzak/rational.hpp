#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals.
 *
 * Thin value type over GMP's mpq_class. Every constructor and every
 * arithmetic result is kept in canonical form (positive denominator,
 * coprime numerator/denominator), so operator== is structural equality
 * and to_string() is reproducible bit-for-bit.
 *
 * Text format: "p/q" or "p", optional leading minus, no whitespace.
 */

#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace melzak {

/// Summation bounds, degrees and knot counts.
using NaturalIndex = std::size_t;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Rational {
    mpq_class value_;

    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

public:
    Rational() : value_(0) {}
    Rational(int v) : value_(v) {}                 // NOLINT(google-explicit-constructor)
    Rational(long v) : value_(v) {}                // NOLINT(google-explicit-constructor)
    Rational(long long v) : value_(mpz_class(std::to_string(v))) {}  // NOLINT
    Rational(unsigned long v) : value_(v) {}       // NOLINT(google-explicit-constructor)
    Rational(unsigned long long v) : value_(mpz_class(std::to_string(v))) {}  // NOLINT

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    static Rational from_mpq(const mpq_class& q) { return Rational(mpq_class(q)); }

    /// Exact value of a finite binary64 (every finite double is a dyadic rational).
    static Rational from_double(double d) {
        if (!std::isfinite(d))
            throw std::domain_error("non-finite double has no rational value");
        mpq_class q;
        mpq_set_d(q.get_mpq_t(), d);
        return Rational(q);
    }

    /// Parses "p/q" or "p". Rejects whitespace, a plus sign, empty parts,
    /// a zero or negative denominator, and anything else.
    static Rational parse(std::string_view text) {
        auto bad = [&] { return ParseError("malformed rational \"" + std::string(text) + "\""); };
        auto digits_only = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view body = text;
        bool negative = false;
        if (!body.empty() && body.front() == '-') {
            negative = true;
            body.remove_prefix(1);
        }
        auto slash = body.find('/');
        std::string_view num = body.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : body.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) throw bad();
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw bad();
        if (negative) n = -n;
        return Rational(n, d);
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    std::string to_string() const { return value_.get_str(10); }

    /// Correctly rounded (round-to-nearest-even) binary64 value.
    double to_double() const {
        mpfr_t tmp;
        mpfr_init2(tmp, 53);
        mpfr_set_q(tmp, value_.get_mpq_t(), MPFR_RNDN);
        double d = mpfr_get_d(tmp, MPFR_RNDN);
        mpfr_clear(tmp);
        return d;
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
};

inline Rational pow(Rational base, NaturalIndex exponent) {
    Rational result(1);
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

inline Rational factorial(NaturalIndex n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r, mpz_class(1));
}

/// Ordinary binomial coefficient C(n, k) for natural arguments; 0 when k > n.
inline Rational binomial(NaturalIndex n, NaturalIndex k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r, mpz_class(1));
}

}  // namespace melzak
