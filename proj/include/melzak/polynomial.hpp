#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials with exact rational coefficients.
 *
 * coefficients()[r] is the coefficient of t^r. The zero polynomial has no
 * coefficients; otherwise the last coefficient is nonzero. Every
 * constructor and operation re-establishes that invariant, so two equal
 * polynomials always have identical coefficient vectors.
 */

#include "rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace melzak {

class Polynomial {
    std::vector<Rational> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
    explicit Polynomial(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    /// Constant polynomial c (the zero polynomial when c == 0).
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or std::nullopt for the zero polynomial.
    std::optional<NaturalIndex> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Coefficient of t^r (zero beyond the stored range).
    Rational operator[](NaturalIndex r) const { return r < coeffs_.size() ? coeffs_[r] : Rational(0); }

    Rational leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    /// Horner evaluation.
    Rational operator()(const Rational& t) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    Polynomial derivative() const {
        std::vector<Rational> d;
        for (NaturalIndex r = 1; r < coeffs_.size(); ++r) d.push_back(coeffs_[r] * Rational(r));
        return Polynomial(std::move(d));
    }

    /// p(t + s) as a polynomial in t.
    Polynomial shifted(const Rational& s) const {
        // Horner in the polynomial ring: acc <- acc * (t + s) + c
        Polynomial acc;
        const Polynomial linear({s, Rational(1)});
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * linear + Polynomial::constant(*it);
        return acc;
    }

    Polynomial operator-() const {
        std::vector<Rational> r(coeffs_);
        for (auto& c : r) c = -c;
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (NaturalIndex i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (NaturalIndex i = 0; i < a.coeffs_.size(); ++i)
            for (NaturalIndex k = 0; k < b.coeffs_.size(); ++k) r[i + k] += a.coeffs_[i] * b.coeffs_[k];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        std::vector<Rational> r(p.coeffs_);
        for (auto& c : r) c *= s;
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Ascending comma-separated coefficients, "0" for the zero polynomial.
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (NaturalIndex i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ',';
            out += coeffs_[i].to_string();
        }
        return out;
    }

    static Polynomial parse(std::string_view text) {
        if (text.empty()) throw ParseError("empty polynomial");
        std::vector<Rational> cs;
        std::size_t start = 0;
        while (true) {
            auto comma = text.find(',', start);
            cs.push_back(Rational::parse(text.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return Polynomial(std::move(cs));
    }
};

/// t^r with unit leading coefficient.
inline Polynomial monomial(NaturalIndex r) {
    std::vector<Rational> cs(r + 1);
    cs[r] = Rational(1);
    return Polynomial(std::move(cs));
}

inline Rational poly_eval(const Polynomial& f, const Rational& t) { return f(t); }

}  // namespace melzak
