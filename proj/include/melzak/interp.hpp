#pragma once

/**
 * @file interp.hpp
 * @brief Exact Lagrange interpolation and partial fractions over distinct knots.
 *
 * Two sign conventions live side by side here and are easy to mix up:
 *
 *   omega_prime_at(knots, i)  = prod_{v != i} (x_i - x_v)
 *   partial_fractions residue = 1 / prod_{v != i} (x_v - x_i)
 *
 * so residue_i * omega_prime_at(i) = (-1)^j for j+1 knots.
 */

#include "errors.hpp"
#include "polynomial.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace melzak {

/// Non-empty ordered list of pairwise distinct rationals.
class KnotSet {
    std::vector<Rational> knots_;

public:
    explicit KnotSet(std::vector<Rational> knots) : knots_(std::move(knots)) {
        if (knots_.empty()) throw std::invalid_argument("knot set must be non-empty");
        for (NaturalIndex a = 0; a < knots_.size(); ++a)
            for (NaturalIndex b = a + 1; b < knots_.size(); ++b)
                if (knots_[a] == knots_[b])
                    throw DuplicateKnotError("duplicate knot " + knots_[a].to_string() + " at indices " +
                                             std::to_string(a) + " and " + std::to_string(b));
    }

    KnotSet(std::initializer_list<Rational> knots) : KnotSet(std::vector<Rational>(knots)) {}

    /// The knots {0, -1, ..., -n}.
    static KnotSet negative_integers(NaturalIndex n) {
        std::vector<Rational> ks;
        for (NaturalIndex k = 0; k <= n; ++k) ks.push_back(-Rational(k));
        return KnotSet(std::move(ks));
    }

    static KnotSet parse(std::string_view text) {
        if (text.empty()) throw ParseError("empty knot list");
        std::vector<Rational> ks;
        std::size_t start = 0;
        while (true) {
            auto comma = text.find(',', start);
            ks.push_back(Rational::parse(text.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return KnotSet(std::move(ks));
    }

    std::span<const Rational> knots() const { return knots_; }
    NaturalIndex size() const { return knots_.size(); }
    const Rational& operator[](NaturalIndex i) const { return knots_.at(i); }

    std::string to_string() const {
        std::string out;
        for (NaturalIndex i = 0; i < knots_.size(); ++i) {
            if (i) out += ',';
            out += knots_[i].to_string();
        }
        return out;
    }

    friend bool operator==(const KnotSet&, const KnotSet&) = default;
};

struct ResidueDecomposition {
    KnotSet knots;
    std::vector<Rational> residues;
};

/// prod_v (t - x_v), monic of degree size().
inline Polynomial omega(const KnotSet& knots) {
    Polynomial acc = Polynomial::constant(Rational(1));
    for (const auto& x : knots.knots()) acc = acc * Polynomial({-x, Rational(1)});
    return acc;
}

/// omega'(x_i) = prod_{v != i} (x_i - x_v).
inline Rational omega_prime_at(const KnotSet& knots, NaturalIndex i) {
    const Rational& xi = knots[i];
    Rational acc(1);
    for (NaturalIndex v = 0; v < knots.size(); ++v)
        if (v != i) acc *= xi - knots[v];
    return acc;
}

/// L(t) = omega(t) sum_k values[k] / ((t - x_k) omega'(x_k)).
///
/// At a knot the removable singularity is skipped and the stored value returned.
inline Rational lagrange_eval(const KnotSet& knots, std::span<const Rational> values, const Rational& t) {
    if (values.size() != knots.size())
        throw std::invalid_argument("lagrange_eval: " + std::to_string(values.size()) + " values for " +
                                    std::to_string(knots.size()) + " knots");
    for (NaturalIndex k = 0; k < knots.size(); ++k)
        if (knots[k] == t) return values[k];

    Rational sum(0);
    for (NaturalIndex k = 0; k < knots.size(); ++k)
        sum += values[k] / ((t - knots[k]) * omega_prime_at(knots, k));
    return omega(knots)(t) * sum;
}

/// Coefficient form of the interpolant via Newton divided differences.
inline Polynomial lagrange_coeffs(const KnotSet& knots, std::span<const Rational> values) {
    const NaturalIndex m = knots.size();
    if (values.size() != m)
        throw std::invalid_argument("lagrange_coeffs: " + std::to_string(values.size()) + " values for " +
                                    std::to_string(m) + " knots");

    // In-place divided-difference table; dd[i] ends as f[x_0, ..., x_i].
    std::vector<Rational> dd(values.begin(), values.end());
    for (NaturalIndex level = 1; level < m; ++level)
        for (NaturalIndex i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (knots[i] - knots[i - level]);

    // Nested Newton form: dd[0] + (t - x_0)(dd[1] + (t - x_1)(dd[2] + ...)).
    Polynomial acc = Polynomial::constant(dd[m - 1]);
    for (NaturalIndex i = m - 1; i-- > 0;)
        acc = acc * Polynomial({-knots[i], Rational(1)}) + Polynomial::constant(dd[i]);
    return acc;
}

/// 1 / prod_v (k + x_v) = sum_i c_i / (k + x_i) with c_i = 1 / prod_{v != i} (x_v - x_i).
inline ResidueDecomposition partial_fractions(const KnotSet& knots) {
    std::vector<Rational> residues;
    residues.reserve(knots.size());
    for (NaturalIndex i = 0; i < knots.size(); ++i) {
        Rational denom(1);
        for (NaturalIndex v = 0; v < knots.size(); ++v)
            if (v != i) denom *= knots[v] - knots[i];
        residues.push_back(Rational(1) / denom);
    }
    return {knots, std::move(residues)};
}

/// Melzak's closed form computed by interpolating g(t) = f(t + y) at the
/// knots 0, -1, ..., -n and evaluating the interpolant at t = x.
inline Rational melzak_via_lagrange(const Polynomial& f, const Rational& x, const Rational& y, NaturalIndex n) {
    const KnotSet knots = KnotSet::negative_integers(n);
    for (NaturalIndex k = 0; k <= n; ++k)
        if (x == knots[k]) throw PoleError(k, std::nullopt, "x + k = 0");
    std::vector<Rational> values;
    values.reserve(n + 1);
    for (NaturalIndex k = 0; k <= n; ++k) values.push_back(f(y - Rational(k)));
    return lagrange_eval(knots, values, x);
}

}  // namespace melzak
