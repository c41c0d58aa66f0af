#pragma once

/**
 * @file floatlab.hpp
 * @brief Cancellation in binary64 evaluation of Melzak's alternating sum.
 *
 * Each exact ingredient (C(n,k), f(y-k), x+k, the prefactor x C(x+n,n),
 * x+y) is rounded to binary64 exactly once, when it enters the float
 * computation. Summation runs k = 0..n ascending. Errors are measured
 * against the exact rational value, in exact arithmetic, and rounded once.
 */

#include "identity.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace melzak {

struct FloatReport {
    MelzakInstance instance;
    std::string precision = "binary64";
    double direct_value = 0.0;
    double compensated_value = 0.0;
    double closed_form_value = 0.0;
    Rational exact_value;
    double rel_err_direct = 0.0;
    double rel_err_compensated = 0.0;
    double rel_err_closed = 0.0;
    double condition_number = 0.0;
};

namespace detail {

inline double checked(double v, const char* what) {
    if (!std::isfinite(v)) throw OverflowToInfinity(std::string("binary64 overflow in ") + what);
    return v;
}

/// Signed binary64 terms (-1)^k C(n,k) f(y-k) / (x+k), k ascending.
inline std::vector<double> float_terms(const MelzakInstance& inst) {
    check_poles(inst.x, inst.n);
    std::vector<double> terms;
    terms.reserve(inst.n + 1);
    for (NaturalIndex k = 0; k <= inst.n; ++k) {
        const Rational kk(k);
        const double c = checked(binomial(inst.n, k).to_double(), "C(n,k)");
        const double fv = checked(inst.f(inst.y - kk).to_double(), "f(y-k)");
        const double den = checked((inst.x + kk).to_double(), "x+k");
        double t = checked(c * fv, "term") / den;
        terms.push_back(checked(k % 2 ? -t : t, "term"));
    }
    return terms;
}

inline double float_prefactor(const MelzakInstance& inst) {
    return checked((inst.x * binomial_general(inst.x + Rational(inst.n), inst.n)).to_double(), "x C(x+n,n)");
}

/// |approx - exact| / |exact|, exact until the final rounding.
inline double relative_error(double approx, const Rational& exact) {
    return ((Rational::from_double(approx) - exact).abs() / exact.abs()).to_double();
}

}  // namespace detail

/// Naive left-to-right binary64 evaluation of x C(x+n,n) sum_k term_k.
inline double float_sum_direct(const MelzakInstance& inst) {
    const auto terms = detail::float_terms(inst);
    double acc = 0.0;
    for (double t : terms) acc = detail::checked(acc + t, "running sum");
    return detail::checked(detail::float_prefactor(inst) * acc, "prefactor product");
}

/// As float_sum_direct, accumulated with Neumaier's compensated summation.
inline double float_sum_compensated(const MelzakInstance& inst) {
    const auto terms = detail::float_terms(inst);
    double sum = 0.0;
    double comp = 0.0;
    for (double t : terms) {
        const double s = detail::checked(sum + t, "running sum");
        if (std::fabs(sum) >= std::fabs(t)) comp += (sum - s) + t;
        else comp += (t - s) + sum;
        sum = s;
    }
    return detail::checked(detail::float_prefactor(inst) * (sum + comp), "prefactor product");
}

/// f(x+y) by binary64 Horner; no cancellation from the alternating sum.
inline double float_closed_form(const MelzakInstance& inst) {
    const double t = detail::checked((inst.x + inst.y).to_double(), "x+y");
    const auto& cs = inst.f.coefficients();
    double acc = 0.0;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * t + it->to_double();
    return detail::checked(acc, "Horner");
}

/// (sum_k |term_k|) / |sum_k term_k| with exact terms, rounded once.
inline double condition_number(const MelzakInstance& inst) {
    check_poles(inst.x, inst.n);
    Rational abs_sum(0);
    Rational sum(0);
    for (NaturalIndex k = 0; k <= inst.n; ++k) {
        const Rational kk(k);
        Rational term = binomial(inst.n, k) * inst.f(inst.y - kk) / (inst.x + kk);
        if (k % 2) term = -term;
        abs_sum += term.abs();
        sum += term;
    }
    if (sum.is_zero()) throw std::invalid_argument("condition number undefined: alternating sum is zero");
    return (abs_sum / sum.abs()).to_double();
}

inline FloatReport stability_report(const MelzakInstance& inst) {
    check_poles(inst.x, inst.n);
    if (inst.f.degree().value_or(0) > inst.n)
        throw std::invalid_argument("stability_report requires deg f <= n (deg f = " +
                                    std::to_string(*inst.f.degree()) + ", n = " + std::to_string(inst.n) + ")");
    FloatReport r;
    r.instance = inst;
    r.exact_value = inst.f(inst.x + inst.y);
    if (r.exact_value != melzak_closed_form(inst))
        throw std::logic_error("exact sides of Melzak's identity disagree for " + inst.f.to_string());
    if (r.exact_value.is_zero())
        throw std::invalid_argument("relative error undefined: f(x+y) = 0");

    r.direct_value = float_sum_direct(inst);
    r.compensated_value = float_sum_compensated(inst);
    r.closed_form_value = float_closed_form(inst);
    r.rel_err_direct = detail::relative_error(r.direct_value, r.exact_value);
    r.rel_err_compensated = detail::relative_error(r.compensated_value, r.exact_value);
    r.rel_err_closed = detail::relative_error(r.closed_form_value, r.exact_value);
    r.condition_number = condition_number(inst);
    return r;
}

}  // namespace melzak
