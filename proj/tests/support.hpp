#pragma once

#include "oracle.hpp"

#include <melzak/polynomial.hpp>

#include <vector>

namespace testing_support {

inline melzak::Rational R(const char* text) { return melzak::Rational::parse(text); }

inline melzak::Polynomial P(const char* text) { return melzak::Polynomial::parse(text); }

inline oracle::Q q(const melzak::Rational& r) { return r.mpq(); }

inline melzak::Rational from_q(const oracle::Q& v) { return melzak::Rational::from_mpq(v); }

inline oracle::Coeffs coeffs(const melzak::Polynomial& p) {
    oracle::Coeffs c;
    for (const auto& r : p.coefficients()) c.push_back(r.mpq());
    return c;
}

}  // namespace testing_support
