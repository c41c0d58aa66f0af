#pragma once

// Generalized binomial coefficients and the order-n forward difference.

#include "polynomial.hpp"

namespace melzak {

/// C(x, n) = x (x-1) ... (x-n+1) / n! for any rational x; C(x, 0) = 1.
inline Rational binomial_general(const Rational& x, NaturalIndex n) {
    Rational acc(1);
    for (NaturalIndex i = 1; i <= n; ++i) acc *= (x - Rational(i - 1)) / Rational(i);
    return acc;
}

/// sum_{k=0..n} (-1)^k C(n,k) p(k).
///
/// Zero whenever deg p < n, and (-1)^n n! lead(p) when deg p == n.
inline Rational alternating_difference(const Polynomial& p, NaturalIndex n) {
    Rational acc(0);
    for (NaturalIndex k = 0; k <= n; ++k) {
        Rational term = binomial(n, k) * p(Rational(k));
        if (k % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

}  // namespace melzak
