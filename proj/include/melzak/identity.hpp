#pragma once

/**
 * @file identity.hpp
 * @brief Both sides of Melzak's identity and of its multi-pole generalization.
 *
 * Melzak's identity, for deg f <= n and x not in {0, -1, ..., -n}:
 *
 *   f(x + y) = x C(x+n, n) sum_{k=0..n} (-1)^k C(n,k) f(y - k) / (x + k)
 *
 * Generalization, for pairwise distinct x_0..x_j (none in {0, ..., -n})
 * and deg f <= n + j:
 *
 *   sum_k (-1)^k C(n,k) f(y - k) / prod_i (x_i + k)
 *     = sum_i f(y + x_i) / (x_i C(x_i+n, n) prod_{v != i} (x_v - x_i))
 *
 * Everything is exact; a report "holds" iff the residual is exactly zero.
 */

#include "binomial.hpp"
#include "errors.hpp"
#include "interp.hpp"

#include <variant>

namespace melzak {

struct MelzakInstance {
    Polynomial f;
    Rational x;
    Rational y;
    NaturalIndex n = 0;
};

struct GeneralizedInstance {
    Polynomial f;
    KnotSet knots;
    Rational y;
    NaturalIndex n = 0;
};

enum class IdentityKind { melzak, generalized };

struct IdentityReport {
    IdentityKind kind = IdentityKind::melzak;
    std::variant<MelzakInstance, GeneralizedInstance> instance;
    Rational lhs;
    Rational rhs;
    Rational residual;
    bool holds = false;
    NaturalIndex degree_bound = 0;
};

/// Throws PoleError for the first k in 0..n with x + k == 0.
inline void check_poles(const Rational& x, NaturalIndex n, std::optional<NaturalIndex> knot = std::nullopt) {
    // x + k == 0 only for integer x in [-n, 0]
    if (!x.is_integer() || x.sign() > 0) return;
    const Rational k = -x;
    if (k <= Rational(n)) throw PoleError(static_cast<NaturalIndex>(k.numerator().get_ui()), knot, "x + k = 0");
}

inline void check_poles(const GeneralizedInstance& inst) {
    for (NaturalIndex i = 0; i < inst.knots.size(); ++i) check_poles(inst.knots[i], inst.n, i);
}

/// sum_{k=0..n} (-1)^k C(n,k) f(y-k) / (x+k).
inline Rational melzak_sum(const MelzakInstance& inst) {
    check_poles(inst.x, inst.n);
    Rational acc(0);
    for (NaturalIndex k = 0; k <= inst.n; ++k) {
        const Rational kk(k);
        Rational term = binomial(inst.n, k) * inst.f(inst.y - kk) / (inst.x + kk);
        if (k % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

/// x C(x+n, n) melzak_sum(inst); equals f(x+y) when deg f <= n.
inline Rational melzak_closed_form(const MelzakInstance& inst) {
    const Rational s = melzak_sum(inst);
    return inst.x * binomial_general(inst.x + Rational(inst.n), inst.n) * s;
}

/// sum_{k=0..n} (-1)^k C(n,k) / (x+k) = 1 / (x C(x+n, n)).
inline Rational reciprocal_beta_sum(const Rational& x, NaturalIndex n) {
    return melzak_sum({Polynomial::constant(Rational(1)), x, Rational(0), n});
}

inline IdentityReport verify_melzak(const MelzakInstance& inst) {
    IdentityReport r;
    r.kind = IdentityKind::melzak;
    r.instance = inst;
    r.lhs = inst.f(inst.x + inst.y);
    r.rhs = melzak_closed_form(inst);
    r.residual = r.lhs - r.rhs;
    r.holds = r.residual.is_zero();
    r.degree_bound = inst.n;
    return r;
}

inline Rational generalized_lhs(const GeneralizedInstance& inst) {
    check_poles(inst);
    Rational acc(0);
    for (NaturalIndex k = 0; k <= inst.n; ++k) {
        const Rational kk(k);
        Rational denom(1);
        for (const auto& xi : inst.knots.knots()) denom *= xi + kk;
        Rational term = binomial(inst.n, k) * inst.f(inst.y - kk) / denom;
        if (k % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

inline Rational generalized_rhs(const GeneralizedInstance& inst) {
    Rational acc(0);
    const auto& knots = inst.knots;
    for (NaturalIndex i = 0; i < knots.size(); ++i) {
        const Rational& xi = knots[i];
        Rational denom = xi * binomial_general(xi + Rational(inst.n), inst.n);
        if (denom.is_zero()) {
            // x_i C(x_i+n, n) vanishes exactly at x_i = -k for some k in 0..n
            check_poles(xi, inst.n, i);
            throw PoleError(0, i, "x_i C(x_i+n, n) = 0");
        }
        for (NaturalIndex v = 0; v < knots.size(); ++v)
            if (v != i) denom *= knots[v] - xi;
        acc += inst.f(inst.y + xi) / denom;
    }
    return acc;
}

inline IdentityReport verify_generalized(const GeneralizedInstance& inst) {
    IdentityReport r;
    r.kind = IdentityKind::generalized;
    r.instance = inst;
    r.lhs = generalized_lhs(inst);
    r.rhs = generalized_rhs(inst);
    r.residual = r.lhs - r.rhs;
    r.holds = r.residual.is_zero();
    r.degree_bound = inst.n + inst.knots.size() - 1;
    return r;
}

}  // namespace melzak
