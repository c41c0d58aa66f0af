#include "support.hpp"

#include <melzak/campaign.hpp>
#include <melzak/identity.hpp>

#include <gtest/gtest.h>

using namespace melzak;
using testing_support::coeffs;
using testing_support::P;
using testing_support::q;
using testing_support::R;

TEST(MelzakSum, Examples) {
    EXPECT_EQ(melzak_sum({P("0,0,1"), Rational(1), Rational(0), 2}), R("1/3"));
    EXPECT_EQ(q(R("1/3")), oracle::melzak_sum({0, 0, 1}, 1, 0, 2));
    EXPECT_EQ(melzak_sum({P("7/2"), R("-3/5"), R("9"), 0}), R("7/2") / R("-3/5"));
    EXPECT_EQ(melzak_sum({P("1"), Rational(1), R("-4/9"), 2}), R("1/3"));
    EXPECT_EQ(melzak_sum({P("1"), Rational(1), R("5"), 2}), reciprocal_beta_sum(Rational(1), 2));
}

TEST(MelzakSum, PoleNamesK) {
    try {
        melzak_sum({P("0,0,1"), Rational(-2), Rational(0), 3});
        FAIL() << "expected PoleError";
    } catch (const PoleError& e) {
        EXPECT_EQ(e.k(), 2U);
        EXPECT_FALSE(e.knot().has_value());
    }
    EXPECT_THROW(melzak_sum({P("1"), Rational(0), Rational(0), 0}), PoleError);
    // -3 is not a pole when n = 2
    EXPECT_NO_THROW(melzak_sum({P("1"), Rational(-3), Rational(0), 2}));
}

TEST(MelzakClosedForm, Examples) {
    EXPECT_EQ(melzak_closed_form({P("0,0,1"), Rational(1), Rational(0), 2}), Rational(1));
    EXPECT_EQ(melzak_closed_form({P("-8/3"), R("5/4"), R("1/2"), 0}), R("-8/3"));
    const MelzakInstance linear{P("0,1"), R("1/2"), Rational(1), 3};
    EXPECT_EQ(melzak_sum(linear) * linear.x * binomial_general(linear.x + 3, 3), R("3/2"));
    EXPECT_EQ(melzak_closed_form(linear), R("3/2"));
    EXPECT_EQ(q(melzak_closed_form(linear)), oracle::eval({0, 1}, oracle::Q(3, 2)));
}

TEST(ReciprocalBetaSum, Examples) {
    EXPECT_EQ(reciprocal_beta_sum(Rational(1), 0), Rational(1));
    EXPECT_EQ(reciprocal_beta_sum(Rational(1), 1), R("1/2"));
    EXPECT_EQ(reciprocal_beta_sum(Rational(1), 2), R("1/3"));
    EXPECT_THROW(reciprocal_beta_sum(Rational(-1), 1), PoleError);
}

TEST(ReciprocalBetaSum, ClosedFormIdentity) {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const NaturalIndex n = rng.index(12);
        Rational x = rng.rational(9);
        if (has_pole(x, n)) continue;
        EXPECT_EQ(reciprocal_beta_sum(x, n) * x * binomial_general(x + Rational(n), n), Rational(1));
    }
}

TEST(VerifyMelzak, Examples) {
    auto ok = verify_melzak({P("0,0,1"), Rational(1), Rational(0), 2});
    EXPECT_TRUE(ok.holds);
    EXPECT_TRUE(ok.residual.is_zero());
    EXPECT_EQ(ok.degree_bound, 2U);
    EXPECT_EQ(ok.kind, IdentityKind::melzak);

    const MelzakInstance cubic{P("0,0,0,1"), Rational(1), Rational(0), 2};
    auto bad = verify_melzak(cubic);
    EXPECT_FALSE(bad.holds);
    EXPECT_EQ(q(bad.lhs), oracle::eval({0, 0, 0, 1}, 1));
    EXPECT_EQ(q(bad.rhs), oracle::Q(1) * oracle::general_binomial(3, 2) * oracle::melzak_sum({0, 0, 0, 1}, 1, 0, 2));
    EXPECT_EQ(bad.residual, bad.lhs - bad.rhs);

    auto zero = verify_melzak({Polynomial(), R("3/7"), R("-1/2"), 4});
    EXPECT_TRUE(zero.holds);
    EXPECT_TRUE(zero.lhs.is_zero());
    EXPECT_TRUE(zero.rhs.is_zero());
}

TEST(VerifyMelzak, HoldsOnRandomInDegreeInstances) {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = random_melzak_instance(rng, 10, 9);
        const auto r = verify_melzak(inst);
        EXPECT_TRUE(r.holds) << inst.f.to_string() << " x=" << inst.x.to_string() << " y=" << inst.y.to_string()
                             << " n=" << inst.n;
        // sum side against the brute-force oracle
        EXPECT_EQ(q(melzak_sum(inst)), oracle::melzak_sum(coeffs(inst.f), inst.x.mpq(), inst.y.mpq(), inst.n));
    }
}

TEST(VerifyMelzak, DegreeSharpness) {
    for (NaturalIndex n = 0; n <= 6; ++n) {
        bool failed = false;
        Rng rng(100 + n);
        for (int trial = 0; trial < 50 && !failed; ++trial) {
            const Rational x = rng.rational(9);
            if (has_pole(x, n)) continue;
            failed = !verify_melzak({monomial(n + 1), x, rng.rational(9), n}).holds;
        }
        EXPECT_TRUE(failed) << "n=" << n;
    }
}

TEST(MelzakSum, LinearInF) {
    Rng rng(21);
    for (int trial = 0; trial < 80; ++trial) {
        const auto inst = random_melzak_instance(rng, 8, 9);
        const auto g = rng.polynomial(rng.index(8), 9);
        const Rational a = rng.rational(9), b = rng.rational(9);
        MelzakInstance combo = inst;
        combo.f = a * inst.f + b * g;
        MelzakInstance with_g = inst;
        with_g.f = g;
        EXPECT_EQ(melzak_sum(combo), a * melzak_sum(inst) + b * melzak_sum(with_g));
    }
}

TEST(MelzakClosedForm, ShiftCovariance) {
    Rng rng(77);
    for (int trial = 0; trial < 80; ++trial) {
        const auto inst = random_melzak_instance(rng, 8, 9);
        const Rational s = rng.rational(9);
        // f_s(t) = f(t + s) evaluated at y - s - k equals f(y - k)
        MelzakInstance shifted{inst.f.shifted(s), inst.x, inst.y - s, inst.n};
        EXPECT_EQ(melzak_closed_form(shifted), melzak_closed_form(inst));
        EXPECT_EQ(verify_melzak(shifted).holds, verify_melzak(inst).holds);
    }
}

TEST(Generalized, Examples) {
    const GeneralizedInstance two{P("0,1"), KnotSet{Rational(1), Rational(2)}, Rational(0), 1};
    EXPECT_EQ(generalized_lhs(two), R("1/6"));
    EXPECT_EQ(generalized_rhs(two), R("1/6"));
    EXPECT_EQ(q(generalized_lhs(two)), oracle::generalized_lhs({0, 1}, {1, 2}, 0, 1));
    EXPECT_EQ(q(generalized_rhs(two)), oracle::generalized_rhs({0, 1}, {1, 2}, 0, 1));

    const GeneralizedInstance zero{Polynomial(), KnotSet{R("1/2"), R("3")}, R("2/3"), 3};
    EXPECT_TRUE(generalized_lhs(zero).is_zero());
    EXPECT_TRUE(generalized_rhs(zero).is_zero());

    EXPECT_EQ(generalized_lhs({P("1"), KnotSet{Rational(1)}, Rational(0), 1}), R("1/2"));
    EXPECT_EQ(generalized_lhs({P("1"), KnotSet{Rational(1)}, Rational(0), 1}), reciprocal_beta_sum(Rational(1), 1));

    // single knot: empty product over v != i
    const GeneralizedInstance single{P("2,0,1"), KnotSet{R("3/2")}, R("1/3"), 2};
    const Rational x0 = R("3/2");
    EXPECT_EQ(generalized_rhs(single), single.f(single.y + x0) / (x0 * binomial_general(x0 + 2, 2)));

    auto report = verify_generalized(two);
    EXPECT_TRUE(report.holds);
    EXPECT_EQ(report.degree_bound, 2U);
    EXPECT_EQ(report.kind, IdentityKind::generalized);
}

TEST(Generalized, PoleNamesKnotAndK) {
    const GeneralizedInstance bad{P("1"), KnotSet{Rational(2), Rational(-1)}, Rational(0), 3};
    try {
        generalized_lhs(bad);
        FAIL();
    } catch (const PoleError& e) {
        EXPECT_EQ(e.k(), 1U);
        EXPECT_EQ(e.knot(), 1U);
    }
    EXPECT_THROW(generalized_rhs(bad), PoleError);
    EXPECT_THROW(verify_generalized(bad), PoleError);
}

TEST(Generalized, SingleKnotCoincidesWithMelzak) {
    Rng rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        const auto m = random_melzak_instance(rng, 8, 9);
        const auto g = verify_generalized({m.f, KnotSet{m.x}, m.y, m.n});
        const auto r = verify_melzak(m);
        EXPECT_EQ(g.holds, r.holds);
        EXPECT_EQ(g.degree_bound, r.degree_bound);
        // lhs of the generalized form is the bare sum; scale by x C(x+n,n)
        const Rational scale = m.x * binomial_general(m.x + Rational(m.n), m.n);
        EXPECT_EQ(g.lhs * scale, r.rhs);
        EXPECT_EQ(g.rhs * scale, r.lhs);
    }
}

TEST(Generalized, HoldsUpToDegreeNPlusJ) {
    Rng rng(9001);
    for (int trial = 0; trial < 150; ++trial) {
        const auto inst = random_generalized_instance(rng, 8, 4, 9);
        const auto r = verify_generalized(inst);
        EXPECT_TRUE(r.holds) << inst.f.to_string() << " knots=" << inst.knots.to_string() << " n=" << inst.n;
        std::vector<oracle::Q> ks;
        for (const auto& k : inst.knots.knots()) ks.push_back(k.mpq());
        EXPECT_EQ(q(r.lhs), oracle::generalized_lhs(coeffs(inst.f), ks, inst.y.mpq(), inst.n));
        EXPECT_EQ(q(r.rhs), oracle::generalized_rhs(coeffs(inst.f), ks, inst.y.mpq(), inst.n));
    }
}

TEST(Generalized, FailsGenericallyAboveDegreeBound) {
    Rng rng(11);
    bool saw_failure = false;
    for (int trial = 0; trial < 20 && !saw_failure; ++trial) {
        auto inst = random_generalized_instance(rng, 4, 2, 9);
        inst.f = rng.polynomial(inst.n + inst.knots.size(), 9);  // degree n + j + 1
        saw_failure = !verify_generalized(inst).holds;
    }
    EXPECT_TRUE(saw_failure);
}

TEST(Generalized, PartialFractionReplay) {
    Rng rng(2718);
    for (int trial = 0; trial < 60; ++trial) {
        const auto inst = random_generalized_instance(rng, 6, 4, 9);
        const auto d = partial_fractions(inst.knots);
        Rational recombined(0);
        for (NaturalIndex i = 0; i < inst.knots.size(); ++i)
            recombined += d.residues[i] * melzak_sum({inst.f, inst.knots[i], inst.y, inst.n});
        EXPECT_EQ(generalized_lhs(inst), recombined);
    }
}
