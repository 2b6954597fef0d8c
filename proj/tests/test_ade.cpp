#include "atl/ade.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace atl;

namespace {

std::complex<double> to_c(const Cyclo& x) { return x.to_complex(); }

double sin_pi_d(double a, int n) { return std::sin(a * std::numbers::pi / n); }

}  // namespace

TEST(AdeCase, Parameters)
{
    const auto e6 = AdeCase::make("E6", 1);
    EXPECT_EQ(e6.d, 3);
    EXPECT_EQ(e6.delta, Cyclo::two_cos(24, 1));
    EXPECT_EQ(e6.omega.pow(3), Cyclo(1));
    EXPECT_EQ(e6.kappa.norm_squared(), Cyclo(1));
    EXPECT_EQ(e6.eta.pow(4), Cyclo(1));
    const auto e8 = AdeCase::make("e8", -1);
    EXPECT_EQ(e8.name, "E8");
    EXPECT_EQ(e8.omega, Cyclo::root(5, -1));
    EXPECT_THROW(AdeCase::make("E7", 1), std::invalid_argument);
    EXPECT_THROW(AdeCase::make("E6", 0), std::invalid_argument);
}

TEST(NullVector, ZeroNormAndRadical)
{
    for (const char* name : {"E6", "E8"})
        for (int branch : {1, -1}) {
            const auto c = AdeCase::make(name, branch);
            const auto nv = null_vector(c);
            EXPECT_EQ(nv.generator_terms, 2 * (c.d + 1));
            EXPECT_TRUE(null_norm(nv).is_zero()) << name << branch;
            EXPECT_TRUE(closed_form_norm(c.d, c.delta, c.kappa, c.eta, c.omega).is_zero());
            const auto rad = null_vector_in_radical(nv);
            EXPECT_EQ(rad.corank, 1u);
            EXPECT_TRUE(rad.annihilates);
            EXPECT_FALSE(nv.nu.terms.empty());
            const auto audit = skein_relation_audit(c);
            EXPECT_TRUE(audit.lowest_weight && audit.unit_norm && audit.rotation_eigen);
            EXPECT_TRUE(audit.null_relation && audit.caps_unit_length);
        }
}

TEST(NullVector, GramRankAtCriticalLevel)
{
    const auto nv = null_vector(AdeCase::make("E8", 1));
    const auto rad = null_vector_in_radical(nv);
    EXPECT_EQ(rad.dimension, 12u);
    EXPECT_EQ(rad.rank, 11u);
}

TEST(NullVectorProperty, NormMatchesClosedFormForOtherPhases)
{
    for (const char* name : {"E6", "E8"}) {
        const auto base = AdeCase::make(name, 1);
        for (int j = 0; j < 2 * base.n; j += 5) {
            auto c = base;
            c.kappa = Cyclo::root(2 * base.n, j);
            for (int e = 0; e <= c.d; ++e) {
                c.eta = Cyclo::root(c.d + 1, e);
                const auto nv = null_vector(c);
                const auto closed = closed_form_norm(c.d, c.delta, c.kappa, c.eta, c.omega);
                EXPECT_EQ(null_norm(nv), closed) << name << " j=" << j << " e=" << e;
            }
        }
    }
}

TEST(NullVectorProperty, PerturbedPhaseIsNotNull)
{
    auto c = AdeCase::make("E6", 1);
    c.kappa *= Cyclo::root(24, 1);
    const auto nv = null_vector(c);
    EXPECT_FALSE(null_norm(nv).is_zero());
    EXPECT_FALSE(null_vector_in_radical(nv).annihilates);
    EXPECT_EQ(null_norm(nv).sign(), Sign::positive);
}

TEST(E7, GramDeterminantsNonzero)
{
    const auto r = e7_obstruction();
    EXPECT_TRUE(r.all_nonzero);
    ASSERT_EQ(r.determinants.size(), 4u);
    const std::vector<double> expected{-2.3473, -0.347296, 1.6527, -0.347296};
    for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_FALSE(r.determinants[j].second.is_zero());
        EXPECT_NEAR(to_c(r.determinants[j].second).real(), expected[j], 1e-4) << j;
        EXPECT_NEAR(to_c(r.determinants[j].second).imag(), 0, 1e-9);
    }
    EXPECT_EQ(r.determinants[1].second, r.determinants[3].second.conj());
}

TEST(StarEquation, KnownCases)
{
    const auto e6 = star_equation(12, 3, 1, Cyclo::root(3, 1));
    ASSERT_TRUE(e6.solvable);
    EXPECT_EQ(*e6.z, Cyclo::root(24, 7));
    const auto e8 = star_equation(30, 5, 1, Cyclo::root(5, 1));
    ASSERT_TRUE(e8.solvable);
    EXPECT_EQ(*e8.z, Cyclo::root(60, 11));
    EXPECT_FALSE(star_equation(30, 4, 1, Cyclo::root(4, 1)).solvable);
    EXPECT_FALSE(star_equation(30, 4, 1, Cyclo::root(4, -1)).solvable);
    for (int j = 0; j < 3; ++j) {
        EXPECT_FALSE(star_equation(30, 3, 1, Cyclo::root(3, j)).solvable) << j;
        EXPECT_FALSE(star_equation(30, 3, 2, Cyclo::root(3, j)).solvable) << j;
    }
    EXPECT_FALSE(star_equation(30, 3, 1, Cyclo::root(3, 1)).z);
    EXPECT_THROW(star_equation(12, 5, 1, Cyclo(1)), std::domain_error);
    EXPECT_THROW(star_equation(0, 1, 1, Cyclo(1)), std::invalid_argument);
}

TEST(StarEquationProperty, AgreesWithFloatingModuli)
{
    for (int n : {8, 12, 18, 30})
        for (int k = 1; k <= 5; ++k)
            for (int r = 0; r <= 3; ++r)
                for (int j = 0; j < k; ++j) {
                    const int m = r + k;
                    if ((2 * m) % n == 0) continue;
                    const Cyclo omega = Cyclo::root(k, j);
                    const auto s = star_equation(n, k, r, omega);
                    const auto w = to_c(omega);
                    const double lhs = std::abs(sin_pi_d(2 * m, n));
                    const double rhs = std::abs(sin_pi_d(r, n) + w * sin_pi_d(r + 2 * k, n));
                    EXPECT_NEAR(to_c(s.lhs_modulus_squared).real(), lhs * lhs, 1e-12);
                    EXPECT_NEAR(to_c(s.rhs_modulus_squared).real(), rhs * rhs, 1e-12);
                    if (std::abs(lhs - rhs) > 1e-9) {
                        EXPECT_FALSE(s.solvable);
                    }
                    if (s.solvable) {
                        EXPECT_NEAR(std::abs(to_c(*s.z)), 1.0, 1e-12);
                        EXPECT_NEAR(std::abs(to_c(*s.z) * sin_pi_d(2 * m, n) - (sin_pi_d(r, n) + w * sin_pi_d(r + 2 * k, n))), 0, 1e-12);
                    }
                }
}

TEST(Kauffman, RootsAndTransferEigenvalue)
{
    const auto roots = kauffman_roots(12);
    ASSERT_EQ(roots.size(), 4u);
    for (const auto& a : roots) {
        const auto plus = transfer_eigenvalue(3, Cyclo::root(3, 1), a);
        const auto minus = transfer_eigenvalue(3, Cyclo::root(3, -1), a);
        EXPECT_EQ(plus.delta, Cyclo::two_cos(24, 1));
        EXPECT_NE(plus.modulus_matches, minus.modulus_matches);
        const auto b = biunitary_check(a, Cyclo::two_cos(24, 1));
        EXPECT_TRUE(b.inverse_ok && b.unitary && b.rotated_unitary);
    }
    EXPECT_THROW(biunitary_check(roots[0], Cyclo(2)), std::invalid_argument);
}

TEST(Euler, CountsAndRegions)
{
    // one disc of 4 points joined to 4 boundary points has no internal region
    EXPECT_TRUE(euler_counts(1, 4, 0, 2));
    EXPECT_FALSE(euler_counts(1, 4, 1, 2));
    EXPECT_EQ(euler_regions(2, 4, 2), 0);
    EXPECT_EQ(euler_regions(3, 6, 3), 0);
    // two discs of 6 points joined once: 10 boundary strings, k = 5, 11 strings
    EXPECT_EQ(euler_regions(3, 11, 5), 0);
    EXPECT_FALSE(euler_regions(3, 3, 1));
    EXPECT_FALSE(euler_regions(0, 1, 1));
    EXPECT_TRUE(euler_bound(3, 0, 3));
    EXPECT_FALSE(euler_bound(3, 1, 1));
}

TEST(Tangles, SmallCountsByHand)
{
    EXPECT_EQ(planar_tangle_census(1, 1, 1, false).tangles, 1u);
    const auto capped = planar_tangle_census(2, 1, 1, false);
    EXPECT_EQ(capped.tangles, 2u);
    EXPECT_EQ(capped.capped, 2u);
    EXPECT_EQ(planar_tangle_census(2, 2, 1, false).tangles, 1u);
    EXPECT_EQ(planar_tangle_census(1, 2, 2, false).tangles, 0u);
    EXPECT_THROW(planar_tangle_census(0, 1, 1, false), std::invalid_argument);
}

TEST(TanglesProperty, EveryTangleHasCapOrDoubleJoin)
{
    for (auto [p, k, discs] : {std::tuple{2, 2, 2}, {3, 3, 2}, {3, 2, 3}, {4, 3, 2}}) {
        const auto c = planar_tangle_census(p, k, discs, false);
        EXPECT_EQ(c.counterexamples, 0u);
        EXPECT_EQ(c.euler_failures, 0u);
        EXPECT_EQ(c.bound_failures, 0u);
        EXPECT_EQ(c.capped + c.double_joined, c.tangles) << p << k << discs;
        EXPECT_GT(c.tangles, 0u);
    }
    for (int discs : {2, 3}) {
        const auto c = planar_tangle_census(5, 5, discs, true);
        EXPECT_EQ(c.counterexamples, 0u);
        EXPECT_EQ(c.euler_failures, 0u);
    }
}

TEST(PsiSquare, RationalTraces)
{
    const auto r = psi_square_coefficients(Cyclo(mpq_class(1, 3)), Cyclo(mpq_class(2, 3)));
    ASSERT_TRUE(r.x && r.y);
    EXPECT_EQ(*r.x * *r.x, Cyclo(2));
    EXPECT_EQ(r.x->sign(), Sign::positive);
    const Cyclo t1(mpq_class(1, 3)), t2(mpq_class(2, 3));
    EXPECT_TRUE((*r.x * t1 + *r.y * t2).is_zero());
    EXPECT_EQ(*r.x * *r.x * t1 + *r.y * *r.y * t2, Cyclo(1));
    EXPECT_LE(r.x_lower * r.x_lower, 2);
    EXPECT_GE(r.x_upper * r.x_upper, 2);
    const auto sym = psi_square_coefficients(Cyclo(mpq_class(1, 2)), Cyclo(mpq_class(1, 2)));
    EXPECT_EQ(*sym.a, Cyclo(0));
    EXPECT_EQ(*sym.b, Cyclo(1));
    EXPECT_THROW(psi_square_coefficients(Cyclo(-1), Cyclo(1)), std::domain_error);
}

TEST(PsiSquareProperty, IrrationalTracesBracketed)
{
    const Cyclo t1 = Cyclo::two_cos(24, 1) - Cyclo(1), t2 = Cyclo(1);
    const auto r = psi_square_coefficients(t1, t2);
    EXPECT_FALSE(r.x);
    EXPECT_LT(mpq_class(r.x_upper - r.x_lower).get_d(), 1e-12);
    EXPECT_EQ((Cyclo(r.x_lower * r.x_lower) - r.x_squared).sign(), Sign::negative);
    EXPECT_NE((Cyclo(r.x_upper * r.x_upper) - r.x_squared).sign(), Sign::negative);
}

TEST(DegenerateDims, ExceptionalValues)
{
    EXPECT_EQ(degenerate_dim(0, 0, 9, 30), 4862);
    EXPECT_EQ(degenerate_dim(5, 6, 9, 30), 2244);
    EXPECT_EQ(degenerate_dim(0, 0, 5, 12), 42);
    EXPECT_EQ(degenerate_dim(3, 4, 5, 12), 35);
    EXPECT_EQ(degenerate_dim(0, 0, 5, 12) + degenerate_dim(3, 4, 5, 12), 77);
    EXPECT_THROW(degenerate_dim(3, 3, 5, 12), std::invalid_argument);
}
