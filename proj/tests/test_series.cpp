#include "atl/series.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace atl;

namespace {

double evaluate(const std::vector<mpq_class>& c, double x)
{
    double s = 0;
    for (std::size_t i = c.size(); i-- > 0;) s = s * x + c[i].get_d();
    return s;
}

std::vector<mpz_class> random_dims(std::mt19937& rng, int length)
{
    std::vector<mpz_class> d{1};
    for (int i = 1; i < length; ++i) d.push_back(static_cast<long>(rng() % 21));
    return d;
}

}  // namespace

TEST(Series, CatalanAndCentralBinomial)
{
    const auto c = catalan_series(5);
    const std::vector<long> cat{1, 1, 2, 5, 14, 42};
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(c[n], cat[static_cast<std::size_t>(n)]);
    const auto s = sqrt_inv_series(4);
    const std::vector<long> central{1, 2, 6, 20, 70};
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(s[n], central[static_cast<std::size_t>(n)]);
    // (1 - 4z) S^2 = 1
    const auto one_minus_4z = Series::monomial(16, 0) - Series::monomial(16, 1, 4);
    EXPECT_EQ(one_minus_4z * sqrt_inv_series(16).pow(2), Series::monomial(16, 0));
}

TEST(Series, CatalanFunctionalEquation)
{
    const int n = 16;
    EXPECT_EQ(Series::monomial(n, 1) * catalan_series(n).pow(2), catalan_series(n) - Series::monomial(n, 0));
}

TEST(Series, ArithmeticAndComposition)
{
    const Series x = Series::monomial(8, 1);
    const Series one = Series::monomial(8, 0);
    EXPECT_EQ((one - x).inverse(), [] {
        Series g(8);
        for (int i = 0; i <= 8; ++i) g[i] = 1;
        return g;
    }());
    EXPECT_EQ((one + x).pow(-2) * (one + x).pow(2), one);
    // 1/(1-y) at y = x/(1+x) is 1+x
    EXPECT_EQ((one - x).inverse().compose(x * (one + x).inverse()), one + x);
    EXPECT_THROW(x.inverse(), std::domain_error);
    EXPECT_THROW(one.compose(one), std::domain_error);
    EXPECT_THROW(one + Series::monomial(4, 0), std::invalid_argument);
}

TEST(Theta, CatalanGivesOne)
{
    const auto th = theta_transform(catalan_series(16));
    EXPECT_EQ(th, Series::monomial(16, 0));
}

TEST(ThetaProperty, MatchesFloatingEvaluation)
{
    std::mt19937 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const auto d = random_dims(rng, 10);
        std::vector<mpq_class> coeffs(d.begin(), d.end());
        const auto th = theta_transform(Series(30, coeffs));
        for (double q : {0.01, 0.02}) {
            const double x = q / ((1 + q) * (1 + q));
            const double direct = (1 - q) / (1 + q) * evaluate(coeffs, x) + q;
            EXPECT_NEAR(evaluate(th.coefficients(), q), direct, 1e-12 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST(ThetaProperty, ClosedFormAgreesOnRandomSequences)
{
    std::mt19937 rng(1);
    int compared = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int length = 1 + static_cast<int>(rng() % 10);
        const auto d = random_dims(rng, length);
        const auto a = annular_multiplicities(d, length - 1);
        const auto th = theta_transform(Series(length - 1, std::vector<mpq_class>(d.begin(), d.end())));
        for (int r = 0; r < length; ++r) {
            EXPECT_EQ(th[r], a[static_cast<std::size_t>(r)]) << trial << " r=" << r;
            ++compared;
        }
    }
    EXPECT_GT(compared, 300);
}

TEST(Multiplicities, TemperleyLiebIsTrivial)
{
    std::vector<mpz_class> dims;
    for (int n = 0; n <= 12; ++n) dims.push_back(catalan(n));
    const auto a = annular_multiplicities(dims, 12);
    EXPECT_EQ(a[0], 1);
    for (int r = 1; r <= 12; ++r) EXPECT_EQ(a[static_cast<std::size_t>(r)], 0) << r;
    EXPECT_FALSE(first_negative(a));
}

TEST(Multiplicities, SingleModuleDetectsItsLowestWeight)
{
    // Catalan plus the dimensions of one V^{k,omega}
    for (int k = 1; k <= 4; ++k) {
        std::vector<mpz_class> dims;
        for (int n = 0; n <= 10; ++n) dims.push_back(catalan(n) + binomial(2 * n, n - k));
        const auto a = annular_multiplicities(dims, 10);
        for (int r = 0; r <= 10; ++r) EXPECT_EQ(a[static_cast<std::size_t>(r)], (r == 0 || r == k) ? 1 : 0) << k << "," << r;
    }
}

TEST(Multiplicities, Errors)
{
    EXPECT_THROW(annular_multiplicities({2, 1}, 1), std::invalid_argument);
    EXPECT_THROW(annular_multiplicities({1, 1}, 4), std::invalid_argument);
    EXPECT_EQ(first_negative({1, 0, -1, 2}), 2);
}

TEST(DimensionSeries, CoefficientsAreBinomials)
{
    for (int k = 1; k <= 4; ++k) {
        const auto s = module_dim_series(ModuleSpec<Cyclo>::low_weight(k, Cyclo(1), Cyclo(3)), 12);
        for (int m = 0; m <= 12; ++m) EXPECT_EQ(s[m], binomial(2 * m, m - k)) << k << "," << m;
    }
    const auto tl = module_dim_series(ModuleSpec<Cyclo>::trivial(Cyclo(3)), 10);
    EXPECT_EQ(tl, catalan_series(10));
    const auto half = module_dim_series(ModuleSpec<Cyclo>::zero(true, Cyclo(3)), 6);
    EXPECT_EQ(half[3], 10);
    EXPECT_EQ(half[0], mpq_class(1, 2));
}

TEST(DimensionSeries, Additivity)
{
    const auto a = module_dim_series(ModuleSpec<Cyclo>::low_weight(1, Cyclo(1), Cyclo(3)), 10);
    const auto b = module_dim_series(ModuleSpec<Cyclo>::low_weight(2, Cyclo(-1), Cyclo(3)), 10);
    const auto sum = a + b;
    for (int m = 0; m <= 10; ++m) EXPECT_EQ(sum[m], binomial(2 * m, m - 1) + binomial(2 * m, m - 2));
    // sum over k >= 1 of C(2m, m-k) is (4^m - C(2m, m)) / 2
    Series total(10);
    for (int k = 1; k <= 10; ++k) total += module_dim_series(ModuleSpec<Cyclo>::low_weight(k, Cyclo(1), Cyclo(3)), 10);
    for (int m = 0; m <= 10; ++m) {
        mpz_class four = 1;
        for (int i = 0; i < m; ++i) four *= 4;
        EXPECT_EQ(total[m], mpz_class((four - binomial(2 * m, m)) / 2)) << m;
    }
}

TEST(BinomialIdentity, UsedInClosedForm)
{
    std::mt19937 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const long a = 1 + static_cast<long>(rng() % 30), j = static_cast<long>(rng() % 31);
        mpq_class rhs(a + j, a);
        rhs.canonicalize();
        rhs *= binomial(a, j);
        EXPECT_EQ(mpq_class(binomial(a, j) + binomial(a - 1, j - 1)), rhs) << a << "," << j;
    }
}
