#include <gtest/gtest.h>

#include <cmath>

#include "hyperq/husimi_pure.hpp"
#include "oracles.hpp"

using namespace hyperq;
using oracle::rel;

namespace {

QuadratureSpec tight() {
    QuadratureSpec q;
    // near lambda = R^2 the rim factor is only known to an ulp of R^2
    q.abs_tol = 1e-10;
    q.rel_tol = 1e-9;
    return q;
}

PureStateSpec spec(double B, double R, int m, int j) {
    return {j, ModelParams{B, R, m}};
}

// Q_j straight from the printed product, with tgamma and no log tricks.
double q_direct(const PureStateSpec& s, double lambda) {
    const int m = s.params.m, j = s.j, lo = std::min(m, j), hi = std::max(m, j);
    const double a = s.params.alpha(), x = lambda / (s.params.R * s.params.R);
    const double t = std::tgamma(lo + 1.0) * std::tgamma(a + 1.0 + hi) / (std::tgamma(hi + 1.0) * std::tgamma(a + 1.0 + lo));
    const double P = jacobi_P(lo, hi - lo, a, 1.0 - 2.0 * x);
    return t * std::pow(1.0 - x, a + 1.0) * std::pow(x, hi - lo) * P * P;
}

// Random admissible spec with alpha >= 1. Below that the density blows up at the
// rim and about ulp^alpha of its mass sits closer to R^2 than one double spacing,
// out of reach of any quadrature in lambda.
PureStateSpec random_spec(int mcap, int jcap) {
    for (;;) {
        const double B = oracle::uniform(0.5, 2.0), R = oracle::uniform(1.2, 3.0);
        const int m = oracle::uniform_int(0, mcap), j = oracle::uniform_int(0, jcap);
        if (2.0 * (B * R * R - m) - 1.0 >= 1.0) return spec(B, R, m, j);
    }
}

}  // namespace

TEST(TauFactor, Values) {
    EXPECT_EQ(tau_factor(spec(1.0, 1.5, 1, 1)), 1.0);
    EXPECT_LT(rel(tau_factor(spec(1.0, 1.5, 0, 2)), 12.375), 1e-14);
}

TEST(TauFactor, LargeRadiusAsymptotics) {
    for (auto [m, j] : {std::pair{1, 3}, std::pair{2, 0}, std::pair{1, 1}}) {
        const auto s = spec(1.0, 1e3, m, j);
        const int lo = std::min(m, j), hi = std::max(m, j);
        const double lhs = tau_factor(s) * s.params.alpha();
        const double rhs = std::exp(std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0) +
                                    (hi - lo + 1.0) * std::log(2.0 * s.params.tau()));
        EXPECT_LT(rel(lhs, rhs), 1e-3) << m << " " << j;
    }
}

TEST(QPure, OriginValues) {
    EXPECT_EQ(q_pure(spec(1.0, 1.5, 1, 2), {0.0}), 0.0);
    EXPECT_LT(rel(q_pure(spec(1.0, 1.5, 1, 1), {0.0}), 1.0), 1e-15);
    EXPECT_THROW(q_pure(spec(1.0, 1.5, 1, 1), {cplx(1.5, 0.0)}), DomainError);
}

TEST(QPure, MatchesDirectProduct) {
    for (int i = 0; i < 100; ++i) {
        const double B = oracle::uniform(0.5, 3.0), R = oracle::uniform(1.0, 3.0);
        const int mmax = static_cast<int>(std::floor(B * R * R - 0.5));
        const auto s = spec(B, R, oracle::uniform_int(0, std::min(mmax, 4)), oracle::uniform_int(0, 5));
        const double lambda = oracle::uniform(0.0, 0.95) * R * R;
        const double want = q_direct(s, lambda);
        EXPECT_LE(std::fabs(q_pure_radial(s, lambda) - want), 1e-12 * std::max(1e-300, want) + 1e-300);
    }
}

TEST(QPure, RadialSymmetry) {
    const auto s = spec(1.0, 1.5, 1, 2);
    for (int i = 0; i < 20; ++i) {
        const double r = oracle::uniform(0.0, 1.4);
        EXPECT_LT(rel(q_pure(s, {std::polar(r, oracle::uniform(-3.0, 3.0))}), q_pure_radial(s, r * r)), 1e-13);
    }
}

TEST(QPure, NormalizedAgainstMeasurePolar) {
    const auto s = spec(1.0, 1.5, 1, 2);
    QuadratureSpec q;
    q.abs_tol = 5e-8;
    q.rel_tol = 1e-8;
    const cplx v = integrate_disk_polar(
        [&](double r, double th) {
            const DiskPoint pt{std::polar(r, th)};
            return cplx(q_pure(s, pt) * measure_density(s.params, pt));
        },
        s.params.R, q);
    EXPECT_LT(rel(v.real(), 1.0), 1e-7);
}

TEST(QPure, NormalizedOverIndexGrid) {
    for (int m = 0; m <= 2; ++m) {
        for (int j = 0; j <= 3; ++j) {
            const auto s = spec(1.0, 1.8, m, j);
            const double v = integrate_disk_radialized(
                [&](double r) { return q_pure_radial(s, r * r); },
                [&](double r) { return measure_density(s.params, {r}); }, s.params.R, tight());
            EXPECT_LT(rel(v, 1.0), 1e-7) << m << " " << j;
        }
    }
}

TEST(QPureEuclid, ValuesAndNormalization) {
    const double B = 0.7;
    const cplx z(0.4, -0.9);
    EXPECT_LT(rel(q_pure_euclid(0, 0, B, z), std::exp(-2.0 * B * std::norm(z))), 1e-15);
    for (auto [m, j] : {std::pair{0, 0}, std::pair{1, 2}, std::pair{3, 1}}) {
        QuadratureSpec q = tight();
        q.endpoint_substitution = EndpointSubstitution::none;
        const double v = integrate_halfline(
                             [&](double r) { return cplx(2.0 * B / M_PI * 2.0 * M_PI * r * q_pure_euclid(j, m, B, r)); },
                             q)
                             .real();
        EXPECT_LT(rel(v, 1.0), 1e-8) << m << " " << j;
    }
}

TEST(QPureEuclid, FiniteRadiusErrorDecays) {
    const cplx z(0.6, 0.5);
    double prev = 1.0;
    std::vector<double> Rs{5.0, 10.0, 20.0, 100.0}, errs;
    for (double R : Rs) {
        const double e = std::fabs(q_pure(spec(1.0, R, 1, 2), {z}) - q_pure_euclid(2, 1, 1.0, z));
        EXPECT_LT(e, prev);
        prev = e;
        errs.push_back(e);
    }
    const LimitFit fit = limit_rate_from(Rs, errs);
    EXPECT_NEAR(fit.slope, -2.0, 0.15);
}

TEST(RadialDensity, GroundLevelIsScaledBeta) {
    const auto s = spec(1.3, 1.4, 0, 3);
    const RadialDensity d = radial_density(s);
    const double R2 = 1.96, a = 2.0 * s.params.tau() - 1.0;
    for (double t : {0.05, 0.3, 0.7, 0.95}) {
        const double want = std::pow(t, 3.0) * std::pow(1.0 - t, a - 1.0) / std::beta(4.0, a) / R2;
        EXPECT_LT(rel(d(t * R2), want), 1e-12);
    }
}

TEST(RadialDensity, UnitMassAndNonNegative) {
    const auto s = spec(1.0, 1.5, 1, 1);
    const RadialDensity d = radial_density(s);
    EXPECT_LT(rel(integrate_real(d.eval, 0.0, d.support_end, tight()), 1.0), 1e-9);
    for (int i = 0; i <= 1000; ++i) EXPECT_GE(d(d.support_end * i / 1000.0), 0.0);
    EXPECT_EQ(d(d.support_end), 0.0);
}

TEST(CdfLambda, EndpointsAndMonotone) {
    const auto s = spec(1.0, 1.5, 1, 2);
    const double R2 = 2.25;
    EXPECT_EQ(cdf_lambda(s, 0.0), 0.0);
    EXPECT_LT(std::fabs(cdf_lambda(s, R2) - 1.0), 1e-9);
    double prev = 0.0;
    for (int i = 1; i <= 50; ++i) {
        const double c = cdf_lambda(s, R2 * i / 50.0);
        EXPECT_GE(c, prev - 1e-12);
        prev = c;
    }
    EXPECT_THROW(cdf_lambda(s, -0.1), DomainError);
    EXPECT_THROW(cdf_lambda(s, 2.3), DomainError);
}

TEST(CjkCoeff, DegenerateIndexGivesPrefactorOnly) {
    const auto s = spec(1.0, 1.5, 0, 3);
    EXPECT_LT(rel(cjk_coeff(s, 0), 1.0), 1e-14);
    EXPECT_THROW(cjk_coeff(s, 1), IndexError);
    EXPECT_THROW(cjk_coeff(s, -1), IndexError);
}

TEST(CjkCoeff, ReconstructsJacobiSquare) {
    // P_l^{(a,b)}(t)^2 = sum_k C_k P_k^{(a,b-1)}(t), l = min(m,j), a = |m-j|
    for (auto [m, j] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}, std::pair{2, 2}}) {
        const auto s = spec(1.2, 2.0, m, j);
        const int l = std::min(m, j), L = 2 * l;
        const double a = std::abs(m - j), b = s.params.alpha();
        for (double x : {0.05, 0.2, 0.45, 0.7, 0.9}) {
            const double t = 1.0 - 2.0 * x;
            const double P = jacobi_P(l, a, b, t);
            double sum = 0.0;
            for (int k = 0; k <= L; ++k) sum += cjk_coeff(s, k) * jacobi_P(k, a, b - 1.0, t);
            EXPECT_LT(std::fabs(sum - P * P), 1e-11 * std::max(1.0, P * P)) << m << " " << j << " " << x;
        }
    }
}

TEST(CjkCoeff, LargeRadiusLimit) {
    for (auto [m, j] : {std::pair{1, 1}, std::pair{1, 3}, std::pair{2, 2}}) {
        const auto s = spec(1.0, 1e3, m, j);
        for (int k = 0; k <= 2 * std::min(m, j); ++k) {
            EXPECT_LT(rel(cjk_coeff(s, k), cjk_coeff_limit(m, j, k)), 1e-3) << m << " " << j << " " << k;
        }
    }
    EXPECT_THROW(cjk_coeff_limit(1, 1, 3), IndexError);
}

TEST(CfPure, ZeroAndBounds) {
    const auto s = spec(1.0, 1.5, 1, 2);
    EXPECT_LT(std::abs(cf_pure(s, 0.0) - 1.0), 1e-14);
    for (double u = -20.0; u <= 20.0; u += 0.73) {
        const cplx c = cf_pure(s, u);
        EXPECT_LE(std::abs(c), 1.0 + 1e-12);
        EXPECT_LT(std::abs(cf_pure(s, -u) - std::conj(c)), 1e-12);
    }
}

TEST(CfPure, GroundLevelIsConfluent) {
    const auto s = spec(1.1, 1.6, 0, 2);
    const double R2 = 2.56;
    for (double u : {0.3, 1.0, 4.0}) {
        const cplx want = hyp_1F1(3.0, 2.0 * s.params.tau() + 2.0, cplx(0.0, u * R2));
        EXPECT_LT(std::abs(cf_pure(s, u) - want), 1e-13);
    }
}

TEST(CfPure, MatchesQuadratureOracle) {
    const auto s = spec(1.0, 1.5, 1, 2);
    const RadialDensity d = radial_density(s);
    for (double u : {0.5, 1.0, 3.0}) {
        EXPECT_LT(std::abs(cf_pure(s, u) - cf_oracle(d, u, tight())), 1e-6) << u;
    }
    for (int i = 0; i < 30; ++i) {
        const auto t = random_spec(3, 4);
        const double u = oracle::uniform(-6.0, 6.0);
        SCOPED_TRACE(testing::Message() << t.params.B << " " << t.params.R << " " << t.params.m << " " << t.j << " " << u);
        EXPECT_LT(std::abs(cf_pure(t, u) - cf_oracle(radial_density(t), u, tight())), 1e-9)
            << t.params.B << " " << t.params.R << " " << t.params.m << " " << t.j << " " << u;
    }
}

TEST(CfPure, FrozenRegressionValue) {
    // pins the sign convention of the k-sum against the quadrature transform
    const cplx c = cf_pure(spec(1.0, 1.5, 1, 2), 1.0);
    const cplx o = cf_oracle(radial_density(spec(1.0, 1.5, 1, 2)), 1.0, tight());
    EXPECT_NEAR(c.real(), o.real(), 1e-11);
    EXPECT_NEAR(c.imag(), o.imag(), 1e-11);
    EXPECT_GT(c.imag(), 0.0);
}

TEST(CfPureEuclid, Forms) {
    EXPECT_EQ(cf_pure_euclid(2, 1, 1.0, 0.0), cplx(1.0));
    const double B = 0.8;
    for (double u : {0.4, 1.2}) {
        const cplx v(0.0, u / (2.0 * B));
        EXPECT_LT(std::abs(cf_pure_euclid(3, 0, B, u) - std::pow(1.0 - v, -4.0)), 1e-14);
    }
    // (m, j, u) = (1, 2, 0.7) in the rescaled variable: (m+j)!/(m!j!) (1-iu)^{-(m+j+1)} 2F1(-m,-j;-m-j|1+u^2)
    const int m = 1, j = 2;
    const double u = 0.7;
    const cplx iu(0.0, u);
    cplx f = 0.0;
    for (int k = 0; k <= 1; ++k) {
        f += oracle::to_double(oracle::poch(-m, k) * oracle::poch(-j, k) /
                               (oracle::poch(-m - j, k) * oracle::factorial(k))) *
             std::pow(1.0 + u * u, k);
    }
    const cplx want = 3.0 * std::pow(1.0 - iu, -4.0) * f;
    EXPECT_LT(std::abs(cf_pure_euclid(j, m, 0.5, u) - want), 1e-14);
}

TEST(CfPureEuclid, LimitOfFiniteRadius) {
    const double B = 1.0;
    for (double u : {0.5, 1.5}) {
        std::vector<double> Rs{5.0, 20.0, 100.0}, errs;
        for (double R : Rs) errs.push_back(std::abs(cf_pure(spec(B, R, 1, 2), u) - cf_pure_euclid(2, 1, B, u)));
        EXPECT_LT(errs[1], errs[0]);
        EXPECT_LT(errs[2], errs[1]);
        EXPECT_LT(errs[2], 1e-3);
    }
}

TEST(Moments, GroundLevelClosedForms) {
    for (int j = 0; j <= 4; ++j) {
        const auto s = spec(1.2, 1.7, 0, j);
        const double R2 = 1.7 * 1.7, T = 2.0 * s.params.tau();
        EXPECT_LT(rel(mean_pure(s), (j + 1.0) * R2 / (T + j)), 1e-13);
        EXPECT_LT(rel(var_pure(s), (j + 1.0) * (T - 1.0) * R2 * R2 / ((T + j) * (T + j) * (T + j + 1.0))), 1e-11);
    }
}

TEST(Moments, MatchQuadratureAndCfDerivative) {
    const auto s = spec(1.0, 1.5, 1, 2);
    const RadialDensity d = radial_density(s);
    const double m1 = moment_oracle(d, 1, tight()), m2 = moment_oracle(d, 2, tight());
    EXPECT_LT(rel(mean_pure(s), m1), 1e-7);
    EXPECT_LT(rel(second_moment_pure(s), m2), 1e-7);
    EXPECT_LT(rel(var_pure(s), m2 - m1 * m1), 1e-7);
    const double h = 1e-4;
    const double fd = (-cplx(0.0, 1.0) * (cf_pure(s, h) - cf_pure(s, -h)) / (2.0 * h)).real();
    EXPECT_LT(rel(mean_pure(s), fd), 1e-5);
    EXPECT_GT(mean_pure(s), 0.0);
    EXPECT_LT(mean_pure(s), 2.25);
    EXPECT_GE(var_pure(s), 0.0);
}

TEST(Moments, RandomAgainstOracle) {
    for (int i = 0; i < 25; ++i) {
        const auto s = random_spec(3, 4);
        SCOPED_TRACE(testing::Message() << s.params.B << " " << s.params.R << " " << s.params.m << " " << s.j);
        const RadialDensity d = radial_density(s);
        EXPECT_LT(rel(mean_pure(s), moment_oracle(d, 1, tight())), 1e-9);
        EXPECT_LT(rel(second_moment_pure(s), moment_oracle(d, 2, tight())), 1e-9);
    }
}

TEST(Zeros, CountsAndVanishing) {
    EXPECT_TRUE(zeros_of_q(spec(1.0, 1.5, 0, 2)).empty());
    const auto one = spec(1.0, 1.5, 1, 2);
    const auto z1 = zeros_of_q(one);
    ASSERT_EQ(z1.size(), 1u);
    double qmax = 0.0;
    for (int i = 0; i < 2000; ++i) qmax = std::max(qmax, q_pure_radial(one, 2.25 * i / 2000.0));
    EXPECT_LT(q_pure(one, {z1[0]}), 1e-10 * qmax);
    const auto s = spec(2.0, 2.0, 2, 3);
    const auto zs = zeros_of_q(s);
    ASSERT_EQ(zs.size(), 2u);
    for (double r : zs) {
        EXPECT_GT(r, 0.0);
        EXPECT_LT(r, 2.0);
        EXPECT_LT(q_pure(s, {r}), 1e-10);
    }
    EXPECT_LT(zs[0], zs[1]);
}
