#include "hyperq/husimi_pure.hpp"

#include <algorithm>
#include <cmath>

#include "hyperq/kampe.hpp"

namespace hyperq {

namespace {

struct Indices {
    int lo, hi, d;
};

Indices indices(const PureStateSpec& s) {
    if (s.j < 0) throw IndexError("pure state index j must be non-negative");
    const int m = s.params.m;
    return {std::min(m, s.j), std::max(m, s.j), std::abs(m - s.j)};
}

double log_tau(const PureStateSpec& s) {
    s.params.validate();
    const Indices ix = indices(s);
    const double a1 = s.params.alpha() + 1.0;
    return std::lgamma(ix.lo + 1.0) - std::lgamma(ix.hi + 1.0) +
           log_gamma_ratio(a1 + ix.hi, a1 + ix.lo).log_abs;
}

double unit_ratio(const PureStateSpec& s, double lambda) {
    const double x = lambda / (s.params.R * s.params.R);
    if (!(x >= 0.0) || !(x < 1.0)) throw DomainError("lambda must lie in [0, R^2)");
    return x;
}

// log|Q_j| minus the Jacobi factor, with the extra power e of (1 - x).
double log_envelope(const PureStateSpec& s, double x, double e) {
    const Indices ix = indices(s);
    double v = log_tau(s) + e * std::log1p(-x);
    if (ix.d > 0) v += ix.d * std::log(x);
    return v;
}

// C_{j,k} as sign * exp(log_abs) * kdf.
struct CjkParts {
    SignedLog pre;
    double kdf;

    double value() const { return pre.value() * kdf; }
};

CjkParts cjk_parts(const PureStateSpec& s, int k) {
    s.params.validate();
    const Indices ix = indices(s);
    const int l = ix.lo, L = 2 * l;
    if (k < 0 || k > L) throw IndexError("cjk_coeff: k must lie in [0, 2 min(m, j)]");
    const double a = ix.d, b = s.params.alpha();
    const int m = s.params.m, j = s.j;

    SignedLog p1 = log_pochhammer(a + 1.0, L);
    SignedLog p2 = log_pochhammer(a + b + 1.0, L);
    SignedLog p3 = log_pochhammer(a + b + 1.0, l);
    SignedLog q1 = log_pochhammer(a + b, k);
    SignedLog q2 = log_pochhammer(a + 1.0, k);
    SignedLog q3 = log_pochhammer(a + b, L + k + 1);
    SignedLog pre;
    pre.log_abs = std::lgamma(L + 1.0) + p1.log_abs + 2.0 * p2.log_abs - 2.0 * std::lgamma(l + 1.0) -
                  2.0 * p3.log_abs + q1.log_abs + std::log(2.0 * k + a + b) -
                  std::lgamma(L - k + 1.0) - q2.log_abs - q3.log_abs;
    pre.sign = p1.sign * q1.sign * q2.sign * q3.sign * ((k % 2) ? -1 : 1);

    KdFParams p;
    p.a_top = {double(-L + k), -b - m - j - k};
    p.b_top = {double(-m), double(-j)};
    p.c_top = {double(-m), double(-j)};
    p.alpha_bot = {double(-L), double(-m - j)};
    p.beta_bot = {-b - m - j};
    p.gamma_bot = {-b - m - j};
    return {pre, kampe_de_feriet_terminating(p, 1.0, 1.0)};
}

}  // namespace

double tau_factor(const PureStateSpec& s) {
    return std::exp(log_tau(s));
}

double q_pure_radial(const PureStateSpec& s, double lambda) {
    s.params.validate();
    const double x = unit_ratio(s, lambda);
    const Indices ix = indices(s);
    if (ix.d > 0 && x == 0.0) return 0.0;
    const double P = jacobi_P(ix.lo, ix.d, s.params.alpha(), 1.0 - 2.0 * x);
    return std::exp(log_envelope(s, x, s.params.alpha() + 1.0)) * P * P;
}

double q_pure(const PureStateSpec& s, DiskPoint pt) {
    s.params.validate();
    const double lambda = std::norm(pt.z);
    if (!(lambda < s.params.R * s.params.R)) throw DomainError("q_pure: need |z| < R");
    return q_pure_radial(s, lambda);
}

double q_pure_euclid(int j, int m, double B, cplx z) {
    if (!(B > 0.0)) throw DomainError("q_pure_euclid: B must be positive");
    if (j < 0 || m < 0) throw IndexError("q_pure_euclid: indices must be non-negative");
    const int lo = std::min(m, j), hi = std::max(m, j), d = hi - lo;
    const double X = 2.0 * B * std::norm(z);
    if (d > 0 && X == 0.0) return 0.0;
    if (std::isinf(X)) return 0.0;
    double lg = std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0) - X;
    if (d > 0) lg += d * std::log(X);
    const double L = laguerre_L(lo, d, X);
    return std::exp(lg) * L * L;
}

RadialDensity radial_density(const PureStateSpec& s) {
    s.params.validate();
    indices(s);
    RadialDensity d;
    const double R2 = s.params.R * s.params.R;
    d.support_end = R2;
    d.meta = s;
    d.eval = [s, R2](double lambda) {
        if (lambda >= R2) return 0.0;
        const double x = unit_ratio(s, lambda);
        const Indices ix = indices(s);
        if (ix.d > 0 && x == 0.0) return 0.0;
        const double a = s.params.alpha();
        const double P = jacobi_P(ix.lo, ix.d, a, 1.0 - 2.0 * x);
        return a / R2 * std::exp(log_envelope(s, x, a - 1.0)) * P * P;
    };
    return d;
}

double cdf_lambda(const PureStateSpec& s, double r2, const QuadratureSpec& q) {
    const double R2 = s.params.R * s.params.R;
    if (!(r2 >= 0.0) || !(r2 <= R2)) throw DomainError("cdf_lambda: r2 must lie in [0, R^2]");
    if (r2 == 0.0) return 0.0;
    const RadialDensity d = radial_density(s);
    return integrate_real(d.eval, 0.0, r2, q);
}

double cjk_coeff(const PureStateSpec& s, int k) {
    return cjk_parts(s, k).value();
}

double cjk_coeff_limit(int m, int j, int k) {
    if (m < 0 || j < 0) throw IndexError("cjk_coeff_limit: indices must be non-negative");
    const int l = std::min(m, j), L = 2 * l;
    const double a = std::abs(m - j);
    if (k < 0 || k > L) throw IndexError("cjk_coeff_limit: k must lie in [0, 2 min(m, j)]");
    const double pre = std::exp(std::lgamma(L + 1.0) - 2.0 * std::lgamma(l + 1.0) +
                                log_pochhammer(a + 1.0, L).log_abs - std::lgamma(L - k + 1.0) -
                                log_pochhammer(a + 1.0, k).log_abs) *
                       ((k % 2) ? -1.0 : 1.0);
    KdFParams p;
    p.a_top = {double(-L + k)};
    p.b_top = {double(-m), double(-j)};
    p.c_top = {double(-m), double(-j)};
    p.alpha_bot = {double(-L), double(-m - j)};
    return pre * kampe_de_feriet_terminating(p, 1.0, 1.0);
}

cplx cf_pure(const PureStateSpec& s, double u, const SeriesConfig& cfg) {
    s.params.validate();
    const Indices ix = indices(s);
    const double a = ix.d, b = s.params.alpha();
    const double uR2 = u * s.params.R * s.params.R;
    const double lt = log_tau(s) + std::log(b);
    // (-i u R^2)^k = |u R^2|^k (-i sgn u)^k
    const cplx rot = u >= 0.0 ? cplx(0.0, -1.0) : cplx(0.0, 1.0);
    cplx sum = 0.0, rk = 1.0;
    for (int k = 0; k <= 2 * ix.lo; ++k, rk *= rot) {
        if (k > 0 && uR2 == 0.0) break;
        const CjkParts c = cjk_parts(s, k);
        if (c.pre.sign == 0 || c.kdf == 0.0) continue;
        double lg = lt + c.pre.log_abs + std::lgamma(b + k) + std::lgamma(a + k + 1.0) -
                    std::lgamma(b + 1.0 + a + 2.0 * k) - std::lgamma(k + 1.0);
        if (k > 0) lg += k * std::log(std::fabs(uR2));
        const cplx f = hyp_1F1(a + k + 1.0, b + 1.0 + a + 2.0 * k, cplx(0.0, uR2), cfg);
        sum += double(c.pre.sign) * c.kdf * std::exp(lg) * rk * f;
    }
    return sum;
}

cplx cf_pure_euclid(int j, int m, double B, double u) {
    if (!(B > 0.0)) throw DomainError("cf_pure_euclid: B must be positive");
    if (j < 0 || m < 0) throw IndexError("cf_pure_euclid: indices must be non-negative");
    const cplx v(0.0, u / (2.0 * B));
    cplx s = 0.0, v2k = 1.0;
    for (int k = 0; k <= std::min(m, j); ++k, v2k *= v * v) {
        s += binomial_general(m, k) * binomial_general(j, k) * v2k;
    }
    return cpow(1.0 - v, -(m + j + 1.0)) * s;
}

double mean_pure(const PureStateSpec& s) {
    s.params.validate();
    const Indices ix = indices(s);
    const double a = ix.d, al = s.params.alpha() + 1.0, R2 = s.params.R * s.params.R;
    const double c0 = cjk_coeff(s, 0);
    const double c1 = ix.lo > 0 ? cjk_coeff(s, 1) : 0.0;
    const double t = std::exp(log_tau(s) + std::lgamma(a + 2.0) + std::lgamma(al) - std::lgamma(al + a + 1.0));
    return t * R2 * (c0 - (al - 1.0) * c1 / (al + a + 1.0));
}

double second_moment_pure(const PureStateSpec& s) {
    s.params.validate();
    const Indices ix = indices(s);
    const double a = ix.d, al = s.params.alpha() + 1.0, R2 = s.params.R * s.params.R;
    const double c0 = cjk_coeff(s, 0);
    const double c1 = ix.lo > 0 ? cjk_coeff(s, 1) : 0.0;
    const double c2 = ix.lo > 0 ? cjk_coeff(s, 2) : 0.0;
    const double t = std::exp(log_tau(s) + std::lgamma(a + 3.0) + std::lgamma(al) - std::lgamma(al + a + 2.0));
    return t * R2 * R2 *
           (c0 - 2.0 * (al - 1.0) * c1 / (al + a + 2.0) +
            (al - 1.0) * al * c2 / ((al + a + 2.0) * (al + a + 3.0)));
}

double var_pure(const PureStateSpec& s) {
    const double mu = mean_pure(s);
    return second_moment_pure(s) - mu * mu;
}

std::vector<double> zeros_of_q(const PureStateSpec& s) {
    s.params.validate();
    const Indices ix = indices(s);
    if (ix.lo == 0) return {};
    std::vector<double> r;
    for (double x : jacobi_zeros(ix.lo, ix.d, s.params.alpha())) {
        r.push_back(s.params.R * std::sqrt(0.5 * (1.0 - x)));
    }
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace hyperq
