#include "hyperq/husimi_mixed.hpp"

#include <cmath>

namespace hyperq {

namespace {

double one_minus_xi(double beta) {
    return -std::expm1(-beta);
}

double lbinom(double a, int k) {
    return std::lgamma(a + 1.0) - std::lgamma(k + 1.0) - std::lgamma(a - k + 1.0);
}

double unit_ratio(const MixedStateSpec& ms, double lambda) {
    const double x = lambda / (ms.params.R * ms.params.R);
    if (!(x >= 0.0) || !(x < 1.0)) throw DomainError("lambda must lie in [0, R^2)");
    return x;
}

// Q_beta (1 - x)^extra at x = lambda / R^2.
double q_mixed_scaled(const MixedStateSpec& ms, double x, double extra) {
    const int m = ms.params.m;
    const double N = 2.0 * ms.params.tau();
    const double top = N - m - 1.0;
    const double lxi = -ms.beta, l1 = std::log(one_minus_xi(ms.beta));
    const double base = l1 + (N + extra) * std::log1p(-x) - N * std::log1p(-x * std::exp(lxi));
    double s = std::exp(base + m * lxi);
    if (x == 0.0) return s;
    const double lr = std::log(x) - 2.0 * std::log1p(-x);
    for (int k = 1; k <= m; ++k) {
        s += std::exp(base + lbinom(top, k) + lbinom(m, k) + (m - k) * lxi + 2.0 * k * l1 + k * lr);
    }
    return s;
}

// Shared k-sum of cf and moments: alpha (1-xi) xi^m sum_k c_k B(k+p, N-2k-1) g_k.
template <class G>
auto beta_sum(const MixedStateSpec& ms, int p, G g) {
    ms.validate();
    const int m = ms.params.m;
    const double N = 2.0 * ms.params.tau();
    const double l1 = std::log(one_minus_xi(ms.beta));
    const double lpre = std::log(ms.params.alpha()) + l1 - m * ms.beta;
    decltype(g(0)) s = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double lc = lbinom(N - m - 1.0, k) + lbinom(m, k) + k * (2.0 * l1 + ms.beta) +
                          log_beta(k + p, N - 2.0 * k - 1.0);
        s += std::exp(lpre + lc) * g(k);
    }
    return s;
}

}  // namespace

SpectrumView spectrum(const ModelParams& p) {
    p.validate();
    return {p.tau(), p.m};
}

double eigenvalue_eta(int j, const ModelParams& p) {
    if (j < 0) throw IndexError("eigenvalue_eta: j must be non-negative");
    return spectrum(p).eta(j);
}

double isotonic_eigenvalue(int j, const ModelParams& p) {
    p.validate();
    if (j < 0) throw IndexError("isotonic_eigenvalue: j must be non-negative");
    return 2.0 * j + 2.0 * (p.tau() - p.m);
}

double partition_Z(const MixedStateSpec& ms) {
    ms.validate();
    return std::exp(-spectrum(ms.params).eta(0) * ms.beta) / one_minus_xi(ms.beta);
}

double heat_kernel(const MixedStateSpec& ms, double r, double rho) {
    ms.validate();
    if (!(r > 0.0) || !(rho > 0.0)) throw DomainError("heat_kernel: r and rho must be positive");
    const double b = ms.beta;
    const double lw = std::log(2.0) + 0.5 * std::log(r * rho) - b - std::log1p(-std::exp(-2.0 * b)) -
                      0.5 * (r * r + rho * rho) / std::tanh(b) +
                      log_bessel_I(ms.params.alpha(), r * rho / std::sinh(b));
    return std::exp(lw);
}

double q_mixed_radial(const MixedStateSpec& ms, double lambda) {
    ms.validate();
    return q_mixed_scaled(ms, unit_ratio(ms, lambda), 0.0);
}

double q_mixed_closed(const MixedStateSpec& ms, DiskPoint pt) {
    ms.validate();
    const double lambda = std::norm(pt.z);
    if (!(lambda < ms.params.R * ms.params.R)) throw DomainError("q_mixed_closed: need |z| < R");
    return q_mixed_radial(ms, lambda);
}

double q_mixed_literal(const MixedStateSpec& ms, double lambda) {
    ms.validate();
    const double x = unit_ratio(ms, lambda);
    const double xi = std::exp(-ms.beta);
    const double N = 2.0 * ms.params.tau();
    const int m = ms.params.m;
    const double D = (x - xi) * (1.0 - x * xi) / ((1.0 - x) * (1.0 - x));
    if (D == 0.0) throw DomainError("q_mixed_literal: singular at |z|^2 = R^2 e^{-beta}");
    return one_minus_xi(ms.beta) * std::pow((1.0 - x) / (1.0 - x * xi), N) * std::pow(D, m) *
           jacobi_P(m, ms.params.alpha(), 0.0, 1.0 + 2.0 * xi / D);
}

double q_mixed_euclid(double beta, double B, int m, cplx z) {
    if (!(beta > 0.0)) throw DomainError("q_mixed_euclid: beta must be positive");
    if (!(B > 0.0)) throw DomainError("q_mixed_euclid: B must be positive");
    if (m < 0) throw IndexError("q_mixed_euclid: m must be non-negative");
    const double X = 2.0 * B * std::norm(z);
    const double om = one_minus_xi(beta);
    const double sh = std::sinh(0.5 * beta);
    const double env = std::exp(std::log(om) - X * om - beta * m);
    // the Gaussian wins over the polynomial long before either overflows
    if (env == 0.0 || std::isinf(X)) return 0.0;
    return env * laguerre_L(m, 0.0, -4.0 * X * sh * sh);
}

RadialDensity radial_density_mixed(const MixedStateSpec& ms) {
    ms.validate();
    RadialDensity d;
    const double R2 = ms.params.R * ms.params.R;
    d.support_end = R2;
    d.meta = ms;
    d.eval = [ms, R2](double lambda) {
        if (lambda >= R2) return 0.0;
        return ms.params.alpha() / R2 * q_mixed_scaled(ms, unit_ratio(ms, lambda), -2.0);
    };
    return d;
}

cplx cf_mixed(const MixedStateSpec& ms, double u, const SeriesConfig& cfg) {
    const double N = 2.0 * ms.params.tau();
    const cplx y(0.0, u * ms.params.R * ms.params.R);
    const double xi = std::exp(-ms.beta);
    return beta_sum(ms, 1, [&](int k) { return humbert_phi1(k + 1.0, N, N - k, xi, y, cfg); });
}

double mean_mixed(const MixedStateSpec& ms, const SeriesConfig& cfg) {
    const double N = 2.0 * ms.params.tau();
    const double xi = std::exp(-ms.beta);
    const double s = beta_sum(ms, 2, [&](int k) { return hyp_2F1(k + 2.0, N, N - k + 1.0, xi, cfg).real(); });
    return ms.params.R * ms.params.R * s;
}

double second_moment_mixed(const MixedStateSpec& ms, const SeriesConfig& cfg) {
    const double N = 2.0 * ms.params.tau();
    const double xi = std::exp(-ms.beta);
    const double s = beta_sum(ms, 3, [&](int k) { return hyp_2F1(k + 3.0, N, N - k + 2.0, xi, cfg).real(); });
    const double R2 = ms.params.R * ms.params.R;
    return R2 * R2 * s;
}

double var_mixed(const MixedStateSpec& ms, const SeriesConfig& cfg) {
    const double mu = mean_mixed(ms, cfg);
    return second_moment_mixed(ms, cfg) - mu * mu;
}

cplx cf_mixed_euclid_limit(double beta, double B, int m, double u) {
    if (!(beta > 0.0)) throw DomainError("cf_mixed_euclid_limit: beta must be positive");
    if (!(B > 0.0)) throw DomainError("cf_mixed_euclid_limit: B must be positive");
    if (m < 0) throw IndexError("cf_mixed_euclid_limit: m must be non-negative");
    if (!(u < 2.0 * B)) throw DomainError("cf_mixed_euclid_limit: need u < 2B");
    const double om = one_minus_xi(beta), xi = std::exp(-beta);
    const cplx v(0.0, u / (2.0 * B));
    const cplx den = om - v;
    return om / den * cpow((om - v * xi) / den, m);
}

double laguerre_photon_pmf(int m, double lambda, double beta) {
    if (m < 0) throw IndexError("laguerre_photon_pmf: m must be non-negative");
    if (!(lambda >= 0.0)) throw DomainError("laguerre_photon_pmf: lambda must be non-negative");
    if (!(beta > 0.0)) throw DomainError("laguerre_photon_pmf: beta must be positive");
    const double nt = 1.0 / std::expm1(beta);
    const double lg = m * std::log(nt) - (m + 1.0) * std::log1p(nt) - lambda / (1.0 + nt);
    return std::exp(lg) * laguerre_L(m, 0.0, -lambda / (nt * (1.0 + nt)));
}

double thermo_trace(const MixedStateSpec& ms) {
    ms.validate();
    const SpectrumView sp = spectrum(ms.params);
    const double om = one_minus_xi(ms.beta);
    constexpr long kMaxLevels = 100000000;
    double s = 0.0;
    for (long j = 0;; ++j) {
        const double t = ms.epsilon * std::exp(-ms.beta * sp.eta(static_cast<int>(j)));
        if (t / om < 1e-14) break;
        if (j >= kMaxLevels) throw NoConvergenceError("thermo_trace: too many levels", -s / ms.beta);
        s += std::log1p(t);
    }
    return -s / ms.beta;
}

double berezin_lieb_lhs(const MixedStateSpec& ms, bool literal, const QuadratureSpec& q) {
    ms.validate();
    const double R2 = ms.params.R * ms.params.R;
    const double scale = literal ? 1.0 : partition_Z(ms);
    const double a = ms.params.alpha();
    auto f = [&](double lambda) {
        if (lambda >= R2) return 0.0;
        const double x = unit_ratio(ms, lambda);
        const double w = a / R2 / ((1.0 - x) * (1.0 - x));
        if (!literal) return -std::log1p(ms.epsilon * scale * q_mixed_scaled(ms, x, 0.0)) * w;
        const double s = ms.epsilon * q_mixed_literal(ms, lambda);
        return -std::log1p(s) * w;
    };
    return integrate_real(f, 0.0, R2, q) / ms.beta;
}

BerezinLiebSweep berezin_lieb_sweep(double beta, double epsilon, double B, double R,
                                    const QuadratureSpec& q) {
    ModelParams p{B, R, 0};
    p.validate();
    BerezinLiebSweep out;
    for (int m = 0; m <= p.max_level(); ++m) {
        const MixedStateSpec ms{beta, ModelParams{B, R, m}, epsilon};
        const double th = thermo_trace(ms);
        const double lhs = berezin_lieb_lhs(ms, false, q);
        double lit;
        try {
            lit = berezin_lieb_lhs(ms, true, q);
        } catch (const DomainError&) {
            lit = std::nan("");
        }
        out.theta_per_m.push_back(th);
        out.lhs_per_m.push_back(lhs);
        out.lhs_literal_per_m.push_back(lit);
        out.gap_per_m.push_back(th - lhs);
        if (m == 0 || lhs > out.bound) {
            out.bound = lhs;
            out.m_star = m;
            out.theta_at_m_star = th;
        }
    }
    return out;
}

double berezin_lieb_lower_bound(double beta, double epsilon, double B, double R,
                                const QuadratureSpec& q) {
    return berezin_lieb_sweep(beta, epsilon, B, R, q).bound;
}

}  // namespace hyperq
