#include "hyperq/coherent.hpp"

#include <cmath>
#include <sstream>

namespace hyperq {

namespace {

double disk_ratio(const ModelParams& p, DiskPoint pt) {
    p.validate();
    const double x = std::norm(pt.z) / (p.R * p.R);
    if (!(x < 1.0)) {
        std::ostringstream os;
        os << "point |z| = " << std::abs(pt.z) << " is not inside the disk of radius " << p.R;
        throw DomainError(os.str());
    }
    return x;
}

void check_admissible(double B, int m, double xi) {
    if (m < 0) throw DomainError("level m must be non-negative");
    if (!(2.0 * B - m > 0.0)) throw DomainError("need 2B - m > 0");
    if (!(xi > 0.0)) throw DomainError("xi must be positive");
}

// log of (Gamma(2B-m)/m!)^{-1/2}
double log_admissible_norm(double B, int m) {
    return -0.5 * (std::lgamma(2.0 * B - m) - std::lgamma(m + 1.0));
}

}  // namespace

int ModelParams::max_level() const {
    return static_cast<int>(std::floor(tau() - 0.5));
}

void ModelParams::validate() const {
    if (!(B > 0.0)) throw DomainError("B must be positive");
    if (!(R > 0.0)) throw DomainError("R must be positive");
    if (!(2.0 * B * R * R > 1.0)) {
        std::ostringstream os;
        os << "need 2*B*R^2 > 1, got " << 2.0 * B * R * R;
        throw DomainError(os.str());
    }
    if (m < 0) throw DomainError("m must be non-negative");
    if (m > max_level()) {
        std::ostringstream os;
        os << "m = " << m << " exceeds floor(B*R^2 - 1/2) = " << max_level();
        throw DomainError(os.str());
    }
}

void MixedStateSpec::validate() const {
    params.validate();
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
}

double phi_admissible(double B, int m, double xi) {
    check_admissible(B, m, xi);
    const double c = 2.0 * (B - m) - 1.0;
    const double env = std::exp(log_admissible_norm(B, m) + (B - m) * std::log(xi) - 0.5 * xi);
    return env == 0.0 ? 0.0 : env * laguerre_L(m, c, xi);
}

cplx tau_wavefunction(HalfPlanePoint p, double B, int m, double xi) {
    check_admissible(B, m, xi);
    if (!(p.y > 0.0)) throw DomainError("half-plane point needs y > 0");
    const double c = 2.0 * (B - m) - 1.0;
    const double s = xi * p.y;
    const double mod = std::exp(log_admissible_norm(B, m) + (B - m) * std::log(s) - 0.5 * s);
    if (mod == 0.0) return 0.0;
    return mod * std::polar(1.0, 0.5 * xi * p.x) * laguerre_L(m, c, s);
}

HalfPlanePoint inverse_cayley(cplx z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("inverse_cayley: need |z| < 1");
    const double d = std::norm(1.0 - z);
    return {-2.0 * z.imag() / d, (1.0 - std::norm(z)) / d};
}

cplx kappa_wavefunction(cplx z, double B, int m, double xi) {
    check_admissible(B, m, xi);
    if (!(std::abs(z) < 1.0)) throw DomainError("kappa_wavefunction: need |z| < 1");
    const double c = 2.0 * (B - m) - 1.0;
    const cplx one_m = 1.0 - z;
    const double s = 1.0 - std::norm(z);
    const cplx e = (1.0 + z) / one_m;
    const double lm = log_admissible_norm(B, m) + (2.0 * m - 2.0 * B) * std::log(std::abs(one_m)) +
                      (B - m) * std::log(s * xi) - 0.5 * xi * e.real();
    const double ph = -2.0 * B * std::arg(one_m) - 0.5 * xi * e.imag();
    if (std::exp(lm) == 0.0) return 0.0;
    return std::polar(std::exp(lm), ph) * laguerre_L(m, c, xi * s / std::norm(one_m));
}

cplx kappa_tilde_wavefunction(DiskPoint pt, const ModelParams& p, double xi) {
    disk_ratio(p, pt);
    if (!(xi > 0.0)) throw DomainError("xi must be positive");
    const double x2 = xi * xi;
    // the envelope vanishes at both ends faster than the sqrt(2/xi) factor grows
    if (!std::isnormal(x2)) return 0.0;
    return std::sqrt(2.0 / xi) * kappa_wavefunction(pt.z / p.R, p.tau(), p.m, x2);
}

double number_state(int j, const ModelParams& p, double xi) {
    p.validate();
    if (j < 0) throw IndexError("number_state: j must be non-negative");
    if (!(xi > 0.0)) throw DomainError("xi must be positive");
    const double a = p.alpha();
    const double lg = 0.5 * (std::log(2.0) + std::lgamma(j + 1.0) - std::lgamma(a + 1.0 + j)) +
                      (a + 0.5) * std::log(xi) - 0.5 * xi * xi;
    const double env = std::exp(lg);
    return env == 0.0 ? 0.0 : env * laguerre_L(j, a, xi * xi);
}

cplx gamma_coeff(int j, const ModelParams& p, DiskPoint pt) {
    const double x = disk_ratio(p, pt);
    if (j < 0) throw IndexError("gamma_coeff: j must be non-negative");
    const int m = p.m;
    const int lo = std::min(m, j), hi = std::max(m, j), d = hi - lo;
    const double a = p.alpha();
    const double log_tau = std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0) +
                           log_gamma_ratio(a + 1.0 + hi, a + 1.0 + lo).log_abs;
    if (d > 0 && x == 0.0) return 0.0;
    double lm = 0.5 * (std::log(a / M_PI) + log_tau) - m * std::log1p(-x);
    if (d > 0) lm += 0.5 * d * std::log(x);
    const double sign = ((m + lo) % 2) ? -1.0 : 1.0;
    const double th = pt.z == 0.0 ? 0.0 : std::arg(pt.z);
    return sign * std::exp(lm) * jacobi_P(lo, d, a, 1.0 - 2.0 * x) * std::polar(1.0, -(m - j) * th);
}

double normalization_N(const ModelParams& p, DiskPoint pt) {
    const double x = disk_ratio(p, pt);
    return p.alpha() / M_PI * std::exp(-2.0 * p.tau() * std::log1p(-x));
}

double measure_density(const ModelParams& p, DiskPoint pt) {
    const double x = disk_ratio(p, pt);
    return p.alpha() / (M_PI * p.R * p.R * (1.0 - x) * (1.0 - x));
}

cplx kernel_halfplane(cplx w, cplx zeta, double B, int m) {
    if (!(w.imag() > 0.0) || !(zeta.imag() > 0.0)) {
        throw DomainError("kernel_halfplane: points must lie in the upper half-plane");
    }
    if (m < 0) throw DomainError("kernel_halfplane: m must be non-negative");
    const cplx d = w - std::conj(zeta);
    const double t = 4.0 * w.imag() * zeta.imag() / std::norm(d);
    SignedLog g = log_gamma_ratio(2.0 * B - m, 2.0 * B - 2.0 * m);
    const double amp = ((m % 2) ? -1.0 : 1.0) * g.sign *
                       std::exp(g.log_abs - std::lgamma(m + 1.0) + (B - m) * std::log(t));
    const cplx phase = cpow((zeta - std::conj(w)) / d, B);
    return amp * phase * hyp_2F1(-m, 2.0 * B - m, 2.0 * (B - m), t);
}

cplx kernel_disk(cplx z, cplx w, double B, int m) {
    if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0)) {
        throw DomainError("kernel_disk: points must lie in the unit disk");
    }
    if (m < 0) throw DomainError("kernel_disk: m must be non-negative");
    const double c = 2.0 * (B - m) - 1.0;
    const cplx u = 1.0 - z * std::conj(w);
    const double q = (1.0 - std::norm(z)) * (1.0 - std::norm(w)) / std::norm(u);
    return c / M_PI * cpow(u, -2.0 * B) * std::pow(q, -m) * jacobi_P(m, 0.0, c, 2.0 * q - 1.0);
}

}  // namespace hyperq
