#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyperq/specfun.hpp"
#include "hyperq/types.hpp"

namespace hyperq {

enum class EndpointSubstitution { none, log_left, exp_right, both };

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_depth = 40;
    EndpointSubstitution endpoint_substitution = EndpointSubstitution::both;

    void validate() const;
};

struct VerificationReport {
    std::string label;
    cplx formula_value;
    cplx oracle_value;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    double runtime_ms = 0.0;
};

VerificationReport make_report(std::string label, cplx formula, cplx oracle, double tol,
                               double runtime_ms = 0.0);

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<cplx(double)>;

// Adaptive Gauss-Kronrod on [a, b] after the chosen endpoint map.
cplx integrate(const ComplexFn& f, double a, double b, const QuadratureSpec& q = {});
double integrate_real(const RealFn& f, double a, double b, const QuadratureSpec& q = {});
cplx integrate_radial(const ComplexFn& f, double L, const QuadratureSpec& q = {});
// int_0^inf f(xi) dxi through xi = e^t.
cplx integrate_halfline(const ComplexFn& f, const QuadratureSpec& q = {});
// 2 pi int_0^R g(r) w(r) r dr for radially symmetric integrands.
double integrate_disk_radialized(const RealFn& g, const RealFn& weight, double R,
                                 const QuadratureSpec& q = {});
// Full polar integral over the disk of radius R, for integrands with angular dependence.
cplx integrate_disk_polar(const std::function<cplx(double, double)>& f, double R,
                          const QuadratureSpec& q = {});

cplx cf_oracle(const RadialDensity& d, double u, const QuadratureSpec& q = {});
double moment_oracle(const RadialDensity& d, int k, const QuadratureSpec& q = {});

struct LimitFit {
    double slope = 0.0;
    bool monotone = false;
    int points_used = 0;
};

// Least-squares slope of log err against log R over points above 1e3 * noise_floor.
LimitFit limit_rate(const std::function<double(double)>& err, const std::vector<double>& Rs,
                    double noise_floor = 1e-15);
LimitFit limit_rate_from(const std::vector<double>& Rs, const std::vector<double>& errs,
                         double noise_floor = 1e-15);

// <j| H |j> by second differences on a uniform grid, H the isotonic oscillator.
double isotonic_rayleigh_quotient(int j, const ModelParams& p, double h = 1e-3, double xi_max = 12.0);

}  // namespace hyperq
