#pragma once

#include <complex>
#include <vector>

#include "hyperq/error.hpp"

namespace hyperq {

using cplx = std::complex<double>;

// Truncation policy shared by every infinite series in the library.
struct SeriesConfig {
    double rel_tol = 1e-12;
    int max_terms = 10000;
    int consecutive_small = 3;

    void validate() const;
    // Default config with rel_tol taken from HYP_TOL when that variable is set.
    static SeriesConfig from_env();
};

// Value held as sign * exp(log_abs). sign == 0 means an exact zero.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;

    double value() const;
};

bool is_nonpositive_integer(double x);

double pochhammer(double a, int k);
SignedLog log_pochhammer(double a, int k);
double binomial_general(double a, int k);

double log_gamma(double x);
SignedLog log_gamma_signed(double x);
SignedLog log_gamma_ratio(double num, double den);
double gamma_ratio(double num, double den);
double beta_fn(double a, double b);
double log_beta(double a, double b);

cplx hyp_pFq(const std::vector<double>& a, const std::vector<double>& c, cplx z,
             const SeriesConfig& cfg = {});
cplx hyp_2F1(double a, double b, double c, cplx z, const SeriesConfig& cfg = {});
cplx hyp_1F1(double a, double c, cplx z, const SeriesConfig& cfg = {});
cplx gauss_2F1_euler(double a, double b, double c, cplx z, const SeriesConfig& cfg = {});

cplx bessel_I(double a, cplx z, const SeriesConfig& cfg = {});
// log I_a(x) for real x > 0; stays finite where I_a(x) itself overflows.
double log_bessel_I(double a, double x, const SeriesConfig& cfg = {});

double jacobi_P(int n, double a, double b, double x);
double laguerre_L(int n, double a, double x);

// Phi_1(a, b; c | w, z): outer series in z, inner Gauss series in w.
cplx humbert_phi1(double a, double b, double c, cplx w, cplx z, const SeriesConfig& cfg = {});

// Zeros of P_n^{(a,b)} in (-1, 1), ascending.
std::vector<double> jacobi_zeros(int n, double a, double b);

struct SeriesSides {
    cplx lhs;
    cplx rhs;
};

// sum_n lambda^n 2F1(-n, b; 1+a | t) L_n^{(a)}(x) against its closed form.
SeriesSides laguerre_generating_check(double a, double b, double t, double x, double lambda,
                                      const SeriesConfig& cfg = {});

// Principal-branch complex power with exact integer powers.
cplx cpow(cplx z, double e);

}  // namespace hyperq
