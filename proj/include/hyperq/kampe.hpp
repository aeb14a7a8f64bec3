#pragma once

#include <vector>

#include "hyperq/specfun.hpp"

namespace hyperq {

// F^{p:q:k}_{l:m:n}(x, y): a_top and alpha_bot carry (.)_{r+s}, b_top and
// beta_bot carry (.)_r, c_top and gamma_bot carry (.)_s.
struct KdFParams {
    std::vector<double> a_top;
    std::vector<double> b_top;
    std::vector<double> c_top;
    std::vector<double> alpha_bot;
    std::vector<double> beta_bot;
    std::vector<double> gamma_bot;
};

cplx kampe_de_feriet(const KdFParams& p, cplx x, cplx y, const SeriesConfig& cfg = {});
// Terminating case only, accumulated in 50 significant digits; the sums at
// (1, 1) behind the linearization coefficients cancel heavily.
double kampe_de_feriet_terminating(const KdFParams& p, double x, double y);

// Both sides of the binomial Kampe de Feriet summation formula.
// rhs uses 2F1(a, b; c | w); rhs_euler uses the (c-a, c-b) form reached by
// the Euler transformation. The two agree whenever both series are defined.
struct BinomialSides {
    cplx lhs;
    cplx rhs;
    cplx rhs_euler;
};

BinomialSides kdf_binomial_sides(int n, double a, double b, double c, cplx x,
                           const SeriesConfig& cfg = {});

// Coefficients C_k with (P_l^{(a,b)}(x))^2 = sum_k C_k P_k^{(a, b-1)}(x).
std::vector<double> jacobi_linearization_coeffs(int l, double a, double b);
// Same expansion against an arbitrary target family P_k^{(ta, tb)}.
std::vector<double> jacobi_linearization_coeffs(int l, double a, double b, double ta, double tb);

}  // namespace hyperq
