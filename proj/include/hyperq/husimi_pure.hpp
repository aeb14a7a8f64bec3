#pragma once

#include <vector>

#include "hyperq/coherent.hpp"
#include "hyperq/verify.hpp"

namespace hyperq {

double tau_factor(const PureStateSpec& s);

// Q_j at |z|^2 = lambda.
double q_pure_radial(const PureStateSpec& s, double lambda);
double q_pure(const PureStateSpec& s, DiskPoint pt);
double q_pure_euclid(int j, int m, double B, cplx z);

RadialDensity radial_density(const PureStateSpec& s);
double cdf_lambda(const PureStateSpec& s, double r2, const QuadratureSpec& q = {});

double cjk_coeff(const PureStateSpec& s, int k);
// Large-R form of cjk_coeff; depends on (m, j) only.
double cjk_coeff_limit(int m, int j, int k);

cplx cf_pure(const PureStateSpec& s, double u, const SeriesConfig& cfg = {});
// Euclidean characteristic function in the variable 2B|z|^2, evaluated at u/(2B).
cplx cf_pure_euclid(int j, int m, double B, double u);

double mean_pure(const PureStateSpec& s);
double second_moment_pure(const PureStateSpec& s);
double var_pure(const PureStateSpec& s);

// Radii in (0, R) where Q_j vanishes, ascending.
std::vector<double> zeros_of_q(const PureStateSpec& s);

}  // namespace hyperq
