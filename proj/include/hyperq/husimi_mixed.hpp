#pragma once

#include <vector>

#include "hyperq/husimi_pure.hpp"

namespace hyperq {

// Levels eta_j = j + 4(tau - m) - 1 used by Z, Theta and the bound.
struct SpectrumView {
    double tau = 0.0;
    int m = 0;

    double eta(int j) const { return j + 4.0 * (tau - m) - 1.0; }
};

SpectrumView spectrum(const ModelParams& p);
double eigenvalue_eta(int j, const ModelParams& p);
// Exact eigenvalue of the isotonic oscillator on number_state(j): 2j + 2(tau - m).
double isotonic_eigenvalue(int j, const ModelParams& p);

double partition_Z(const MixedStateSpec& ms);
double heat_kernel(const MixedStateSpec& ms, double r, double rho);

// Q_beta at |z|^2 = lambda, from a k-sum of nonnegative terms.
double q_mixed_radial(const MixedStateSpec& ms, double lambda);
double q_mixed_closed(const MixedStateSpec& ms, DiskPoint pt);
// Power-times-Jacobi form, evaluated literally; undefined where |z|^2 = R^2 e^{-beta}.
double q_mixed_literal(const MixedStateSpec& ms, double lambda);
// Flat-space limit in X = 2B|z|^2.
double q_mixed_euclid(double beta, double B, int m, cplx z);

RadialDensity radial_density_mixed(const MixedStateSpec& ms);

cplx cf_mixed(const MixedStateSpec& ms, double u, const SeriesConfig& cfg = {});
double mean_mixed(const MixedStateSpec& ms, const SeriesConfig& cfg = {});
double second_moment_mixed(const MixedStateSpec& ms, const SeriesConfig& cfg = {});
double var_mixed(const MixedStateSpec& ms, const SeriesConfig& cfg = {});

cplx cf_mixed_euclid_limit(double beta, double B, int m, double u);
double laguerre_photon_pmf(int m, double lambda, double beta);

// Theta = -(1/beta) sum_j log(1 + eps e^{-beta eta_j}).
double thermo_trace(const MixedStateSpec& ms);

// (1/beta) int phi_eps(S(z)) d mu, S = Z Q_beta (literal = false) or S = Q_beta.
double berezin_lieb_lhs(const MixedStateSpec& ms, bool literal = false, const QuadratureSpec& q = {});

struct BerezinLiebSweep {
    int m_star = 0;
    double bound = 0.0;
    double theta_at_m_star = 0.0;
    std::vector<double> theta_per_m;
    std::vector<double> lhs_per_m;
    std::vector<double> lhs_literal_per_m;
    std::vector<double> gap_per_m;
};

BerezinLiebSweep berezin_lieb_sweep(double beta, double epsilon, double B, double R,
                                    const QuadratureSpec& q = {});
double berezin_lieb_lower_bound(double beta, double epsilon, double B, double R,
                                const QuadratureSpec& q = {});

}  // namespace hyperq
