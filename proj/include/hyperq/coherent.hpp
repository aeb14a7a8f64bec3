#pragma once

#include "hyperq/specfun.hpp"
#include "hyperq/types.hpp"

namespace hyperq {

double phi_admissible(double B, int m, double xi);
cplx tau_wavefunction(HalfPlanePoint p, double B, int m, double xi);
HalfPlanePoint inverse_cayley(cplx z);

// Disk-labelled coherent state on L^2(R+, dxi/xi); principal branch of (1-z)^{2B}.
cplx kappa_wavefunction(cplx z, double B, int m, double xi);
// Rescaled state on L^2(R+, dxi), unit norm for every |z| < R.
cplx kappa_tilde_wavefunction(DiskPoint pt, const ModelParams& p, double xi);

double number_state(int j, const ModelParams& p, double xi);
cplx gamma_coeff(int j, const ModelParams& p, DiskPoint pt);
double normalization_N(const ModelParams& p, DiskPoint pt);
// Density of d mu_{B,R,m} against Lebesgue measure on the disk.
double measure_density(const ModelParams& p, DiskPoint pt);

// K(w, zeta) = <tau_zeta | tau_w>, linear in the first slot.
cplx kernel_halfplane(cplx w, cplx zeta, double B, int m);
// K(z, w) = sum_j gamma_j(z) conj(gamma_j(w)) at R = 1.
cplx kernel_disk(cplx z, cplx w, double B, int m);

}  // namespace hyperq
