#pragma once

#include <complex>
#include <functional>
#include <variant>

namespace hyperq {

using cplx = std::complex<double>;

// (B, R, m) with 2BR^2 > 1 and m <= floor(BR^2 - 1/2).
struct ModelParams {
    double B = 1.0;
    double R = 1.0;
    int m = 0;

    double tau() const { return B * R * R; }
    // 2(BR^2 - m) - 1, positive for admissible params
    double alpha() const { return 2.0 * (tau() - m) - 1.0; }
    int max_level() const;
    void validate() const;
};

// Disk label; |z| < R is checked where the point meets a ModelParams.
struct DiskPoint {
    cplx z;
};

struct HalfPlanePoint {
    double x = 0.0;
    double y = 1.0;
};

struct PureStateSpec {
    int j = 0;
    ModelParams params;
};

struct MixedStateSpec {
    double beta = 1.0;
    ModelParams params;
    double epsilon = 1.0;

    void validate() const;
};

// Density on [0, support_end] in the variable lambda = |z|^2.
struct RadialDensity {
    double support_end = 1.0;
    std::function<double(double)> eval;
    std::variant<PureStateSpec, MixedStateSpec> meta;

    double operator()(double lambda) const { return eval(lambda); }
};

}  // namespace hyperq
