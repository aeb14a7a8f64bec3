#include "hyperq/suite.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "hyperq/husimi_mixed.hpp"

namespace hyperq {

namespace {

template <class F>
VerificationReport timed(const std::string& label, double tol, F f) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto [formula, oracle] = f();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return make_report(label, formula, oracle, tol, ms);
}

std::string num(double v) {
    std::string s = std::to_string(v);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

}  // namespace

std::vector<VerificationReport> default_suite(const SuiteOptions& opt) {
    const ModelParams p{1.0, 1.5, 1};
    const auto& q = opt.quad;
    const auto& cfg = opt.series;
    std::vector<VerificationReport> out;

    for (int j = 0; j <= 3; ++j) {
        const PureStateSpec s{j, p};
        out.push_back(timed("pure/normalization/j=" + std::to_string(j), 1e-7, [&] {
            const RadialDensity d = radial_density(s);
            return std::pair<cplx, cplx>(1.0, integrate_real(d.eval, 0.0, d.support_end, q));
        }));
    }
    const PureStateSpec s2{2, p};
    const RadialDensity d2 = radial_density(s2);
    for (double u : {0.5, 1.0, 3.0}) {
        out.push_back(timed("pure/cf/j=2/u=" + num(u), 1e-6,
                            [&] { return std::pair<cplx, cplx>(cf_pure(s2, u, cfg), cf_oracle(d2, u, q)); }));
    }
    out.push_back(timed("pure/mean/j=2", 1e-7,
                        [&] { return std::pair<cplx, cplx>(mean_pure(s2), moment_oracle(d2, 1, q)); }));
    out.push_back(timed("pure/second_moment/j=2", 1e-7,
                        [&] { return std::pair<cplx, cplx>(second_moment_pure(s2), moment_oracle(d2, 2, q)); }));

    const MixedStateSpec ms{0.7, p, 1.0};
    const RadialDensity dm = radial_density_mixed(ms);
    out.push_back(timed("mixed/normalization/beta=0.7", 1e-7, [&] {
        return std::pair<cplx, cplx>(1.0, integrate_real(dm.eval, 0.0, dm.support_end, q));
    }));
    for (double u : {0.5, 1.0, 3.0}) {
        out.push_back(timed("mixed/cf/beta=0.7/u=" + num(u), 1e-6,
                            [&] { return std::pair<cplx, cplx>(cf_mixed(ms, u, cfg), cf_oracle(dm, u, q)); }));
    }
    out.push_back(timed("mixed/mean/beta=0.7", 1e-6,
                        [&] { return std::pair<cplx, cplx>(mean_mixed(ms, cfg), moment_oracle(dm, 1, q)); }));
    out.push_back(timed("mixed/second_moment/beta=0.7", 1e-6, [&] {
        return std::pair<cplx, cplx>(second_moment_mixed(ms, cfg), moment_oracle(dm, 2, q));
    }));
    out.push_back(timed("mixed/closed_vs_series/|z|=0.4R", 1e-8, [&] {
        const double lambda = 0.16 * p.R * p.R;
        const double xi = std::exp(-ms.beta);
        double series = 0.0, w = 1.0 - xi;
        for (int j = 0; w > 1e-18; ++j, w *= xi) series += w * q_pure_radial({j, p}, lambda);
        return std::pair<cplx, cplx>(q_mixed_radial(ms, lambda), series);
    }));
    out.push_back(timed("mixed/partition_function/beta=1", 1e-12, [&] {
        const MixedStateSpec m1{1.0, p, 1.0};
        double sum = 0.0;
        for (int j = 0; j < 200; ++j) sum += std::exp(-m1.beta * eigenvalue_eta(j, p));
        return std::pair<cplx, cplx>(partition_Z(m1), sum);
    }));
    out.push_back(timed("mixed/heat_kernel/spectral_sum", 1e-8, [&] {
        const MixedStateSpec mh{0.8, p, 1.0};
        const double r = 1.0, rho = 1.3;
        double sum = 0.0;
        for (int j = 0; j < 80; ++j) {
            sum += std::exp(-mh.beta * isotonic_eigenvalue(j, p)) * number_state(j, p, r) * number_state(j, p, rho);
        }
        return std::pair<cplx, cplx>(heat_kernel(mh, r, rho), sum);
    }));
    for (int j = 0; j <= 2; ++j) {
        out.push_back(timed("oscillator/eigenvalue/j=" + std::to_string(j), 1e-4, [&] {
            return std::pair<cplx, cplx>(isotonic_eigenvalue(j, p), isotonic_rayleigh_quotient(j, p));
        }));
    }
    out.push_back(timed("coherent/normalization_vs_gamma_sum/|z|=0.3R", 1e-8, [&] {
        const DiskPoint pt{cplx(0.3 * p.R, 0.0) * std::polar(1.0, 0.4)};
        const double N = normalization_N(p, pt);
        double sum = 0.0;
        for (int j = 0; j < 400; ++j) sum += std::norm(gamma_coeff(j, p, pt));
        return std::pair<cplx, cplx>(N, sum);
    }));
    out.push_back(timed("bound/berezin_lieb/beta=1/eps=0.5", 0.0, [&] {
        const BerezinLiebSweep sw = berezin_lieb_sweep(1.0, 0.5, p.B, p.R, q);
        double worst = 0.0;
        for (double g : sw.gap_per_m) worst = std::min(worst, g);
        // formula: negative part of the smallest gap; oracle: 0
        return std::pair<cplx, cplx>(worst, 0.0);
    }));

    if (opt.failure_fixture) {
        out.push_back(make_report("fixture/forced_failure", 1.0, 2.0, 1e-12));
    }
    return out;
}

}  // namespace hyperq
