#include "hyperq/verify.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "hyperq/coherent.hpp"

namespace hyperq {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

constexpr int kMaxIntervals = 20000;

struct Piece {
    double a, b;
    cplx value;
    double error;
    int depth;
    bool operator<(const Piece& o) const { return error < o.error; }
};

Piece rule(const ComplexFn& f, double a, double b, int depth) {
    double err = 0.0;
    cplx v = GK::integrate(f, a, b, 0, 0.0, &err);
    return {a, b, v, err, depth};
}

// Global adaptive bisection: always split the piece with the largest error.
cplx adaptive(const ComplexFn& f, double a, double b, const QuadratureSpec& q) {
    std::priority_queue<Piece> heap;
    heap.push(rule(f, a, b, 0));
    cplx total = heap.top().value;
    double err = heap.top().error;
    std::vector<Piece> frozen;
    while (err > std::max(q.abs_tol, q.rel_tol * std::abs(total))) {
        if (heap.empty() || static_cast<int>(heap.size() + frozen.size()) >= kMaxIntervals) {
            throw NoConvergenceError("quadrature: tolerance not reached", total);
        }
        Piece p = heap.top();
        heap.pop();
        if (p.depth >= q.max_depth) {
            frozen.push_back(p);
            continue;
        }
        const double mid = 0.5 * (p.a + p.b);
        Piece l = rule(f, p.a, mid, p.depth + 1), r = rule(f, mid, p.b, p.depth + 1);
        total += l.value + r.value - p.value;
        err += l.error + r.error - p.error;
        heap.push(l);
        heap.push(r);
    }
    return total;
}

// Map s in [0,1] to [a,b] with vanishing Jacobian at the selected ends.
ComplexFn substituted(const ComplexFn& f, double a, double b, EndpointSubstitution e) {
    const double w = b - a;
    switch (e) {
        case EndpointSubstitution::none:
            return [=](double s) { return w * f(a + w * s); };
        case EndpointSubstitution::log_left:
            return [=](double s) {
                const double s3 = s * s * s, x = a + w * s3 * s;
                // the map has collapsed onto the endpoint; its Jacobian is negligible there
                if (x == a) return cplx(0.0);
                return 4.0 * w * s3 * f(x);
            };
        case EndpointSubstitution::exp_right:
            return [=](double s) {
                const double t = 1.0 - s, t3 = t * t * t, x = b - w * t3 * t;
                if (x == b) return cplx(0.0);
                return 4.0 * w * t3 * f(x);
            };
        case EndpointSubstitution::both:
        default:
            return [=](double s) {
                const double t = 1.0 - s;
                const double s4 = s * s * s * s, t4 = t * t * t * t;
                const double d = s4 + t4;
                const double jac = 4.0 * s * s * s * t * t * t / (d * d);
                if (jac == 0.0) return cplx(0.0);
                return w * jac * f(a + w * s4 / d);
            };
    }
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("QuadratureSpec: tolerances must be positive");
    if (max_depth < 1) throw DomainError("QuadratureSpec: max_depth must be >= 1");
}

VerificationReport make_report(std::string label, cplx formula, cplx oracle, double tol,
                               double runtime_ms) {
    VerificationReport r;
    r.label = std::move(label);
    r.formula_value = formula;
    r.oracle_value = oracle;
    r.abs_err = std::abs(formula - oracle);
    const double scale = std::abs(oracle);
    r.rel_err = scale > 0.0 ? r.abs_err / scale : (r.abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    r.tol = tol;
    r.pass = r.abs_err <= tol || r.rel_err <= tol;
    r.runtime_ms = runtime_ms;
    return r;
}

cplx integrate(const ComplexFn& f, double a, double b, const QuadratureSpec& q) {
    q.validate();
    if (!(b > a)) {
        if (a == b) return 0.0;
        return -integrate(f, b, a, q);
    }
    return adaptive(substituted(f, a, b, q.endpoint_substitution), 0.0, 1.0, q);
}

double integrate_real(const RealFn& f, double a, double b, const QuadratureSpec& q) {
    return integrate([&](double x) { return cplx(f(x)); }, a, b, q).real();
}

cplx integrate_radial(const ComplexFn& f, double L, const QuadratureSpec& q) {
    if (!(L > 0.0)) throw DomainError("integrate_radial: L must be positive");
    return integrate(f, 0.0, L, q);
}

cplx integrate_halfline(const ComplexFn& f, const QuadratureSpec& q) {
    q.validate();
    // t = log xi over R, then t = v/(1-v^2) on (-1,1)
    ComplexFn g = [&](double v) {
        const double v2 = v * v;
        const double inv = 1.0 / (1.0 - v2);
        const double t = v * inv;
        if (std::fabs(t) > 700.0) return cplx(0.0);
        const double xi = std::exp(t);
        return f(xi) * xi * (1.0 + v2) * inv * inv;
    };
    QuadratureSpec inner = q;
    inner.endpoint_substitution = EndpointSubstitution::none;
    return adaptive(g, -1.0, 1.0, inner);
}

double integrate_disk_radialized(const RealFn& g, const RealFn& weight, double R,
                                 const QuadratureSpec& q) {
    if (!(R > 0.0)) throw DomainError("integrate_disk_radialized: R must be positive");
    // 2 pi int_0^R g w r dr = pi int_0^{R^2} g(sqrt l) w(sqrt l) dl
    auto h = [&](double l) {
        const double r = std::sqrt(l);
        return cplx(g(r) * weight(r));
    };
    return M_PI * integrate_radial(h, R * R, q).real();
}

cplx integrate_disk_polar(const std::function<cplx(double, double)>& f, double R,
                          const QuadratureSpec& q) {
    QuadratureSpec outer = q;
    QuadratureSpec inner = q;
    inner.endpoint_substitution = EndpointSubstitution::none;
    inner.rel_tol = q.rel_tol * 0.1;
    inner.abs_tol = q.abs_tol * 0.1;
    auto radial = [&](double r) {
        return r * integrate([&](double th) { return f(r, th); }, 0.0, 2.0 * M_PI, inner);
    };
    return integrate(radial, 0.0, R, outer);
}

cplx cf_oracle(const RadialDensity& d, double u, const QuadratureSpec& q) {
    return integrate_radial([&](double l) { return std::polar(d(l), u * l); }, d.support_end, q);
}

double moment_oracle(const RadialDensity& d, int k, const QuadratureSpec& q) {
    if (k != 1 && k != 2) throw DomainError("moment_oracle: k must be 1 or 2");
    return integrate_radial([&](double l) { return cplx(std::pow(l, k) * d(l)); }, d.support_end, q).real();
}

LimitFit limit_rate_from(const std::vector<double>& Rs, const std::vector<double>& errs,
                         double noise_floor) {
    if (Rs.size() != errs.size()) throw DomainError("limit_rate: size mismatch");
    LimitFit fit;
    fit.monotone = true;
    for (std::size_t i = 1; i < errs.size(); ++i) {
        if (!(errs[i] < errs[i - 1])) fit.monotone = false;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < Rs.size(); ++i) {
        if (!(errs[i] > 1e3 * noise_floor)) continue;
        const double x = std::log(Rs[i]), y = std::log(errs[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    fit.points_used = n;
    if (n < 2) {
        fit.slope = std::numeric_limits<double>::quiet_NaN();
        return fit;
    }
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return fit;
}

LimitFit limit_rate(const std::function<double(double)>& err, const std::vector<double>& Rs,
                    double noise_floor) {
    std::vector<double> e;
    e.reserve(Rs.size());
    for (double R : Rs) e.push_back(err(R));
    return limit_rate_from(Rs, e, noise_floor);
}

double isotonic_rayleigh_quotient(int j, const ModelParams& p, double h, double xi_max) {
    p.validate();
    const double a = p.alpha();
    const double c = (a * a - 0.25) / 2.0;
    const int n = static_cast<int>(std::ceil(xi_max / h));
    std::vector<double> f(n + 2);
    for (int i = 0; i <= n + 1; ++i) f[i] = i == 0 ? 0.0 : number_state(j, p, i * h);
    // trapezoid in xi; f vanishes at both ends
    double num = 0.0, den = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double x = i * h;
        const double d2 = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
        const double hf = -0.5 * d2 + (c / (x * x) + 0.5 * x * x) * f[i];
        num += f[i] * hf;
        den += f[i] * f[i];
    }
    return num / den;
}

}  // namespace hyperq
