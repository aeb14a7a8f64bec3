#include "hyperq/specfun.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>

namespace hyperq {

namespace {

constexpr double kCondLimit = 1e6;

// Counts successive small terms; a single small term inside a lacunary stretch
// does not stop the series.
class StopRule {
public:
    explicit StopRule(const SeriesConfig& cfg) : cfg_(cfg) {}

    bool done(double term_abs, double sum_abs) {
        if (term_abs <= cfg_.rel_tol * sum_abs) {
            return ++small_ >= cfg_.consecutive_small;
        }
        small_ = 0;
        return false;
    }

private:
    const SeriesConfig& cfg_;
    int small_ = 0;
};

std::optional<int> termination_index(const std::vector<double>& a) {
    std::optional<int> n;
    for (double ai : a) {
        if (is_nonpositive_integer(ai)) {
            int k = static_cast<int>(-ai);
            if (!n || k < *n) n = k;
        }
    }
    return n;
}

}  // namespace

void SeriesConfig::validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("SeriesConfig: rel_tol must be positive");
    if (max_terms < 1) throw DomainError("SeriesConfig: max_terms must be >= 1");
    if (consecutive_small < 1) throw DomainError("SeriesConfig: consecutive_small must be >= 1");
}

SeriesConfig SeriesConfig::from_env() {
    SeriesConfig cfg;
    if (const char* s = std::getenv("HYP_TOL")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end == s || *end != '\0' || !(v > 0.0)) {
            throw DomainError(std::string("HYP_TOL is not a positive number: ") + s);
        }
        cfg.rel_tol = v;
    }
    return cfg;
}

double SignedLog::value() const {
    return sign == 0 ? 0.0 : sign * std::exp(log_abs);
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

double pochhammer(double a, int k) {
    if (k < 0) throw DomainError("pochhammer: negative k");
    double p = 1.0;
    for (int i = 0; i < k; ++i) {
        p *= a + i;
        if (p == 0.0) return 0.0;
    }
    return p;
}

SignedLog log_pochhammer(double a, int k) {
    if (k < 0) throw DomainError("log_pochhammer: negative k");
    if (k == 0) return {0.0, 1};
    if (is_nonpositive_integer(a) && -a < k) return {0.0, 0};
    if (k <= 32) {
        SignedLog r{0.0, 1};
        for (int i = 0; i < k; ++i) {
            double f = a + i;
            r.log_abs += std::log(std::fabs(f));
            if (f < 0) r.sign = -r.sign;
        }
        return r;
    }
    if (is_nonpositive_integer(a)) {
        // (-n)_k = (-1)^k n!/(n-k)!
        double n = -a;
        return {std::lgamma(n + 1) - std::lgamma(n - k + 1), (k % 2) ? -1 : 1};
    }
    return log_gamma_ratio(a + k, a);
}

double binomial_general(double a, int k) {
    if (k < 0) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (a - i) / (i + 1);
    return r;
}

double log_gamma(double x) {
    if (is_nonpositive_integer(x)) throw PoleError("log_gamma: pole at non-positive integer");
    if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
    return std::lgamma(x);
}

SignedLog log_gamma_signed(double x) {
    if (is_nonpositive_integer(x)) {
        throw PoleError("Gamma pole at non-positive integer " + std::to_string(x));
    }
    int sg = 1;
    double v = ::lgamma_r(x, &sg);
    return {v, sg};
}

SignedLog log_gamma_ratio(double num, double den) {
    SignedLog n = log_gamma_signed(num);
    SignedLog d = log_gamma_signed(den);
    return {n.log_abs - d.log_abs, n.sign * d.sign};
}

double gamma_ratio(double num, double den) {
    return log_gamma_ratio(num, den).value();
}

double log_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta_fn: arguments must be positive");
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta_fn(double a, double b) {
    return std::exp(log_beta(a, b));
}

cplx cpow(cplx z, double e) {
    if (e == std::floor(e) && std::fabs(e) <= 64.0) {
        int n = static_cast<int>(std::fabs(e));
        cplx r = 1.0, base = z;
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return e < 0 ? 1.0 / r : r;
    }
    if (z == 0.0) return e > 0 ? cplx(0.0) : cplx(std::numeric_limits<double>::infinity());
    return std::exp(e * std::log(z));
}

cplx hyp_pFq(const std::vector<double>& a, const std::vector<double>& c, cplx z,
             const SeriesConfig& cfg) {
    cfg.validate();
    const std::optional<int> n = termination_index(a);
    for (double ci : c) {
        if (is_nonpositive_integer(ci) && (!n || *n > -ci)) {
            throw PoleError("hyp_pFq: denominator parameter " + std::to_string(ci) +
                            " reaches a pole before the series terminates");
        }
    }
    const std::size_t p = a.size(), q = c.size();
    if (!n && z != 0.0) {
        if (p > q + 1) throw DivergenceError("hyp_pFq: p > q+1 and the series does not terminate");
        if (p == q + 1 && std::abs(z) >= 1.0) {
            throw DivergenceError("hyp_pFq: |z| >= 1 outside the disk of convergence");
        }
    }
    if (z == 0.0) return 1.0;

    auto ratio = [&](int k) {
        cplx r = z / double(k + 1);
        for (double ai : a) r *= ai + k;
        for (double ci : c) r /= ci + k;
        return r;
    };

    cplx term = 1.0, sum = 1.0;
    if (n) {
        for (int k = 0; k < *n; ++k) {
            term *= ratio(k);
            sum += term;
        }
        return sum;
    }
    StopRule stop(cfg);
    for (int k = 0; k < cfg.max_terms; ++k) {
        term *= ratio(k);
        sum += term;
        if (stop.done(std::abs(term), std::abs(sum))) return sum;
    }
    throw NoConvergenceError("hyp_pFq: max_terms reached", sum);
}

cplx hyp_2F1(double a, double b, double c, cplx z, const SeriesConfig& cfg) {
    // Pfaff: 2F1(a,b;c|z) = (1-z)^{-a} 2F1(a,c-b;c|z/(z-1)), a smaller argument when |1-z| > 1.
    const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (!terminating && !is_nonpositive_integer(c) && std::abs(z) < 1.0 && std::abs(1.0 - z) > 1.0) {
        return cpow(1.0 - z, -a) * hyp_pFq({a, c - b}, {c}, z / (z - 1.0), cfg);
    }
    return hyp_pFq({a, b}, {c}, z, cfg);
}

namespace {

// Below this |z| the double-precision 1F1 series is always used.
constexpr double kWideArgument = 10.0;

// Plain series carried in Digits decimal digits; the caller guarantees convergence.
template <unsigned Digits>
cplx hyp_1F1_wide(double a, double c, cplx z, const SeriesConfig& cfg) {
    using R = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>>;
    const R zr = z.real(), zi = z.imag(), ra = a, rc = c;
    R tr = 1, ti = 0, sr = 1, si = 0;
    const R eps = R(cfg.rel_tol) * R(1e-3);
    int small = 0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        // a + k and c + k must be formed here: a double rounding per factor is
        // amplified by the peak term just like rounding in the sum
        const R f = (ra + k) / ((rc + k) * (k + 1));
        const R nr = (tr * zr - ti * zi) * f;
        const R ni = (tr * zi + ti * zr) * f;
        tr = nr;
        ti = ni;
        sr += tr;
        si += ti;
        const R tabs = abs(tr) + abs(ti), sabs = abs(sr) + abs(si);
        if (k > std::abs(z) && tabs <= eps * sabs) {
            if (++small >= cfg.consecutive_small) return {static_cast<double>(sr), static_cast<double>(si)};
        } else {
            small = 0;
        }
    }
    throw NoConvergenceError("hyp_1F1: max_terms reached", cplx(static_cast<double>(sr), static_cast<double>(si)));
}

}  // namespace

// log10 of the largest series term, the number of digits the partial sums can lose.
double log10_peak_term(double a, double c, double r) {
    double lt = 0.0, peak = 0.0;
    for (int k = 0; k < 100000; ++k) {
        const double q = std::log10(r * std::fabs((a + k) / ((c + k) * (k + 1.0))));
        if (q < 0.0 && k > std::fabs(a) + std::fabs(c)) break;
        lt += q;
        peak = std::max(peak, lt);
    }
    return peak;
}

cplx hyp_1F1(double a, double c, cplx z, const SeriesConfig& cfg) {
    if (std::abs(z) <= kWideArgument || is_nonpositive_integer(a) || is_nonpositive_integer(c)) {
        return hyp_pFq({a}, {c}, z, cfg);
    }
    cfg.validate();
    // Kummer turns a negative real argument into a positive one with no cancellation.
    if (z.imag() == 0.0 && z.real() < 0.0) return std::exp(z) * hyp_1F1(c - a, c, -z, cfg);
    if (z.imag() == 0.0 && a > 0.0 && c > 0.0) return hyp_pFq({a}, {c}, z, cfg);
    const double lost = log10_peak_term(a, c, std::abs(z));
    if (lost < 2.0) return hyp_pFq({a}, {c}, z, cfg);
    if (lost < 30.0) return hyp_1F1_wide<50>(a, c, z, cfg);
    if (lost < 80.0) return hyp_1F1_wide<100>(a, c, z, cfg);
    if (lost < 180.0) return hyp_1F1_wide<200>(a, c, z, cfg);
    if (lost < 480.0) return hyp_1F1_wide<500>(a, c, z, cfg);
    throw NoConvergenceError("hyp_1F1: series cancellation exceeds the supported precision",
                             hyp_pFq({a}, {c}, z, cfg));
}

cplx gauss_2F1_euler(double a, double b, double c, cplx z, const SeriesConfig& cfg) {
    if (z.imag() == 0.0 && z.real() >= 1.0) {
        throw DomainError("gauss_2F1_euler: z on the branch cut [1, inf)");
    }
    return cpow(1.0 - z, c - a - b) * hyp_2F1(c - a, c - b, c, z, cfg);
}

cplx bessel_I(double a, cplx z, const SeriesConfig& cfg) {
    cfg.validate();
    if (!(a > -1.0)) throw DomainError("bessel_I: order must exceed -1");
    if (z == 0.0) return a == 0.0 ? 1.0 : 0.0;
    const cplx q = 0.25 * z * z;
    cplx term = 1.0, sum = 1.0;
    StopRule stop(cfg);
    bool ok = false;
    for (int k = 0; k < cfg.max_terms; ++k) {
        term *= q / ((k + 1.0) * (a + k + 1.0));
        sum += term;
        if (stop.done(std::abs(term), std::abs(sum))) {
            ok = true;
            break;
        }
    }
    const cplx pref = std::exp(a * std::log(0.5 * z) - std::lgamma(a + 1.0));
    if (!ok) throw NoConvergenceError("bessel_I: max_terms reached", pref * sum);
    return pref * sum;
}

double log_bessel_I(double a, double x, const SeriesConfig& cfg) {
    cfg.validate();
    if (!(a > -1.0)) throw DomainError("log_bessel_I: order must exceed -1");
    if (!(x > 0.0)) throw DomainError("log_bessel_I: argument must be positive");
    const double lq = 2.0 * std::log(0.5 * x);
    double lt = a * std::log(0.5 * x) - std::lgamma(a + 1.0);
    double ls = lt;
    StopRule stop(cfg);
    for (int k = 0; k < cfg.max_terms; ++k) {
        lt += lq - std::log(k + 1.0) - std::log(a + k + 1.0);
        const double hi = std::max(ls, lt);
        ls = hi + std::log1p(std::exp(std::min(ls, lt) - hi));
        if (stop.done(std::exp(lt - ls), 1.0)) return ls;
    }
    throw NoConvergenceError("log_bessel_I: max_terms reached", std::exp(ls));
}

namespace {

struct Evaluated {
    double value;
    double cond;
};

Evaluated cond_of(double sum, double abs_sum) {
    double c = sum == 0.0 ? (abs_sum == 0.0 ? 1.0 : std::numeric_limits<double>::infinity())
                          : abs_sum / std::fabs(sum);
    return {sum, c};
}

Evaluated jacobi_direct(int n, double a, double b, double x) {
    const double u = 0.5 * (x - 1.0), v = 0.5 * (x + 1.0);
    double s = 0.0, s_abs = 0.0;
    for (int k = 0; k <= n; ++k) {
        double t = binomial_general(n + a, n - k) * binomial_general(n + b, k) * std::pow(u, k) *
                   std::pow(v, n - k);
        s += t;
        s_abs += std::fabs(t);
    }
    return cond_of(s, s_abs);
}

// (p+1)_n/n! 2F1(-n, n+p+q+1; p+1 | y) as an exact finite sum.
Evaluated jacobi_gauss_form(int n, double p, double q, double y) {
    double t = 1.0, s = 1.0, s_abs = 1.0;
    for (int k = 0; k < n; ++k) {
        t *= (k - n) * (n + p + q + 1.0 + k) / ((p + 1.0 + k) * (k + 1.0)) * y;
        s += t;
        s_abs += std::fabs(t);
    }
    const double pre = binomial_general(n + p, n);
    return {pre * s, cond_of(s, s_abs).cond};
}

double jacobi_recurrence(int n, double a, double b, double x) {
    double p0 = 1.0;
    if (n == 0) return p0;
    double p1 = (a + 1.0) + (a + b + 2.0) * 0.5 * (x - 1.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        const double c1 = 2.0 * (k + 1) * (k + a + b + 1.0) * s;
        const double c2 = (s + 1.0) * ((s + 2.0) * s * x + a * a - b * b);
        const double c3 = 2.0 * (k + a) * (k + b) * (s + 2.0);
        const double p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

}  // namespace

double jacobi_P(int n, double a, double b, double x) {
    if (n < 0) throw DomainError("jacobi_P: negative degree");
    if (n == 0) return 1.0;
    Evaluated best{0.0, std::numeric_limits<double>::infinity()};
    if (n < 30) {
        best = jacobi_direct(n, a, b, x);
        if (best.cond <= kCondLimit) return best.value;
    }
    if (x >= 0.0 && a > -1.0) {
        Evaluated g = jacobi_gauss_form(n, a, b, 0.5 * (1.0 - x));
        if (g.cond <= kCondLimit) return g.value;
        if (g.cond < best.cond) best = g;
    } else if (x < 0.0 && b > -1.0) {
        Evaluated g = jacobi_gauss_form(n, b, a, 0.5 * (1.0 + x));
        if (n % 2) g.value = -g.value;
        if (g.cond <= kCondLimit) return g.value;
        if (g.cond < best.cond) best = g;
    }
    if (a > -1.0 && b > -1.0 && std::fabs(x) <= 1.0) return jacobi_recurrence(n, a, b, x);
    if (!std::isfinite(best.cond)) return jacobi_direct(n, a, b, x).value;
    return best.value;
}

double laguerre_L(int n, double a, double x) {
    if (n < 0) throw DomainError("laguerre_L: negative degree");
    if (n == 0) return 1.0;
    double s = 0.0, s_abs = 0.0, xk = 1.0, fact = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            xk *= -x;
            fact *= k;
        }
        double t = binomial_general(n + a, n - k) * xk / fact;
        s += t;
        s_abs += std::fabs(t);
    }
    if (cond_of(s, s_abs).cond <= kCondLimit || !(a > -1.0)) return s;
    double l0 = 1.0, l1 = 1.0 + a - x;
    for (int k = 1; k < n; ++k) {
        double l2 = ((2.0 * k + 1.0 + a - x) * l1 - (k + a) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

std::vector<double> jacobi_zeros(int n, double a, double b) {
    if (n < 1) throw DomainError("jacobi_zeros: degree must be positive");
    if (!(a > -1.0) || !(b > -1.0)) throw DomainError("jacobi_zeros: need a, b > -1");
    auto f = [&](double x) { return jacobi_P(n, a, b, x); };
    std::vector<double> roots;
    for (int m = 40 * n; m <= 40 * n * 1024 && static_cast<int>(roots.size()) < n; m *= 4) {
        roots.clear();
        // Chebyshev-clustered grid: zeros crowd toward the endpoints.
        std::vector<double> xs(m + 1);
        for (int i = 0; i <= m; ++i) xs[i] = -std::cos(M_PI * i / m);
        xs.front() = -1.0;
        xs.back() = 1.0;
        double fl = f(xs[0]);
        for (int i = 1; i <= m; ++i) {
            double lo = xs[i - 1], hi = xs[i];
            double fh = f(hi);
            if (fl == 0.0 && i > 1) roots.push_back(lo);
            if (fl * fh < 0.0) {
                double flo = fl, fhi = fh;
                int side = 0;
                for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
                    // Illinois secant step, plain bisection every fourth step
                    double mid = (it % 4 == 3) ? 0.5 * (lo + hi)
                                               : (lo * fhi - hi * flo) / (fhi - flo);
                    if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
                    double fm = f(mid);
                    if (fm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if (fm * flo < 0.0) {
                        hi = mid;
                        fhi = fm;
                        if (side == -1) flo *= 0.5;
                        side = -1;
                    } else {
                        lo = mid;
                        flo = fm;
                        if (side == 1) fhi *= 0.5;
                        side = 1;
                    }
                }
                roots.push_back(0.5 * (lo + hi));
            }
            fl = fh;
        }
    }
    if (static_cast<int>(roots.size()) != n) {
        throw NoConvergenceError("jacobi_zeros: could not bracket all zeros",
                                 static_cast<double>(roots.size()));
    }
    return roots;
}

SeriesSides laguerre_generating_check(double a, double b, double t, double x, double lambda,
                                      const SeriesConfig& cfg) {
    cfg.validate();
    if (!(a >= 0.0)) throw DomainError("laguerre_generating_check: need a >= 0");
    double lim = 1.0;
    if (std::fabs(1.0 - t) > 0.0) lim = std::min(1.0, 1.0 / std::fabs(1.0 - t));
    if (!(std::fabs(lambda) < lim)) {
        throw DomainError("laguerre_generating_check: |lambda| outside the convergence radius");
    }
    cplx lhs = 0.0;
    StopRule stop(cfg);
    bool ok = false;
    double lp = 1.0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        const cplx term = lp * hyp_2F1(-n, b, 1.0 + a, t, cfg) * laguerre_L(n, a, x);
        lhs += term;
        lp *= lambda;
        if (stop.done(std::abs(term), std::abs(lhs))) {
            ok = true;
            break;
        }
    }
    if (!ok) throw NoConvergenceError("laguerre_generating_check: lhs did not converge", lhs);
    const double d = 1.0 - lambda + t * lambda;
    const cplx rhs = std::pow(1.0 - lambda, b - 1.0 - a) / std::pow(d, b) *
                     std::exp(-x * lambda / (1.0 - lambda)) *
                     hyp_1F1(b, 1.0 + a, lambda * x * t / ((1.0 - lambda) * d), cfg);
    return {lhs, rhs};
}

}  // namespace hyperq
