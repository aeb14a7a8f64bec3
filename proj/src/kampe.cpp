#include "hyperq/kampe.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <utility>

namespace hyperq {

namespace {

std::optional<int> first_zero(const std::vector<double>& v) {
    std::optional<int> n;
    for (double x : v) {
        if (is_nonpositive_integer(x)) {
            int k = static_cast<int>(-x);
            if (!n || k < *n) n = k;
        }
    }
    return n;
}

// Multiplier taking a term from index i to i+1 along one axis.
// Returns nullopt when a numerator factor vanishes (series ends on this axis).
std::optional<cplx> step(const std::vector<double>& coupled_top, int ij,
                         const std::vector<double>& top, int i,
                         const std::vector<double>& coupled_bot,
                         const std::vector<double>& bot, cplx var) {
    cplx num = var, den = double(i + 1);
    for (double a : coupled_top) {
        if (a + ij == 0.0) return std::nullopt;
        num *= a + ij;
    }
    for (double b : top) {
        if (b + i == 0.0) return std::nullopt;
        num *= b + i;
    }
    for (double a : coupled_bot) {
        if (a + ij == 0.0) throw PoleError("kampe_de_feriet: denominator pole before termination");
        den *= a + ij;
    }
    for (double b : bot) {
        if (b + i == 0.0) throw PoleError("kampe_de_feriet: denominator pole before termination");
        den *= b + i;
    }
    return num / den;
}

void check_axis(std::size_t num, std::size_t den, cplx var, const char* axis) {
    if (var == 0.0) return;
    if (num > den + 1) {
        throw DivergenceError(std::string("kampe_de_feriet: non-terminating and divergent in ") + axis);
    }
    if (num == den + 1 && std::abs(var) >= 1.0) {
        throw DivergenceError(std::string("kampe_de_feriet: |") + axis + "| >= 1 on a non-terminating axis");
    }
}

}  // namespace

double kampe_de_feriet_terminating(const KdFParams& p, double x, double y) {
    using R = boost::multiprecision::cpp_bin_float_50;
    const auto na = first_zero(p.a_top), nb = first_zero(p.b_top), nc = first_zero(p.c_top);
    const bool r_ends = na || nb || x == 0.0, s_ends = na || nc || y == 0.0;
    if (!r_ends || !s_ends) throw DomainError("kampe_de_feriet_terminating: series does not terminate");
    constexpr int kBig = 1 << 30;
    const int rmax = x == 0.0 ? 0 : std::min(na.value_or(kBig), nb.value_or(kBig));
    const int smax = y == 0.0 ? 0 : std::min(na.value_or(kBig), nc.value_or(kBig));
    const int nmax = na.value_or(kBig);
    auto prod = [](const std::vector<double>& v, int i) {
        R f = 1;
        for (double a : v) f *= R(a) + i;
        return f;
    };
    auto nonzero = [](const R& d) {
        if (d == 0) throw PoleError("kampe_de_feriet: denominator pole before termination");
        return d;
    };
    R total = 0, head = 1;
    for (int s = 0; s <= smax; ++s) {
        R t = head;
        total += t;
        for (int r = 0; r < rmax && r + s < nmax; ++r) {
            t *= prod(p.a_top, r + s) * prod(p.b_top, r) * R(x) /
                 nonzero(prod(p.alpha_bot, r + s) * prod(p.beta_bot, r) * (r + 1));
            total += t;
        }
        if (s == smax || s + 1 > nmax) break;
        head *= prod(p.a_top, s) * prod(p.c_top, s) * R(y) /
                nonzero(prod(p.alpha_bot, s) * prod(p.gamma_bot, s) * (s + 1));
    }
    return static_cast<double>(total);
}

cplx kampe_de_feriet(const KdFParams& p0, cplx x0, cplx y0, const SeriesConfig& cfg) {
    cfg.validate();
    KdFParams p = p0;
    cplx x = x0, y = y0;
    const bool coupled_ends = first_zero(p.a_top).has_value();
    bool r_ends = coupled_ends || first_zero(p.b_top) || x == 0.0;
    bool s_ends = coupled_ends || first_zero(p.c_top) || y == 0.0;
    // The outer loop runs over the axis that terminates.
    if (r_ends && !s_ends) {
        std::swap(p.b_top, p.c_top);
        std::swap(p.beta_bot, p.gamma_bot);
        std::swap(x, y);
        std::swap(r_ends, s_ends);
    }
    if (!r_ends) check_axis(p.a_top.size() + p.b_top.size(), p.alpha_bot.size() + p.beta_bot.size(), x, "x");
    if (!s_ends) check_axis(p.a_top.size() + p.c_top.size(), p.alpha_bot.size() + p.gamma_bot.size(), y, "y");

    const double inner_tol = cfg.rel_tol / 10.0;
    cplx total = 0.0;
    cplx head = 1.0;  // term (0, s)
    int small = 0;
    for (int s = 0; s < cfg.max_terms; ++s) {
        cplx inner = head, t = head;
        int ismall = 0;
        bool inner_done = (x == 0.0);
        for (int r = 0; !inner_done; ++r) {
            if (r >= cfg.max_terms) {
                throw NoConvergenceError("kampe_de_feriet: inner series hit max_terms", total + inner);
            }
            auto m = step(p.a_top, r + s, p.b_top, r, p.alpha_bot, p.beta_bot, x);
            if (!m) break;
            t *= *m;
            inner += t;
            if (!r_ends) {
                if (std::abs(t) <= inner_tol * std::abs(inner)) {
                    if (++ismall >= cfg.consecutive_small) inner_done = true;
                } else {
                    ismall = 0;
                }
            }
        }
        total += inner;
        if (y == 0.0) return total;
        auto m = step(p.a_top, s, p.c_top, s, p.alpha_bot, p.gamma_bot, y);
        if (!m) return total;
        head *= *m;
        if (!s_ends) {
            if (std::abs(inner) <= cfg.rel_tol * std::abs(total)) {
                if (++small >= cfg.consecutive_small) return total;
            } else {
                small = 0;
            }
        }
    }
    throw NoConvergenceError("kampe_de_feriet: outer series hit max_terms", total);
}

cplx humbert_phi1(double a, double b, double c, cplx w, cplx z, const SeriesConfig& cfg) {
    if (std::abs(w) >= 1.0 && !is_nonpositive_integer(a) && !is_nonpositive_integer(b)) {
        throw DivergenceError("humbert_phi1: |w| >= 1 and the w-series does not terminate");
    }
    if (std::abs(z) > 10.0 && std::abs(w) < 1.0 && !is_nonpositive_integer(a) && !is_nonpositive_integer(c)) {
        // sum_r (a)_r (b)_r / ((c)_r r!) w^r 1F1(a+r; c+r | z), so each z-series gets the wide-argument path
        cfg.validate();
        const bool ends = is_nonpositive_integer(b);
        cplx coef = 1.0, sum = 0.0;
        int small = 0;
        for (int r = 0; r < cfg.max_terms; ++r) {
            const cplx t = coef * hyp_1F1(a + r, c + r, z, cfg);
            sum += t;
            if (!ends && std::abs(t) <= cfg.rel_tol * std::abs(sum)) {
                if (++small >= cfg.consecutive_small) return sum;
            } else {
                small = 0;
            }
            coef *= (a + r) * (b + r) / ((c + r) * (r + 1.0)) * w;
            if (coef == 0.0) return sum;
        }
        throw NoConvergenceError("humbert_phi1: max_terms reached", sum);
    }
    KdFParams p;
    p.a_top = {a};
    p.b_top = {b};
    p.alpha_bot = {c};
    return kampe_de_feriet(p, w, z, cfg);
}

BinomialSides kdf_binomial_sides(int n, double a, double b, double c, cplx x, const SeriesConfig& cfg) {
    if (n < 1) throw DomainError("kdf_binomial_sides: n must be positive");
    const bool real_branch =
        x.imag() == 0.0 && (x.real() > 0.0 || x.real() < -2.0 * std::sqrt(2.0));
    const bool terminating = is_nonpositive_integer(std::max(a, b)) &&
                             is_nonpositive_integer(std::max(c - a, c - b));
    if (!real_branch && !terminating) {
        throw DomainError("kdf_binomial_sides: x outside the validity region for these parameters");
    }
    if (x == 0.0 || x == -1.0) throw DomainError("kdf_binomial_sides: x must avoid 0 and -1");

    KdFParams p;
    p.b_top = {a, b};
    p.c_top = {c - a, c - b};
    p.alpha_bot = {double(-n), c};
    cplx lhs = 0.0, xk = 1.0;
    for (int k = 0; k <= n; ++k) {
        p.a_top = {double(-n + k)};
        lhs += binomial_general(n, k) * kampe_de_feriet(p, 1.0, 1.0, cfg) * xk;
        xk *= x;
    }
    const cplx w = (1.0 + 2.0 * x) / ((1.0 + x) * (1.0 + x));
    const cplx ratio = x / (1.0 + x);
    const cplx base = cpow(1.0 + x, n);
    BinomialSides out;
    out.lhs = lhs;
    out.rhs = base * cpow(ratio, a + b - c) * hyp_2F1(a, b, c, w, cfg);
    out.rhs_euler = base * cpow(ratio, c - a - b) * hyp_2F1(c - a, c - b, c, w, cfg);
    return out;
}

std::vector<double> jacobi_linearization_coeffs(int l, double a, double b) {
    return jacobi_linearization_coeffs(l, a, b, a, b - 1.0);
}

std::vector<double> jacobi_linearization_coeffs(int l, double a, double b, double ta, double tb) {
    if (l < 0) throw DomainError("jacobi_linearization_coeffs: negative degree");
    if (!(a > -1.0) || !(b > -1.0)) throw DomainError("jacobi_linearization_coeffs: need a, b > -1");
    if (l == 0) return {1.0};
    const int L = 2 * l;
    const double s = ta + tb + 1.0;
    // (2l)! (ta+1)_{2l} ((a+b+1)_{2l})^2 / ((l!)^2 ((a+b+1)_l)^2)
    SignedLog common = log_pochhammer(ta + 1.0, L);
    SignedLog ab2l = log_pochhammer(a + b + 1.0, L);
    SignedLog abl = log_pochhammer(a + b + 1.0, l);
    double lc = std::lgamma(L + 1.0) + common.log_abs + 2.0 * ab2l.log_abs -
                2.0 * std::lgamma(l + 1.0) - 2.0 * abl.log_abs;
    int sc = common.sign;

    KdFParams p;
    p.b_top = {double(-l), -a - l};
    p.c_top = {double(-l), -a - l};
    p.alpha_bot = {double(-L), -ta - L};
    p.beta_bot = {-L - a - b};
    p.gamma_bot = {-L - a - b};

    std::vector<double> out(L + 1);
    for (int k = 0; k <= L; ++k) {
        SignedLog sk = log_pochhammer(s, k);
        SignedLog tk = log_pochhammer(ta + 1.0, k);
        SignedLog dk = log_pochhammer(s, L + k + 1);
        if (tk.sign == 0 || dk.sign == 0) {
            throw PoleError("jacobi_linearization_coeffs: target parameters hit a pole");
        }
        double lv = lc + sk.log_abs - std::lgamma(L - k + 1.0) - tk.log_abs - dk.log_abs;
        int sv = sc * sk.sign * tk.sign * dk.sign * ((k % 2) ? -1 : 1);
        double lin = (2.0 * k + s) * (sk.sign == 0 ? 0.0 : sv * std::exp(lv));
        p.a_top = {double(-L + k), -s - L - k};
        out[k] = lin * kampe_de_feriet_terminating(p, 1.0, 1.0);
    }
    return out;
}

}  // namespace hyperq
