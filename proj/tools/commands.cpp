#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperq/husimi_mixed.hpp"
#include "hyperq/suite.hpp"

namespace hyperq::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string command;
    std::string kind;
    double B = 1.0;
    double R = 1.5;
    int m = 0;
    int j = 0;
    double beta = 1.0;
    double epsilon = 1.0;
    double u_min = 0.0;
    double u_max = 3.0;
    int u_steps = 31;
    int grid = 101;
    std::string format = "csv";
    std::string out;
    std::optional<double> tol;
    bool oracle = false;
    std::vector<double> Rs{5.0, 20.0, 100.0};
    double z = 0.5;
    double u = 0.5;
    bool fail_fixture = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Cell = std::variant<double, std::string, bool>;

struct Table {
    std::vector<std::pair<std::string, Cell>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    // Extra top-level JSON fields (bound only).
    json extra = json::object();
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string cell_text(const Cell& c) {
    if (const double* d = std::get_if<double>(&c)) return fmt(*d);
    if (const bool* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
    return std::get<std::string>(c);
}

json cell_json(const Cell& c) {
    if (const double* d = std::get_if<double>(&c)) return std::isfinite(*d) ? json(*d) : json(nullptr);
    if (const bool* b = std::get_if<bool>(&c)) return *b;
    return std::get<std::string>(c);
}

void write_csv(const Table& t, std::ostream& os) {
    for (const auto& [k, v] : t.config) os << "# " << k << "=" << cell_text(v) << "\n";
    for (auto it = t.extra.begin(); it != t.extra.end(); ++it) {
        if (it.value().is_primitive()) os << "# " << it.key() << "=" << it.value().dump() << "\n";
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell_text(r[i]);
        os << "\n";
    }
}

void write_json(const Table& t, std::ostream& os) {
    json doc = json::object();
    json cfg = json::object();
    for (const auto& [k, v] : t.config) cfg[k] = cell_json(v);
    doc["config"] = cfg;
    for (auto it = t.extra.begin(); it != t.extra.end(); ++it) doc[it.key()] = it.value();
    json rows = json::array();
    for (const auto& r : t.rows) {
        json o = json::object();
        for (std::size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = cell_json(r[i]);
        rows.push_back(o);
    }
    doc["rows"] = rows;
    os << doc.dump(2) << "\n";
}

SeriesConfig series_config(const RunConfig& rc) {
    SeriesConfig cfg = SeriesConfig::from_env();
    if (rc.tol) cfg.rel_tol = *rc.tol;
    cfg.validate();
    return cfg;
}

ModelParams model(const RunConfig& rc) {
    ModelParams p{rc.B, rc.R, rc.m};
    p.validate();
    if (rc.j < 0) throw UsageError("--j must be non-negative");
    return p;
}

void base_config(const RunConfig& rc, Table& t, bool with_beta) {
    t.config = {{"command", rc.command}, {"kind", rc.kind}, {"B", rc.B}, {"R", rc.R},
                {"m", double(rc.m)}};
    if (rc.kind == "pure") t.config.emplace_back("j", double(rc.j));
    if (with_beta) t.config.emplace_back("beta", rc.beta);
    t.config.emplace_back("rel_tol", series_config(rc).rel_tol);
}

RadialDensity density_for(const RunConfig& rc) {
    const ModelParams p = model(rc);
    if (rc.kind == "pure") return radial_density(PureStateSpec{rc.j, p});
    return radial_density_mixed(MixedStateSpec{rc.beta, p, rc.epsilon});
}

Table cmd_density(const RunConfig& rc) {
    if (rc.grid < 2) throw UsageError("--grid must be at least 2");
    Table t;
    base_config(rc, t, rc.kind == "mixed");
    t.config.emplace_back("grid", double(rc.grid));
    const RadialDensity d = density_for(rc);
    t.columns = {"lambda", "density", "cdf"};
    const double L = d.support_end;
    double cdf = 0.0, prev = 0.0;
    for (int i = 0; i < rc.grid; ++i) {
        const double lambda = i == rc.grid - 1 ? L : L * i / (rc.grid - 1);
        if (i > 0) cdf += integrate_real(d.eval, prev, lambda);
        prev = lambda;
        t.rows.push_back({lambda, d(lambda), cdf});
    }
    return t;
}

std::vector<double> u_grid(const RunConfig& rc) {
    if (rc.u_steps < 1) throw UsageError("--u-steps must be at least 1");
    if (!(rc.u_max >= rc.u_min)) throw UsageError("--u-max must not be below --u-min");
    std::vector<double> us;
    for (int i = 0; i < rc.u_steps; ++i) {
        us.push_back(rc.u_steps == 1 ? rc.u_min : rc.u_min + (rc.u_max - rc.u_min) * i / (rc.u_steps - 1));
    }
    return us;
}

cplx cf_for(const RunConfig& rc, double u, const SeriesConfig& cfg) {
    const ModelParams p = model(rc);
    if (rc.kind == "pure") return cf_pure(PureStateSpec{rc.j, p}, u, cfg);
    return cf_mixed(MixedStateSpec{rc.beta, p, rc.epsilon}, u, cfg);
}

Table cmd_cf(const RunConfig& rc) {
    Table t;
    base_config(rc, t, rc.kind == "mixed");
    const SeriesConfig cfg = series_config(rc);
    const std::vector<double> us = u_grid(rc);
    const RadialDensity d = density_for(rc);
    t.columns = {"u", "re", "im"};
    if (rc.oracle) t.columns.insert(t.columns.end(), {"oracle_re", "oracle_im", "abs_err"});
    for (double u : us) {
        const cplx v = cf_for(rc, u, cfg);
        std::vector<Cell> row{u, v.real(), v.imag()};
        if (rc.oracle) {
            const cplx o = cf_oracle(d, u);
            row.insert(row.end(), {o.real(), o.imag(), std::abs(v - o)});
        }
        t.rows.push_back(row);
    }
    return t;
}

Table cmd_moments(const RunConfig& rc) {
    Table t;
    base_config(rc, t, rc.kind == "mixed");
    const SeriesConfig cfg = series_config(rc);
    const ModelParams p = model(rc);
    double mean, second;
    if (rc.kind == "pure") {
        const PureStateSpec s{rc.j, p};
        mean = mean_pure(s);
        second = second_moment_pure(s);
    } else {
        const MixedStateSpec ms{rc.beta, p, rc.epsilon};
        mean = mean_mixed(ms, cfg);
        second = second_moment_mixed(ms, cfg);
    }
    const RadialDensity d = density_for(rc);
    const double om = moment_oracle(d, 1), o2 = moment_oracle(d, 2);
    const double h = 1e-4;
    const double fd = (cf_for(rc, h, cfg) - cf_for(rc, -h, cfg)).imag() / (2.0 * h);
    t.columns = {"mean", "second_moment", "var", "oracle_mean", "oracle_var", "cf_fd_mean"};
    t.rows.push_back({mean, second, second - mean * mean, om, o2 - om * om, fd});
    return t;
}

Table cmd_verify(const RunConfig& rc, bool& all_pass) {
    Table t;
    t.config = {{"command", rc.command}};
    SuiteOptions opt;
    opt.series = series_config(rc);
    opt.failure_fixture = rc.fail_fixture;
    t.config.emplace_back("rel_tol", opt.series.rel_tol);
    t.columns = {"label", "formula_re", "formula_im", "oracle_re", "oracle_im",
                 "abs_err", "rel_err", "tol", "pass", "runtime_ms"};
    all_pass = true;
    for (const VerificationReport& r : default_suite(opt)) {
        all_pass = all_pass && r.pass;
        t.rows.push_back({r.label, r.formula_value.real(), r.formula_value.imag(), r.oracle_value.real(),
                          r.oracle_value.imag(), r.abs_err, r.rel_err, r.tol, r.pass, r.runtime_ms});
    }
    return t;
}

Table cmd_limit(const RunConfig& rc, bool& ok) {
    static const std::vector<std::string> kinds{"pure-q", "pure-cf", "mixed-q", "mixed-cf"};
    if (rc.Rs.size() < 3) throw UsageError("--Rs needs at least three radii");
    const bool cf = rc.kind == "pure-cf" || rc.kind == "mixed-cf";
    if (cf && !(rc.u < 2.0 * rc.B)) throw UsageError("the limit holds only for u < 2B");
    const SeriesConfig cfg = series_config(rc);
    Table t;
    t.config = {{"command", rc.command}, {"kind", rc.kind}, {"B", rc.B}, {"m", double(rc.m)}};
    if (rc.kind.rfind("pure", 0) == 0) t.config.emplace_back("j", double(rc.j));
    if (rc.kind.rfind("mixed", 0) == 0) t.config.emplace_back("beta", rc.beta);
    t.config.emplace_back(cf ? "u" : "z", cf ? rc.u : rc.z);
    t.config.emplace_back("rel_tol", cfg.rel_tol);

    const cplx z(rc.z, 0.0);
    auto err = [&](double R) {
        const ModelParams p{rc.B, R, rc.m};
        p.validate();
        if (!cf && !(rc.z < R)) throw UsageError("--z must lie inside every disk");
        if (rc.kind == "pure-q") {
            return std::fabs(q_pure(PureStateSpec{rc.j, p}, {z}) - q_pure_euclid(rc.j, rc.m, rc.B, z));
        }
        if (rc.kind == "pure-cf") {
            return std::abs(cf_pure(PureStateSpec{rc.j, p}, rc.u, cfg) - cf_pure_euclid(rc.j, rc.m, rc.B, rc.u));
        }
        const MixedStateSpec ms{rc.beta, p, rc.epsilon};
        if (rc.kind == "mixed-q") {
            return std::fabs(q_mixed_closed(ms, {z}) - q_mixed_euclid(rc.beta, rc.B, rc.m, z));
        }
        return std::abs(cf_mixed(ms, rc.u, cfg) - cf_mixed_euclid_limit(rc.beta, rc.B, rc.m, rc.u));
    };
    std::vector<double> errs;
    for (double R : rc.Rs) errs.push_back(err(R));
    const LimitFit fit = limit_rate_from(rc.Rs, errs);
    t.columns = {"R", "error", "slope", "monotone"};
    for (std::size_t i = 0; i < errs.size(); ++i) t.rows.push_back({rc.Rs[i], errs[i], fit.slope, fit.monotone});
    ok = fit.slope < 0.0;
    return t;
}

Table cmd_bound(const RunConfig& rc, bool& ok) {
    if (!(rc.beta > 0.0)) throw UsageError("--beta must be positive");
    if (!(rc.epsilon > 0.0)) throw UsageError("--epsilon must be positive");
    ModelParams{rc.B, rc.R, 0}.validate();
    Table t;
    t.config = {{"command", rc.command}, {"B", rc.B}, {"R", rc.R}, {"beta", rc.beta}, {"epsilon", rc.epsilon}};
    const BerezinLiebSweep sw = berezin_lieb_sweep(rc.beta, rc.epsilon, rc.B, rc.R);
    t.columns = {"m", "theta", "lhs", "lhs_literal", "gap"};
    ok = true;
    for (std::size_t m = 0; m < sw.lhs_per_m.size(); ++m) {
        ok = ok && sw.gap_per_m[m] >= 0.0;
        t.rows.push_back({double(m), sw.theta_per_m[m], sw.lhs_per_m[m], sw.lhs_literal_per_m[m], sw.gap_per_m[m]});
    }
    t.extra["m_star"] = sw.m_star;
    t.extra["bound"] = sw.bound;
    t.extra["theta_at_m_star"] = sw.theta_at_m_star;
    t.extra["gap"] = sw.theta_at_m_star - sw.bound;
    t.extra["theta_exact_per_m"] = sw.theta_per_m;
    return t;
}

void add_model(CLI::App* sc, RunConfig& rc, bool pure_index, bool thermal) {
    sc->add_option("--B", rc.B, "field strength B > 0");
    sc->add_option("--R", rc.R, "disk radius R > 0");
    sc->add_option("--m", rc.m, "Landau level, 0 <= m <= floor(B R^2 - 1/2)");
    if (pure_index) sc->add_option("--j", rc.j, "Fock index of the pure state");
    if (thermal) {
        sc->add_option("--beta", rc.beta, "inverse temperature");
        sc->add_option("--epsilon", rc.epsilon, "fugacity");
    }
}

void add_output(CLI::App* sc, RunConfig& rc) {
    sc->add_option("--format", rc.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sc->add_option("--out", rc.out, "write to this file instead of stdout");
    sc->add_option("--tol", rc.tol, "series relative tolerance (default: HYP_TOL or 1e-12)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    CLI::App app{"Husimi distributions for hyperbolic Landau levels"};
    app.require_subcommand(1);

    const auto kinds = CLI::IsMember({"pure", "mixed"});
    auto* density = app.add_subcommand("density", "tabulate the radial density and its CDF");
    density->add_option("kind", rc.kind, "pure or mixed")->required()->check(kinds);
    add_model(density, rc, true, true);
    density->add_option("--grid", rc.grid, "number of grid points on [0, R^2]");
    add_output(density, rc);

    auto* cf = app.add_subcommand("cf", "tabulate the characteristic function");
    cf->add_option("kind", rc.kind, "pure or mixed")->required()->check(kinds);
    add_model(cf, rc, true, true);
    cf->add_option("--u-min", rc.u_min);
    cf->add_option("--u-max", rc.u_max);
    cf->add_option("--u-steps", rc.u_steps);
    cf->add_flag("--oracle", rc.oracle, "add quadrature oracle columns");
    add_output(cf, rc);

    auto* moments = app.add_subcommand("moments", "mean and variance, closed form and oracles");
    moments->add_option("kind", rc.kind, "pure or mixed")->required()->check(kinds);
    add_model(moments, rc, true, true);
    add_output(moments, rc);

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_flag("--fail-fixture", rc.fail_fixture, "append a report that must fail");
    add_output(verify, rc);

    auto* limit = app.add_subcommand("limit", "error against the flat-space limit over R");
    limit->add_option("kind", rc.kind, "pure-q, pure-cf, mixed-q or mixed-cf")
        ->required()
        ->check(CLI::IsMember({"pure-q", "pure-cf", "mixed-q", "mixed-cf"}));
    add_model(limit, rc, true, true);
    limit->add_option("--Rs", rc.Rs, "radii")->delimiter(',');
    limit->add_option("--z", rc.z, "real point for the q limits");
    limit->add_option("--u", rc.u, "argument for the cf limits, u < 2B");
    add_output(limit, rc);

    auto* bound = app.add_subcommand("bound", "Berezin-Lieb lower bound swept over m");
    bound->add_option("--B", rc.B);
    bound->add_option("--R", rc.R);
    bound->add_option("--beta", rc.beta);
    bound->add_option("--epsilon", rc.epsilon);
    add_output(bound, rc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadParams;
    }
    rc.command = app.get_subcommands().front()->get_name();

    int code = kOk;
    Table t;
    try {
        bool ok = true;
        if (rc.command == "density") {
            t = cmd_density(rc);
        } else if (rc.command == "cf") {
            t = cmd_cf(rc);
        } else if (rc.command == "moments") {
            t = cmd_moments(rc);
        } else if (rc.command == "verify") {
            t = cmd_verify(rc, ok);
            if (!ok) code = kVerifyFailed;
        } else if (rc.command == "limit") {
            t = cmd_limit(rc, ok);
            if (!ok) {
                err << "error: fitted slope is not negative\n";
                code = kNumerical;
            }
        } else {
            t = cmd_bound(rc, ok);
            if (!ok) {
                err << "error: negative Berezin-Lieb gap\n";
                code = kNumerical;
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kBadParams;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kBadParams;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNumerical;
    }

    std::ofstream file;
    std::ostream* os = &out;
    if (!rc.out.empty()) {
        file.open(rc.out);
        if (!file) {
            err << "error: cannot open " << rc.out << "\n";
            return kBadParams;
        }
        os = &file;
    }
    if (rc.format == "json") {
        write_json(t, *os);
    } else {
        write_csv(t, *os);
    }
    return code;
}

}  // namespace hyperq::cli
