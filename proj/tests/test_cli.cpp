#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

using hyperq::cli::run_cli;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "hyperq");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
    std::vector<std::string> lines;
    std::istringstream is(csv);
    for (std::string l; std::getline(is, l);) {
        if (!l.empty() && l[0] != '#') lines.push_back(l);
    }
    return lines;
}

std::vector<double> fields(const std::string& line) {
    std::vector<double> v;
    std::istringstream is(line);
    for (std::string f; std::getline(is, f, ',');) v.push_back(std::stod(f));
    return v;
}

}  // namespace

TEST(Cli, BadParamsExitTwo) {
    EXPECT_EQ(run({"density", "pure", "--m", "5"}).code, 2);
    EXPECT_EQ(run({"density", "pure", "--grid", "1"}).code, 2);
    EXPECT_EQ(run({"density", "sideways"}).code, 2);
    EXPECT_EQ(run({"cf", "pure", "--u-steps", "0"}).code, 2);
    EXPECT_EQ(run({"limit", "mixed-cf", "--u", "3"}).code, 2);
    EXPECT_EQ(run({"bound", "--beta", "-1"}).code, 2);
    EXPECT_EQ(run({"moments", "pure", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    const Outcome r = run({"density", "pure", "--B", "1", "--R", "1.5", "--m", "2"});
    EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, DensityCsv) {
    const Outcome r = run({"density", "pure", "--m", "0", "--j", "1", "--grid", "51"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("# command=density", 0), 0u);
    EXPECT_NE(r.out.find("# B=1\n"), std::string::npos);
    const auto lines = data_lines(r.out);
    ASSERT_EQ(lines.size(), 52u);
    EXPECT_EQ(lines[0], "lambda,density,cdf");
    // m = 0: scaled Beta(j+1, 2BR^2-1) on [0, R^2]
    const double R2 = 2.25, b = 2.0 * R2 - 1.0;
    const double norm = std::exp(std::lgamma(2.0 + b) - std::lgamma(2.0) - std::lgamma(b));
    for (std::size_t i = 1; i < lines.size(); i += 7) {
        const auto v = fields(lines[i]);
        const double x = v[0] / R2;
        EXPECT_NEAR(v[1], norm * x * std::pow(1.0 - x, b - 1.0) / R2, 1e-12);
    }
    EXPECT_NEAR(fields(lines.back())[2], 1.0, 1e-8);
}

TEST(Cli, SeventeenDigitsAndStableBytes) {
    const Outcome a = run({"cf", "mixed", "--m", "1", "--u-steps", "4"});
    const Outcome b = run({"cf", "mixed", "--m", "1", "--u-steps", "4"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto lines = data_lines(a.out);
    const std::string re = lines[2].substr(lines[2].find(',') + 1);
    const std::string mant = re.substr(0, re.find(','));
    std::size_t digits = 0;
    for (char c : mant) digits += std::isdigit(static_cast<unsigned char>(c)) ? 1 : 0;
    EXPECT_GE(digits, 16u);
}

TEST(Cli, CfRowAtZero) {
    for (const char* kind : {"pure", "mixed"}) {
        const Outcome r = run({"cf", kind, "--m", "1", "--j", "2", "--u-min", "0", "--u-max", "2", "--u-steps", "3",
                           "--oracle"});
        ASSERT_EQ(r.code, 0) << r.err;
        const auto lines = data_lines(r.out);
        EXPECT_EQ(lines[0], "u,re,im,oracle_re,oracle_im,abs_err");
        const auto v = fields(lines[1]);
        EXPECT_EQ(v[0], 0.0);
        EXPECT_NEAR(v[1], 1.0, 1e-13);
        EXPECT_NEAR(v[2], 0.0, 1e-13);
        for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_LT(fields(lines[i])[5], 1e-6) << kind;
    }
}

TEST(Cli, JsonRowsAndConfig) {
    const Outcome r = run({"moments", "mixed", "--m", "1", "--beta", "0.7", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = json::parse(r.out);
    EXPECT_EQ(doc["config"]["command"], "moments");
    EXPECT_EQ(doc["config"]["beta"], 0.7);
    ASSERT_EQ(doc["rows"].size(), 1u);
    const json& row = doc["rows"][0];
    for (const auto& [k, v] : row.items()) EXPECT_TRUE(v.is_number()) << k;
    EXPECT_NEAR(row["mean"].get<double>(), row["oracle_mean"].get<double>(), 1e-6);
    EXPECT_NEAR(row["mean"].get<double>(), row["cf_fd_mean"].get<double>(), 1e-5);
}

TEST(Cli, ToleranceFromEnvironmentAndFlag) {
    ::setenv("HYP_TOL", "1e-10", 1);
    const Outcome env = run({"cf", "pure", "--u-steps", "1"});
    ::unsetenv("HYP_TOL");
    EXPECT_NE(env.out.find("# rel_tol=1e-10"), std::string::npos);
    const Outcome flag = run({"cf", "pure", "--u-steps", "1", "--tol", "1e-11"});
    EXPECT_NE(flag.out.find("# rel_tol=9.9999999999999994e-12"), std::string::npos);
    EXPECT_EQ(run({"cf", "pure", "--tol", "-1"}).code, 2);
}

TEST(Cli, VerifyPassesAndFixtureFails) {
    const Outcome ok = run({"verify", "--format", "json"});
    EXPECT_EQ(ok.code, 0) << ok.out;
    const json doc = json::parse(ok.out);
    for (const auto& row : doc["rows"]) {
        EXPECT_TRUE(row["pass"].get<bool>()) << row["label"];
        for (const char* k : {"label", "formula_re", "formula_im", "oracle_re", "oracle_im", "abs_err", "rel_err",
                              "tol", "pass", "runtime_ms"}) {
            EXPECT_TRUE(row.contains(k)) << k;
        }
    }
    const Outcome bad = run({"verify", "--fail-fixture"});
    EXPECT_NE(bad.code, 0);
}

TEST(Cli, LimitTable) {
    const Outcome r = run({"limit", "pure-q", "--m", "1", "--j", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = json::parse(r.out);
    ASSERT_GE(doc["rows"].size(), 3u);
    const double slope = doc["rows"][0]["slope"];
    EXPECT_NEAR(slope, -2.0, 0.5);
    EXPECT_TRUE(doc["rows"][0]["monotone"].get<bool>());
    EXPECT_EQ(run({"limit", "mixed-q", "--Rs", "5,20"}).code, 2);
    EXPECT_EQ(run({"limit", "mixed-cf", "--m", "1", "--beta", "0.7", "--u", "0.5"}).code, 0);
}

TEST(Cli, BoundSweep) {
    const Outcome r = run({"bound", "--B", "1", "--R", "1.5", "--beta", "1", "--epsilon", "0.5", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = json::parse(r.out);
    // floor(B R^2 - 1/2) + 1 = 2 levels
    EXPECT_EQ(doc["rows"].size(), 2u);
    EXPECT_EQ(doc["theta_exact_per_m"].size(), 2u);
    EXPECT_GE(doc["gap"].get<double>(), 0.0);
    const int ms = doc["m_star"];
    EXPECT_TRUE(ms == 0 || ms == 1);
    for (const auto& row : doc["rows"]) EXPECT_GE(row["gap"].get<double>(), 0.0);
    const Outcome tiny = run({"bound", "--epsilon", "1e-12", "--format", "json"});
    ASSERT_EQ(tiny.code, 0);
    EXPECT_NEAR(json::parse(tiny.out)["bound"].get<double>(), 0.0, 1e-10);
}

TEST(Cli, WritesToFile) {
    const auto path = std::filesystem::temp_directory_path() / "hyperq_cli_test.csv";
    const Outcome r = run({"density", "mixed", "--grid", "5", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(data_lines(ss.str()).size(), 6u);
    std::filesystem::remove(path);
    EXPECT_EQ(run({"density", "mixed", "--out", "/nonexistent/dir/x.csv"}).code, 2);
}
