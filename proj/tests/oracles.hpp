#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <string>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

inline Rational poch(const Rational& a, int k) {
    Rational p = 1;
    for (int i = 0; i < k; ++i) p *= a + i;
    return p;
}

inline Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

inline double rel(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

inline double rel(std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Fixed seed mixed with the running test's name, so a test draws the same
// values whether it runs alone or in the full binary.
inline std::mt19937_64& rng() {
    static std::mt19937_64 g;
    static std::string owner = "\n";
    const auto* info = testing::UnitTest::GetInstance()->current_test_info();
    const std::string name = info ? std::string(info->test_suite_name()) + "." + info->name() : "";
    if (name != owner) {
        owner = name;
        g.seed(20240611u ^ std::hash<std::string>{}(name));
    }
    return g;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

}  // namespace oracle
