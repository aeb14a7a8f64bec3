#pragma once

#include <vector>

#include "hyperq/verify.hpp"

namespace hyperq {

struct SuiteOptions {
    QuadratureSpec quad;
    SeriesConfig series;
    // Appends a report that cannot pass, to exercise failure handling.
    bool failure_fixture = false;
};

// Closed forms against independent oracles at the standard case (B, R, m) = (1, 1.5, 1).
std::vector<VerificationReport> default_suite(const SuiteOptions& opt = {});

}  // namespace hyperq
