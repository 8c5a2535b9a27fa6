#pragma once

// Randomized identity suites: the Z-function properties, the Cauchy-type
// determinant, the vanishing coefficient combination, and the two D_I
// lemmas. Each trial is checked in the exact backend (literal equality)
// and in binary64 (relative residual).

#include <cstdint>
#include <string>
#include <vector>

namespace toeplitz {

struct SuiteReport {
    std::string name;
    int trials = 0;
    int passed = 0;
    double max_residual = 0.0;  // float-backend relative residual
    double tolerance = 0.0;
    bool ok() const { return trials > 0 && passed == trials; }
};

SuiteReport z_property_suite(std::uint64_t seed, int trials);
SuiteReport cauchy_suite(std::uint64_t seed, int trials);
SuiteReport vanishing_suite(std::uint64_t seed, int trials);
SuiteReport d_i_identity_suite(std::uint64_t seed, int trials);

std::vector<SuiteReport> run_identity_suites(std::uint64_t seed, int trials);

}  // namespace toeplitz
