#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Named identity/convergence suites behind the `check` CLI subcommand.

namespace crownvol {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

std::vector<CheckResult> check_specfun(std::uint64_t seed = 2024);
std::vector<CheckResult> check_poisson(std::uint64_t seed = 2024);
std::vector<CheckResult> check_geometry(std::uint64_t seed = 2024);
std::vector<CheckResult> check_continuum();
std::vector<CheckResult> check_all(std::uint64_t seed = 2024);

} // namespace crownvol
