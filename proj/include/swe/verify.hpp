#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace swe {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double threshold = 0.0;
};

// Randomized verification suites; deterministic for a fixed seed (splitmix64).
std::vector<CheckResult> verify_deformation(std::uint64_t seed);
std::vector<CheckResult> verify_charts(std::uint64_t seed);
std::vector<CheckResult> verify_pde(std::uint64_t seed);
std::vector<CheckResult> verify_convergence(std::uint64_t seed);
std::vector<CheckResult> verify_all(std::uint64_t seed);

} // namespace swe
