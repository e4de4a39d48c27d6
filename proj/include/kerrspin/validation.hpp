#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kerrspin/geometry.hpp"

namespace kerrspin {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full validation suite (frame algebra, Killing structures,
/// conservation, transport, rotation-group checks, the no-precession
/// theorems, the amplitude machinery, and the curvature oracle) at
/// seed-reproducible random points and on the built-in orbit presets.
std::vector<CheckResult> run_validation_suite(std::uint64_t seed, double M, double a);

}  // namespace kerrspin
