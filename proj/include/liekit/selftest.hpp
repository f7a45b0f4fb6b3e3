#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "liekit/liealg.hpp"

namespace liekit {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail; // first failure, if any
    double seconds = 0;
};

std::vector<std::string> selftest_suites();
// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);
std::vector<SuiteResult> run_selftest(std::uint64_t seed, const std::vector<std::string>& only = {});

// Direct sum of random blocks (nilpotent, solvable, sl2, sl2 acting on V_n) in a
// random basis, with the expected answers known from the blocks.
struct RandomAlgebra {
    LieAlgebra g;
    bool solvable;
    bool nilpotent;
    std::string recipe;
};
RandomAlgebra random_lie_algebra(std::mt19937_64& rng, std::size_t max_dim = 8);

} // namespace liekit
