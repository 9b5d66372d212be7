#pragma once

#include "crystalpoly/cartan.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crystalpoly {

struct SuiteResult {
    std::string suite;
    bool ok = false;
    long checks = 0;     // individual assertions evaluated
    std::string detail;  // first failure, or a summary
};

// All weights with entries in [-3, 3] obeying the sign pattern (positives
// first, then nonpositives), for the given rank.
std::vector<Weight> lambda_grid_a(int rank);

// lambda_1 in [1, 4], lambda_2 in [-3, 0], positive level.
std::vector<Weight> lambda_grid_affine();

// Fold-vs-prefix-maximum identity on random lists.
SuiteResult run_lemma52(std::uint64_t seed = 20240817, int trials = 10000);

// D/C dichotomy for the finite type over the rank 1..3 grids.
SuiteResult run_lemma55();

// D/C dichotomy and the vanishing-propagation implication for the affine
// type, k up to 12.
SuiteResult run_lemma63();

// Partial-sum inequalities for the C table, plus nonnegativity of every
// generated second-family constant on both grids.
SuiteResult run_csum();

// One-sided boundary-sign scan for both sequence families.
SuiteResult run_pn();

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name);

}  // namespace crystalpoly
