#pragma once

#include <string>
#include <vector>

#include "chh/series.hpp"

namespace chh {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Named example values with exact expected coefficients: the four closed-form
// U(2) polynomials, the rank-two kernel relation, and the r = 0 character
// variety.
std::vector<CheckResult> paperExampleChecks();

// Homological identity suite: d^2 = 0 on every complex built here, vanishing
// charge-1 differentials, Leibniz / graded commutativity / associativity of
// the shuffle on randomly sampled word pairs, the symmetric-alternating
// splitting, and the brute-force tensor enumeration oracle.
std::vector<CheckResult> identityChecks(unsigned seed = 20240521);

// Cross-path equality: direct complex vs. shift formula vs. closed form on
// the grid s, r in {0,1,2}, charges 1 and 2, through maxDegree.
std::vector<CheckResult> crossCheckChecks(int maxDegree = 8);

bool allPass(const std::vector<CheckResult>& results);

// Absolute homology dimension series computed by the direct complex path.
Series iteratedDimsDirect(int s, int r, int charge, int maxDegree);

// Absolute homology dimension series from the low-charge shift formula.
Series iteratedDimsFormula(int s, int r, int charge, int maxDegree);

// Reference coefficient tables for the closed-form examples.
const std::vector<long>& expectedPU2Coeffs(int s, int r);

}  // namespace chh
