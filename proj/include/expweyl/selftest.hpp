#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "expweyl/grading.hpp"

namespace expweyl
{

struct SelfCheck
{
    std::string name; // "<module>.<invariant>"
    bool pass = false;
    std::string detail; // failure description, empty on success
};

// Every module invariant on small randomized data. Deterministic in seed.
std::vector<SelfCheck> run_selftest(std::uint64_t seed);

// Oracle for the symbol calculus on the polynomial Weyl subalgebra: each
// monomial pair is multiplied with mul and every resulting term is weighted
// by hbar^k, k = number of [D, x] contractions = (ord m1 + ord m2 - ord m) / 2.
// Terms with k > N are dropped. Throws UnsupportedElement outside the Weyl
// subalgebra.
GrElement contraction_graded_symbol(const Element &p, const Element &q, int N);

} // namespace expweyl
