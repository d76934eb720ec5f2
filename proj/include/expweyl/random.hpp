#pragma once

#include <cstdint>
#include <random>

#include "expweyl/grading.hpp"
#include "expweyl/homology.hpp"
#include "expweyl/lie.hpp"

namespace expweyl
{

struct RandomShape
{
    int max_terms = 4;
    int max_exponent = 3; // bound on |a|, |beta_j|, |gamma_j| and d
    // Restrict to the polynomial Weyl subalgebra (a = 0, beta = 0,
    // gamma natural multiples of g_1).
    bool weyl_only = false;
    bool functions_only = false;
    // Allow coefficients involving g_2 .. g_r.
    bool symbolic_coefficients = false;
};

// Deterministic generator of bounded random algebra data.
class Random
{
public:
    explicit Random(std::uint64_t seed) : m_rng(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return uniform(0, 1) == 1; }
    // Nonzero rational p/q with |p| <= 3, 1 <= q <= 3, optionally times a
    // linear form in the generator symbols.
    Scalar scalar(const AlgebraSignature &sig, bool symbolic);
    GroupElement group(int rank, int bound, bool natural_multiple_of_one = false);
    Monomial monomial(const AlgebraSignature &sig, const RandomShape &shape);
    Element element(const SignaturePtr &sig, const RandomShape &shape);
    GrElement symbol(const SignaturePtr &sig, const RandomShape &shape);
    DerivationElement derivation(const SignaturePtr &sig, const RandomShape &shape);
    Chain chain(const SignaturePtr &sig, int degree, int max_tensors, const RandomShape &shape);
    Vector vector(std::size_t dim);

private:
    std::mt19937_64 m_rng;
};

} // namespace expweyl
