#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "expweyl/algebra.hpp"

namespace expweyl
{

// Applies P as a differential operator to a function f of the ring
// R = F[E^{+-1}, e^{Ax}, x^A]: the normal-ordered product P f with every term
// that still carries a derivative dropped (those annihilate the constant
// function). Throws NotAFunction or SignatureMismatch.
Element act(const Element &p, const Element &f);

// x^{gamma} with gamma a natural multi-index (multiples of g_1).
Element power_function(const SignaturePtr &sig, const std::vector<std::int64_t> &gamma);

struct ProbeResult
{
    bool zero = true;
    // First test exponent (lexicographic) whose image is nonzero, and the image.
    std::optional<std::vector<std::int64_t>> test_exponent;
    std::optional<Element> witness;
};

// Evaluates act(P, x^gamma) for gamma in {0..maxdeg}^n. zero == false proves
// P != 0; when every term of P has derivative orders <= maxdeg, zero == true
// proves P == 0.
ProbeResult faithfulness_probe(const Element &p, int maxdeg);

struct NoetherianReport
{
    unsigned n = 0;
    Scalar top;      // act(D^n, x^n), equal to n!
    Scalar overflow; // act(D^{n+1}, x^n), equal to 0
    // top != 0 and overflow == 0 certify that D^n is not in A D^{n+1}.
    bool certified = false;
};

// Throws InvalidArgument for n == 0.
NoetherianReport noetherian_witness(const SignaturePtr &sig, unsigned n);

// For a nonzero genuine polynomial f (no E or exponential factors, natural
// powers only) returns gamma such that act(D^gamma, f) is a nonzero constant:
// the lexicographically largest exponent of f. Throws UnsupportedElement
// outside that domain and ZeroElement for f = 0.
std::vector<std::int64_t> reduce_to_constant(const Element &f);

} // namespace expweyl
