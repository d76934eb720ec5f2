#pragma once

#include <cstdint>
#include <optional>

#include "expweyl/algebra.hpp"

namespace expweyl
{

// Element of the commutative algebra R[y_1, ..., y_n]. Monomials reuse the
// Monomial layout with the d-slots holding y-exponents; the product simply
// adds exponents.
class GrElement
{
public:
    explicit GrElement(SignaturePtr sig);

    static GrElement zero(SignaturePtr sig) { return GrElement(std::move(sig)); }
    static GrElement unit(SignaturePtr sig);
    static GrElement constant(SignaturePtr sig, const Scalar &c);
    static GrElement monomial(SignaturePtr sig, const Monomial &m, const Scalar &c = Scalar(1));
    static GrElement x(SignaturePtr sig, int i);
    static GrElement y(SignaturePtr sig, int i, std::int64_t k = 1);
    static GrElement E(SignaturePtr sig, int i, std::int64_t k = 1);
    static GrElement exp(SignaturePtr sig, int i, const GroupElement &beta);
    static GrElement power(SignaturePtr sig, int i, const GroupElement &gamma);

    const AlgebraSignature &signature() const noexcept { return *m_sig; }
    const SignaturePtr &signature_ptr() const noexcept { return m_sig; }
    const TermMap &terms() const noexcept { return m_terms; }
    bool is_zero() const noexcept { return m_terms.empty(); }
    std::optional<Scalar> as_constant() const;

    void add_term(const Monomial &m, const Scalar &c);
    void check_same_signature(const GrElement &o) const;

    GrElement operator-() const;
    GrElement &operator+=(const GrElement &o);
    GrElement &operator-=(const GrElement &o);
    GrElement &operator*=(const Scalar &c);
    friend GrElement operator+(GrElement a, const GrElement &b) { return a += b; }
    friend GrElement operator-(GrElement a, const GrElement &b) { return a -= b; }
    friend GrElement operator*(GrElement a, const Scalar &c) { return a *= c; }
    friend GrElement operator*(const Scalar &c, GrElement a) { return a *= c; }
    friend GrElement operator*(const GrElement &a, const GrElement &b);
    friend bool operator==(const GrElement &a, const GrElement &b);

private:
    SignaturePtr m_sig;
    TermMap m_terms;
};

// Commutative product; exponents add.
GrElement gr_mul(const GrElement &u, const GrElement &v);

// Per-symbol weights of the exponential-order filtration. The defaults give
// ord(E^a e^{bx} x^c D^d) = |a| + |b| + |c| + d.
struct OrderWeights
{
    std::int64_t e = 1;
    std::int64_t exp = 1;
    std::int64_t power = 1;
    std::int64_t d = 1;
};

std::int64_t monomial_order(const Monomial &m, const OrderWeights &w = {});
// Maximum monomial order over the terms. Throws ZeroElement for 0.
std::int64_t ord(const Element &p, const OrderWeights &w = {});

// Common total exponential degree (sum of beta over variables) of all terms.
// Throws ZeroElement or NotHomogeneous.
GroupElement exp_degree(const Element &p);
// The same contract on the power exponents gamma.
GroupElement power_degree(const Element &p);

// Top-order part with D_i replaced by y_i. Throws ZeroElement.
GrElement symbol(const Element &p, const OrderWeights &w = {});
// Every term with D_i replaced by y_i (no filtration cut).
GrElement full_symbol(const Element &p);
// Inverse of full_symbol: y_i read back as D_i in normal order.
Element quantize_normal(const GrElement &u);

struct FiltrationReport
{
    std::int64_t ord_p = 0;
    std::int64_t ord_q = 0;
    std::optional<std::int64_t> ord_product;     // empty when PQ = 0
    std::optional<std::int64_t> ord_commutator;  // empty when [P,Q] = 0
    bool multiplicative = true;                  // ord(PQ) <= ord P + ord Q
    bool strict_drop = true;                     // ord([P,Q]) < ord P + ord Q
    // Highest-order offending term of PQ (when !multiplicative) and of
    // [P,Q] (when !strict_drop).
    std::optional<Element> product_witness;
    std::optional<Element> commutator_witness;
};

// Checks the filtration claims on one pair. Throws ZeroElement.
FiltrationReport filtration_diagnostic(const Element &p, const Element &q, const OrderWeights &w = {});

} // namespace expweyl
