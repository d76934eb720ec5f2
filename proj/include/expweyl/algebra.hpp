#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "expweyl/scalars.hpp"

namespace expweyl
{

// How d/dx_i acts on the symbol E_i.
enum class ERule
{
    // E_i = exp(x_i^{p_i} e^{t_i x_i}).
    Classical,
    // E_i = exp(x_i^{p_i} e^{(t_i + hbar x_i) x_i}), expanded mod hbar^{N+1}.
    TShift,
};

// Parameters (n, p, t, A) of the algebra plus the hbar truncation.
struct AlgebraSignature
{
    int n = 1;                                // number of variables
    int rank = 1;                             // rank r of A; g_1 = 1 always
    std::vector<int> p;                       // p_i >= 1
    std::vector<GroupElement> t;              // t_i in A
    std::vector<std::string> generator_names; // names of g_2, ..., g_r
    std::optional<int> hbar_order;            // hbar mode with truncation order N
    ERule e_rule = ERule::Classical;

    // Throws InvalidConfig on violated invariants.
    void validate() const;
    bool hbar_mode() const noexcept { return hbar_order.has_value(); }
    // Truncation order for coefficients (Scalar::kExact outside hbar mode).
    int scalar_order() const noexcept { return hbar_order.value_or(Scalar::kExact); }

    friend bool operator==(const AlgebraSignature &, const AlgebraSignature &) = default;
};

using SignaturePtr = std::shared_ptr<const AlgebraSignature>;

// Validates and freezes a signature. Default names g2, g3, ... are filled in.
SignaturePtr make_signature(AlgebraSignature sig);
// n variables, rank r, all p_i = p, all t_i = t.
SignaturePtr make_signature(int n, int rank, int p, const GroupElement &t, std::optional<int> hbar_order = {});

// Exponent data E^a e^{beta x} x^gamma D^d of a normal-ordered word, one
// block per variable. Packed as [sum d, d_1..d_n, gamma_1..gamma_n (r each),
// beta_1..beta_n (r each), a_1..a_n] so that lexicographic comparison of the
// packed vector is graded-lex on (d, gamma, beta, a).
class Monomial
{
public:
    Monomial() = default;
    Monomial(int n, int rank);

    int n() const noexcept { return m_n; }
    int rank() const noexcept { return m_rank; }

    std::int64_t a(int i) const { return m_data[a_at(i)]; }
    std::int64_t d(int i) const { return m_data[1 + i]; }
    std::int64_t beta(int i, int j) const { return m_data[beta_at(i) + j]; }
    std::int64_t gamma(int i, int j) const { return m_data[gamma_at(i) + j]; }
    GroupElement beta(int i) const;
    GroupElement gamma(int i) const;
    std::int64_t total_d() const { return m_data[0]; }

    void set_a(int i, std::int64_t v) { m_data[a_at(i)] = v; }
    // Throws NegativePower for v < 0.
    void set_d(int i, std::int64_t v);
    void set_beta(int i, const GroupElement &g);
    void set_gamma(int i, const GroupElement &g);
    void add_beta(int i, const GroupElement &g);
    void add_gamma(int i, const GroupElement &g);
    void add_gamma1(int i, std::int64_t k) { m_data[gamma_at(i)] += k; }

    bool is_function() const { return total_d() == 0; }
    bool is_unit() const;
    Monomial function_part() const;
    // Componentwise sum of all exponent data (the commutative product).
    Monomial times(const Monomial &o) const;

    const std::vector<std::int64_t> &packed() const noexcept { return m_data; }

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend bool operator<(const Monomial &x, const Monomial &y) { return x.m_data < y.m_data; }
    friend bool operator>(const Monomial &x, const Monomial &y) { return y.m_data < x.m_data; }

private:
    std::size_t gamma_at(int i) const { return 1 + m_n + static_cast<std::size_t>(i) * m_rank; }
    std::size_t beta_at(int i) const { return 1 + m_n + static_cast<std::size_t>(m_n + i) * m_rank; }
    std::size_t a_at(int i) const { return 1 + m_n + 2 * static_cast<std::size_t>(m_n) * m_rank + i; }

    int m_n = 0;
    int m_rank = 0;
    std::vector<std::int64_t> m_data;
};

// Terms are kept in descending term order; iteration order is print order.
using TermMap = std::map<Monomial, Scalar, std::greater<>>;

// Finite Scalar-linear combination of normal-ordered monomials. Zero
// coefficients are never stored.
class Element
{
public:
    explicit Element(SignaturePtr sig);

    static Element zero(SignaturePtr sig) { return Element(std::move(sig)); }
    static Element unit(SignaturePtr sig);
    static Element constant(SignaturePtr sig, const Scalar &c);
    static Element monomial(SignaturePtr sig, const Monomial &m, const Scalar &c = Scalar(1));
    // Generators; variable indices are 0-based.
    static Element x(SignaturePtr sig, int i);
    static Element D(SignaturePtr sig, int i, std::int64_t k = 1);
    static Element E(SignaturePtr sig, int i, std::int64_t k = 1);
    static Element exp(SignaturePtr sig, int i, const GroupElement &beta);
    static Element power(SignaturePtr sig, int i, const GroupElement &gamma);

    const AlgebraSignature &signature() const noexcept { return *m_sig; }
    const SignaturePtr &signature_ptr() const noexcept { return m_sig; }
    const TermMap &terms() const noexcept { return m_terms; }
    bool is_zero() const noexcept { return m_terms.empty(); }
    std::size_t size() const noexcept { return m_terms.size(); }
    // True when no term carries a derivative (a member of the function ring).
    bool is_function() const;
    // Constant multiple of the unit, if this element is one.
    std::optional<Scalar> as_constant() const;
    Monomial unit_monomial() const { return Monomial(m_sig->n, m_sig->rank); }

    void add_term(const Monomial &m, const Scalar &c);
    void check_same_signature(const Element &o) const;

    Element operator-() const;
    Element &operator+=(const Element &o);
    Element &operator-=(const Element &o);
    Element &operator*=(const Scalar &c);
    friend Element operator+(Element a, const Element &b) { return a += b; }
    friend Element operator-(Element a, const Element &b) { return a -= b; }
    friend Element operator*(Element a, const Scalar &c) { return a *= c; }
    friend Element operator*(const Scalar &c, Element a) { return a *= c; }
    friend Element operator*(const Element &a, const Element &b);
    friend bool operator==(const Element &a, const Element &b);

private:
    SignaturePtr m_sig;
    TermMap m_terms;
};

bool same_signature(const AlgebraSignature &a, const AlgebraSignature &b);

// d/dx_i of a function monomial (all d = 0), Leibniz over its E, exponential
// and power factors. Throws NotAFunction.
Element diff_function(const SignaturePtr &sig, int i, const Monomial &m);
// d/dx_i applied termwise to a function element.
Element diff_function(int i, const Element &f);

// Normal-form product. Throws SignatureMismatch.
Element mul(const Element &p, const Element &q);
Element commutator(const Element &p, const Element &q);
// Repeated multiplication; throws NegativePower for k < 0.
Element pow(const Element &p, std::int64_t k);
inline Element add(const Element &p, const Element &q) { return p + q; }
inline Element scale(const Element &p, const Scalar &c) { return p * c; }
inline bool eq(const Element &p, const Element &q) { return p == q; }

// Product in the commutative function ring (exponents add); both factors
// must be functions.
Element function_product(const Element &f, const Element &g);

} // namespace expweyl
