#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expweyl/algebra.hpp"
#include "expweyl/linalg.hpp"

namespace expweyl
{

// First-order operator sum_i f_i D_i with function coefficients f_i.
class DerivationElement
{
public:
    explicit DerivationElement(SignaturePtr sig);
    // f D_i. Throws NotAFunction.
    static DerivationElement single(const Element &f, int i);
    // Reads sum_i f_i D_i off a normal-ordered element. Throws
    // InvalidArgument when some term is not of the form f D_i.
    static DerivationElement from_operator(const Element &p);

    const SignaturePtr &signature_ptr() const noexcept { return m_sig; }
    int n() const noexcept { return m_sig->n; }
    const Element &coeff(int i) const { return m_coeffs.at(static_cast<std::size_t>(i)); }
    bool is_zero() const;
    // sum_i f_i D_i as an element of the associative algebra.
    Element to_operator() const;

    // Coordinates on (variable, function monomial) keys.
    using Key = std::pair<int, Monomial>;
    std::map<Key, Scalar> sparse() const;
    static DerivationElement from_sparse(SignaturePtr sig, const std::map<Key, Scalar> &v);

    DerivationElement operator-() const;
    DerivationElement &operator+=(const DerivationElement &o);
    DerivationElement &operator-=(const DerivationElement &o);
    DerivationElement &operator*=(const Scalar &c);
    friend DerivationElement operator+(DerivationElement a, const DerivationElement &b) { return a += b; }
    friend DerivationElement operator-(DerivationElement a, const DerivationElement &b) { return a -= b; }
    friend DerivationElement operator*(const Scalar &c, DerivationElement a) { return a *= c; }
    friend bool operator==(const DerivationElement &a, const DerivationElement &b);

private:
    SignaturePtr m_sig;
    std::vector<Element> m_coeffs;
};

// [f D_i, g D_j] = f (D_i g) D_j - g (D_j f) D_i, extended bilinearly.
DerivationElement witt_bracket(const DerivationElement &u, const DerivationElement &v);

// Bracket-closed span with structure constants [b_i, b_j] = sum_k c_ij^k b_k.
class LieSpan
{
public:
    // Throws NotIndependent, NotClosed, or NotGraded (when grading is given
    // and ad(basis[*grading]) is not diagonal with integer eigenvalues).
    LieSpan(std::vector<DerivationElement> basis, std::optional<std::size_t> grading = {});

    std::size_t dim() const noexcept { return m_basis.size(); }
    const std::vector<DerivationElement> &basis() const noexcept { return m_basis; }
    const SignaturePtr &signature_ptr() const { return m_sig; }
    // Coordinates of [b_i, b_j].
    const Vector &structure(std::size_t i, std::size_t j) const { return m_structure[i * dim() + j]; }
    // Coordinates of v in the basis. Throws NotClosed when v is outside.
    Vector coordinates(const DerivationElement &v) const;
    DerivationElement combine(const Vector &coords) const;
    // [u, v] on coordinate vectors.
    Vector bracket(const Vector &u, const Vector &v) const;

    bool graded() const noexcept { return m_grading.has_value(); }
    std::optional<std::size_t> grading_index() const noexcept { return m_grading; }
    // Eigenvalue of ad(h) on b_k.
    std::int64_t degree(std::size_t k) const { return m_degrees.at(k); }

private:
    SignaturePtr m_sig;
    std::vector<DerivationElement> m_basis;
    std::vector<DerivationElement::Key> m_keys;
    Matrix m_matrix; // key-by-basis coordinates
    std::vector<Vector> m_structure;
    std::optional<std::size_t> m_grading;
    std::vector<std::int64_t> m_degrees;
};

// Named bracket-closed spans in one variable, each graded:
//   borel   {D, x D}          h = x D
//   sl2like {D, x D, x^2 D}   h = x D
//   expaff  {D, e^x D}        h = D
LieSpan make_span(const std::vector<DerivationElement> &basis, std::optional<std::size_t> grading = {});
LieSpan preset_span(const std::string &name, const SignaturePtr &sig);
std::vector<std::string> preset_span_names();

// Alternating k-linear map on a span with values in the span (adjoint
// coefficients), stored on strictly increasing index tuples.
class Cochain
{
public:
    Cochain(std::size_t dim, int degree);

    int degree() const noexcept { return m_degree; }
    std::size_t dim() const noexcept { return m_dim; }
    // All strictly increasing index tuples of length degree(), in lex order.
    const std::vector<std::vector<std::size_t>> &tuples() const noexcept { return m_tuples; }
    // Value on an arbitrary tuple, using the alternating property.
    Vector eval(const std::vector<std::size_t> &args) const;
    // Sets the value on an increasing tuple. Throws InvalidArgument.
    void set(const std::vector<std::size_t> &increasing, Vector value);
    const Vector &at(std::size_t tuple_index) const { return m_values[tuple_index]; }
    bool is_zero() const;
    friend bool operator==(const Cochain &a, const Cochain &b) = default;

private:
    std::size_t m_dim;
    int m_degree;
    std::vector<std::vector<std::size_t>> m_tuples;
    std::vector<Vector> m_values;
};

// (d w)(x_1..x_{k+1}) = sum_i (-1)^{i+1} [x_i, w(.. ^x_i ..)]
//                     + sum_{i<j} (-1)^{i+j} w([x_i,x_j], .. ^x_i .. ^x_j ..)
Cochain ce_differential(const LieSpan &s, const Cochain &w);
bool is_cocycle(const LieSpan &s, const Cochain &w);
// The identity 1-cochain and the bracket 2-cochain.
Cochain identity_cochain(const LieSpan &s);
Cochain bracket_cochain(const LieSpan &s);

// Common ad-degree shift d of w: each nonzero component of w(b_I) along b_k
// has deg b_k - sum deg b_I = d. nullopt for w = 0. Throws NotGraded or
// NotHomogeneous.
std::optional<std::int64_t> cochain_degree(const LieSpan &s, const Cochain &w);

enum class EulerMode
{
    // phi(x) = w(h, x) / d, from L_h = d i_h + i_h d and L_h w = d w.
    Corrected,
    // phi(x) = w(h, x) / (d - deg x).
    Literal,
};

// Primitive phi with d phi = w for a homogeneous 2-cocycle of nonzero
// degree. Throws NotGraded, NotHomogeneous, DegreeZero, ResonantDegree
// (Literal mode, deg x = d) or IntegrationFailed (d phi != w).
Cochain euler_integrate(const LieSpan &s, const Cochain &w, EulerMode mode = EulerMode::Corrected);

} // namespace expweyl
