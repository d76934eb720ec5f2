#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "expweyl/algebra.hpp"
#include "expweyl/linalg.hpp"

namespace expweyl
{

using Tensor = std::vector<Monomial>;

// Element of the normalized Hochschild chain group: a Scalar combination of
// monomial tensors a_0 (x) ... (x) a_n. Tensors with the unit monomial in a
// position >= 1 are degenerate and dropped on insertion.
class Chain
{
public:
    Chain(SignaturePtr sig, int degree);
    // Multilinear expansion of c * (f_0 (x) ... (x) f_n).
    static Chain tensor(const std::vector<Element> &factors, const Scalar &c = Scalar(1));

    const SignaturePtr &signature_ptr() const noexcept { return m_sig; }
    int degree() const noexcept { return m_degree; }
    const std::map<Tensor, Scalar> &terms() const noexcept { return m_terms; }
    bool is_zero() const noexcept { return m_terms.empty(); }

    // Throws InvalidArgument on a length mismatch.
    void add_term(const Tensor &t, const Scalar &c);
    // Adds c * (f_0 (x) ... (x) f_n) expanded multilinearly.
    void add_tensor(const std::vector<Element> &factors, const Scalar &c);

    Chain operator-() const;
    Chain &operator+=(const Chain &o);
    Chain &operator-=(const Chain &o);
    Chain &operator*=(const Scalar &c);
    friend Chain operator+(Chain a, const Chain &b) { return a += b; }
    friend Chain operator-(Chain a, const Chain &b) { return a -= b; }
    friend Chain operator*(const Scalar &c, Chain a) { return a *= c; }
    friend bool operator==(const Chain &a, const Chain &b);

private:
    void check_compatible(const Chain &o) const;

    SignaturePtr m_sig;
    int m_degree;
    std::map<Tensor, Scalar> m_terms;
};

// b(a_0..a_n) = sum_{i<n} (-1)^i a_0..(a_i a_{i+1})..a_n + (-1)^n (a_n a_0) a_1..a_{n-1}.
// Throws DegreeZero for degree-0 chains.
Chain hochschild_b(const Chain &c);
// B(a_0..a_n) = sum_i (-1)^{n i} 1 (x) a_i..a_n (x) a_0..a_{i-1}.
Chain connes_B(const Chain &c);

// Ordered list of distinct monomials with coordinates on their span.
class Window
{
public:
    explicit Window(SignaturePtr sig, std::vector<Monomial> monomials = {});
    // Union of the supports of the given elements, in term order.
    static Window from_support(SignaturePtr sig, const std::vector<Element> &elements);

    const SignaturePtr &signature_ptr() const noexcept { return m_sig; }
    std::size_t size() const noexcept { return m_monomials.size(); }
    const std::vector<Monomial> &monomials() const noexcept { return m_monomials; }
    bool contains(const Monomial &m) const { return m_index.count(m) != 0; }
    // Coordinates of e. Throws WindowOverflow when e leaves the window.
    Vector coordinates(const Element &e) const;

private:
    SignaturePtr m_sig;
    std::vector<Monomial> m_monomials;
    std::map<Monomial, std::size_t> m_index;
};

struct SpanCheck
{
    bool inside = false;
    // f = sum_k combination[k] [P_k, Q_k] when inside.
    std::optional<Vector> combination;
};

// Exact membership f in span{[P_k, Q_k]}. Throws WindowOverflow when f or a
// commutator leaves the window.
SpanCheck commutator_span_check(const Element &f, const std::vector<std::pair<Element, Element>> &pairs,
                                const Window &window);

struct WindowDegree
{
    int degree = 0;
    std::size_t chain_dim = 0; // normalized tensors over the window
    std::size_t rank = 0;      // rank of b on them (0 in degree 0)
    std::vector<Chain> kernel; // basis of ker b restricted to the window
};

// Ranks and kernels of b on the normalized window chains of degrees
// 0..max_degree. These are window-relative numbers, not Hochschild homology.
// With strict set, images must stay on window chains (else WindowOverflow).
std::vector<WindowDegree> window_rank(const Window &window, int max_degree, bool strict = false);

} // namespace expweyl
