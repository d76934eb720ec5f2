#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "expweyl/grading.hpp"

namespace expweyl
{

// Formal partial derivative with respect to one free commutative generator
// of the symbol algebra. E_i, u_ij = e^{g_j x_i}, x_i and y_i are treated as
// independent: d/dx_i only sees the power factor x_i^gamma.
struct Partial
{
    enum class Kind
    {
        E,
        U,
        X,
        Y,
    };
    Kind kind = Kind::X;
    int var = 0; // 0-based variable index
    int gen = 0; // 0-based generator index j of u_ij (U only)

    friend auto operator<=>(const Partial &, const Partial &) = default;
    std::string to_string() const;
};

using Word = std::vector<Partial>;

GrElement partial(const Partial &d, const GrElement &f);
GrElement apply_word(const Word &w, const GrElement &f);

struct PolyDiffTerm
{
    GrElement coeff;
    Word left;
    Word right;
};

// Bidifferential operator sum_k c_k (W_k f)(V_k g) built from formal partials.
class PolyDiffOp
{
public:
    explicit PolyDiffOp(SignaturePtr sig) : m_sig(std::move(sig)) {}

    const SignaturePtr &signature_ptr() const noexcept { return m_sig; }
    const std::vector<PolyDiffTerm> &terms() const noexcept { return m_terms; }
    void add(const GrElement &coeff, Word left, Word right);
    void add(const Scalar &coeff, Word left, Word right);

    GrElement operator()(const GrElement &f, const GrElement &g) const;
    PolyDiffOp &operator+=(const PolyDiffOp &o);
    PolyDiffOp &operator*=(const Scalar &c);
    friend PolyDiffOp operator+(PolyDiffOp a, const PolyDiffOp &b) { return a += b; }
    friend PolyDiffOp operator*(const Scalar &c, PolyDiffOp a) { return a *= c; }

private:
    SignaturePtr m_sig;
    std::vector<PolyDiffTerm> m_terms;
};

// {f,g}_std = sum_i df/dx_i dg/dy_i - df/dy_i dg/dx_i.
PolyDiffOp poisson_std_op(const SignaturePtr &sig);
// {f,g}_exp = sum_i E_i (df/du_i dg/dx_i - df/dx_i dg/du_i), u_i = e^{x_i}.
PolyDiffOp poisson_exp_op(const SignaturePtr &sig);
// lambda {,}_std + (1 - lambda) {,}_exp.
PolyDiffOp lambda_op(const SignaturePtr &sig, const Scalar &lambda);
// m_k(f,g) = sum_{|K| = k} (1/K!) (d_y^K f)(d_x^K g).
PolyDiffOp symbol_star_op(const SignaturePtr &sig, int k);
// m_k = (1/k!) pi^k with pi = sum_i d_x_i (x) d_y_i - d_y_i (x) d_x_i, so that
// m_1 = {,}_std and sum_k hbar^k m_k is associative.
PolyDiffOp moyal_op(const SignaturePtr &sig, int k);

GrElement poisson_std(const GrElement &f, const GrElement &g);
GrElement poisson_exp(const GrElement &f, const GrElement &g);
GrElement lambda_bracket(const GrElement &f, const GrElement &g, const Scalar &lambda);
// sum_{k <= N} hbar^k m_k(f, g), coefficients truncated mod hbar^{N+1}.
GrElement symbol_star(const GrElement &f, const GrElement &g, int N);

// Multilinear map on symbols; arity >= 1.
struct Multilinear
{
    int arity = 2;
    std::function<GrElement(const std::vector<GrElement> &)> fn;

    GrElement operator()(const std::vector<GrElement> &args) const;
    GrElement operator()(const GrElement &f, const GrElement &g) const { return (*this)({f, g}); }

    static Multilinear from(const PolyDiffOp &op);
    static Multilinear from(std::function<GrElement(const GrElement &, const GrElement &)> fn);
};

// The undeformed product mu(f, g) = fg.
Multilinear commutative_product();
Multilinear operator+(const Multilinear &a, const Multilinear &b);
Multilinear operator*(const Scalar &c, const Multilinear &a);

// (m o m')(a_1..a_{p+q-1}) = sum_i (-1)^{i(q-1)} m(a_1..a_i, m'(a_{i+1}..a_{i+q}), ..).
Multilinear compose(const Multilinear &m, const Multilinear &mp);
// [m, m'] = m o m' - (-1)^{(p-1)(q-1)} m' o m; for two 2-cochains
// [m, m'](f,g,h) = m(m'(f,g),h) - m(f,m'(g,h)) + m'(m(f,g),h) - m'(f,m(g,h)).
Multilinear gerstenhaber_bracket(const Multilinear &m, const Multilinear &mp);
// (dm)(a_1..a_{k+1}) = a_1 m(a_2..) + sum_i (-1)^i m(.., a_i a_{i+1}, ..) + (-1)^{k+1} m(..a_k) a_{k+1}.
Multilinear hochschild_coboundary(const Multilinear &m);

using Triple = std::vector<GrElement>;

struct AssocReport
{
    // defects[t][k]: order-hbar^k coefficient of (f*g)*h - f*(g*h) on triple t.
    std::vector<std::vector<GrElement>> defects;
    std::optional<int> first_nonzero_order;
    std::optional<GrElement> residual; // first nonzero defect
};

// Star product mu + hbar m_1 + ... + hbar^N m_N given as ms = {m_1..m_N}.
AssocReport star_assoc_check(const std::vector<Multilinear> &ms, const std::vector<Triple> &triples);

struct MCReport
{
    // 1/2 [m_1, m_1] + [mu, m_2] per triple; [mu, m] = -dm.
    std::vector<GrElement> residuals;
    // Order-2 associativity defects per triple.
    std::vector<GrElement> defects;
    bool zero = true;  // every residual vanishes
    bool agree = true; // residual == defect on every triple
};

// Maurer-Cartan check through order 2: the order-2 associativity defect of
// mu + hbar m_1 + hbar^2 m_2 equals 1/2 [m_1, m_1] - d m_2.
MCReport mc_check(const Multilinear &m1, const Multilinear &m2, const std::vector<Triple> &triples);

// r x r matrix c with c_jk = -c_kj. Throws NotAntisymmetric.
class AntisymMatrix
{
public:
    explicit AntisymMatrix(std::vector<std::vector<Scalar>> c);
    std::size_t rank() const noexcept { return m_c.size(); }
    const Scalar &operator()(std::size_t j, std::size_t k) const { return m_c[j][k]; }
    // alpha^T c beta.
    Scalar pair(const GroupElement &alpha, const GroupElement &beta) const;

private:
    std::vector<std::vector<Scalar>> m_c;
};

// m_1(E^a x^alpha .., E^b x^beta ..) = c(alpha, beta) E^{a+b+1} x^{alpha+beta} ..
// on the first variable, extended bilinearly.
Multilinear rank2_cochain(const SignaturePtr &sig, const AntisymMatrix &c);

// Exponential completion m_2(f, g) = 1/2 c(alpha, beta)^2 E^{a+b+2} x^{alpha+beta}:
// with it mu + hbar m_1 + hbar^2 m_2 is associative mod hbar^3, while m_2 = 0
// leaves an order-2 defect c(alpha,gamma)(c(alpha,beta) - c(beta,gamma)) E^2.
Multilinear rank2_cochain2(const SignaturePtr &sig, const AntisymMatrix &c);

struct Rank2Product
{
    GrElement forward;    // x^alpha * x^beta mod hbar^2
    GrElement backward;   // x^beta * x^alpha mod hbar^2
    GrElement commutator; // forward - backward = 2 hbar c(alpha,beta) E x^{alpha+beta}
};

// Throws NotAntisymmetric (via AntisymMatrix) or InvalidArgument when the
// matrix size differs from the rank.
Rank2Product rank2_deform(const SignaturePtr &sig, const AntisymMatrix &c, const GroupElement &alpha,
                          const GroupElement &beta);

struct TShiftReport
{
    SignaturePtr deformed;                 // same data with the deformed E rule
    std::vector<Element> rules;            // D_i E_i in normal form, per variable
    std::vector<Element> order_one;        // hbar^1 coefficient of each rule
    bool nontrivial = false;               // some order_one is nonzero
};

// Installs d/dx E = (p x^{p-1} + (t + 2 hbar x) x^p) e^{tx} sum_k hbar^k x^{2k}/k! E
// mod hbar^{N+1}. Uses the signature's truncation order unless N is given.
// Throws HbarModeOff.
TShiftReport t_shift_deform(const SignaturePtr &sig, std::optional<int> N = {});

// Coefficient of hbar^k of every term, as an exact element.
Element hbar_coefficient(const Element &e, int k);
GrElement hbar_coefficient(const GrElement &e, int k);

} // namespace expweyl
