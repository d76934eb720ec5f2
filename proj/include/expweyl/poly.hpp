#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace expweyl
{

// Exponent vector of a polynomial term. Trailing zeros are always trimmed so
// that vectors of different lengths compare as if zero-padded.
using Exponents = std::vector<std::uint32_t>;

// Graded-lexicographic comparison: total degree first, then lexicographic on
// the (implicitly zero-padded) exponent vectors. Returns -1, 0 or 1.
int compare_graded_lex(const Exponents &a, const Exponents &b);

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients. Terms are stored in strictly descending graded-lex order with
// nonzero coefficients, which makes structural equality canonical.
class Poly
{
public:
    using Term = std::pair<Exponents, mpz_class>;

    Poly() = default;
    explicit Poly(const mpz_class &constant);
    explicit Poly(long constant) : Poly(mpz_class(constant)) {}

    // The polynomial g_{symbol} (0-based symbol index).
    static Poly variable(std::size_t symbol);
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term> &terms() const noexcept { return m_terms; }
    bool is_zero() const noexcept { return m_terms.empty(); }
    bool is_constant() const noexcept;
    // Requires is_constant().
    mpz_class constant_value() const;
    bool is_one() const;

    // Leading term in graded-lex order; requires !is_zero().
    const Term &leading() const { return m_terms.front(); }
    int sign() const; // sign of the leading coefficient, 0 for zero

    // Number of symbols that actually occur (1 + highest symbol index used).
    std::size_t symbol_span() const;
    std::uint32_t degree_in(std::size_t symbol) const;
    std::uint32_t total_degree() const;

    // Integer content (gcd of all coefficients, positive); zero for zero.
    mpz_class content() const;

    Poly operator-() const;
    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const Poly &o);
    Poly &operator*=(const mpz_class &c);

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const mpz_class &c) { return a *= c; }

    friend bool operator==(const Poly &a, const Poly &b) { return a.m_terms == b.m_terms; }

    // Divides every coefficient by c; c must divide each exactly.
    Poly divexact(const mpz_class &c) const;

    // Polynomial as a sequence of coefficients in one symbol (index = power).
    std::vector<Poly> coefficients_in(std::size_t symbol) const;
    static Poly from_coefficients_in(std::size_t symbol, const std::vector<Poly> &coeffs);

    std::string to_string(std::span<const std::string> names) const;

private:
    void normalize();

    std::vector<Term> m_terms;
};

// Exact division; std::nullopt when b does not divide a in Z[g].
std::optional<Poly> exact_divide(const Poly &a, const Poly &b);

// Greatest common divisor in Z[g], normalized to a positive leading
// coefficient. gcd(0, 0) = 0.
Poly gcd(const Poly &a, const Poly &b);

} // namespace expweyl
