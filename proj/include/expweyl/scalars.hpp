#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "expweyl/poly.hpp"

namespace expweyl
{

// Element of Q(g_2, ..., g_r): a ratio of integer polynomials kept in reduced
// canonical form. gcd(num, den) = 1 (including integer content) and the
// leading coefficient of the denominator is positive, so structural equality
// is mathematical equality.
class RationalFunction
{
public:
    RationalFunction() : m_den(1) {}
    RationalFunction(long v) : m_num(v), m_den(1) {}
    explicit RationalFunction(const mpz_class &v) : m_num(v), m_den(1) {}
    explicit RationalFunction(Poly num) : m_num(std::move(num)), m_den(1) {}
    // Throws DivisionByZero when den is zero.
    RationalFunction(Poly num, Poly den);
    static RationalFunction rational(const mpz_class &num, const mpz_class &den);

    const Poly &num() const noexcept { return m_num; }
    const Poly &den() const noexcept { return m_den; }
    bool is_zero() const noexcept { return m_num.is_zero(); }
    bool is_one() const { return m_num.is_one() && m_den.is_one(); }
    bool is_rational() const { return m_num.is_constant() && m_den.is_constant(); }
    bool is_polynomial() const { return m_den.is_one(); }

    RationalFunction operator-() const;
    RationalFunction inverse() const;

    friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b);
    friend bool operator==(const RationalFunction &a, const RationalFunction &b) = default;

    // "(num)/(den)" with the given symbol names for g_2, g_3, ...
    std::string serialize(std::span<const std::string> names) const;
    // Shortest readable rendering that the element parser reads back.
    std::string to_string(std::span<const std::string> names) const;

private:
    struct Canonical
    {
    };
    RationalFunction(Poly num, Poly den, Canonical) : m_num(std::move(num)), m_den(std::move(den)) {}
    // Requires is_rational().
    mpq_class to_mpq() const;
    static RationalFunction from_mpq(const mpq_class &q);
    void canonicalize();

    Poly m_num;
    Poly m_den;
};

// Coefficient ring element. Without hbar this is a plain RationalFunction;
// in hbar mode it is a truncated series sum_k c_k hbar^k with k <= order.
// Scalars of finite order absorb exact ones; mixing two finite orders
// truncates to the smaller.
class Scalar
{
public:
    static constexpr int kExact = std::numeric_limits<int>::max();

    Scalar() = default;
    Scalar(long v) : Scalar(RationalFunction(v)) {}
    Scalar(RationalFunction v);
    static Scalar rational(long num, long den);
    // The formal parameter hbar truncated at hbar^{order+1}; zero when order == 0.
    static Scalar hbar(int order);
    // Build a series from its coefficients; drops powers above order.
    static Scalar series(std::vector<RationalFunction> coeffs, int order);
    // The symbol g_{symbol+2}.
    static Scalar symbol(std::size_t symbol);

    int order() const noexcept { return m_order; }
    bool has_hbar() const noexcept { return m_coeffs.size() > 1; }
    bool is_zero() const noexcept { return m_coeffs.empty(); }
    bool is_one() const { return m_coeffs.size() == 1 && m_coeffs[0].is_one(); }
    // Plain rational number (no symbols, no hbar).
    bool is_rational() const { return m_coeffs.size() <= 1 && (m_coeffs.empty() || m_coeffs[0].is_rational()); }
    // Coefficient of hbar^k (zero beyond the stored length).
    RationalFunction coeff(std::size_t k) const;
    const std::vector<RationalFunction> &coeffs() const noexcept { return m_coeffs; }
    // Same value with the truncation order lowered (never raised).
    Scalar truncated(int order) const;

    Scalar operator-() const;
    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    // Throws DivisionByZero, or NonInvertibleSeries for a series whose
    // constant term vanishes.
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(const Scalar &a, const Scalar &b) { return a * b.inverse(); }
    // Value equality; truncation orders are not compared.
    friend bool operator==(const Scalar &a, const Scalar &b) { return a.m_coeffs == b.m_coeffs; }

    std::string serialize(std::span<const std::string> names) const;
    std::string to_string(std::span<const std::string> names) const;

private:
    void trim();

    std::vector<RationalFunction> m_coeffs; // index = power of hbar
    int m_order = kExact;
};

Scalar factorial(unsigned n);
Scalar binomial(std::int64_t n, std::int64_t k);

// Element of the rank-r lattice A with fixed generators g_1 = 1, g_2, ..., g_r.
class GroupElement
{
public:
    GroupElement() = default;
    explicit GroupElement(std::size_t rank) : m_coords(rank, 0) {}
    explicit GroupElement(std::vector<std::int64_t> coords) : m_coords(std::move(coords)) {}
    // k * g_1 in a lattice of the given rank.
    static GroupElement integer(std::size_t rank, std::int64_t k);
    static GroupElement unit(std::size_t rank, std::size_t j);

    std::size_t rank() const noexcept { return m_coords.size(); }
    const std::vector<std::int64_t> &coords() const noexcept { return m_coords; }
    std::int64_t operator[](std::size_t j) const { return m_coords[j]; }
    bool is_zero() const;
    // Nonnegative multiple of g_1 (a natural number inside A).
    std::optional<std::int64_t> as_natural() const;
    std::int64_t l1() const;
    // sum_j coords_j * g_j with g_1 = 1, as a scalar.
    Scalar embed() const;

    GroupElement operator-() const;
    GroupElement &operator+=(const GroupElement &o);
    GroupElement &operator-=(const GroupElement &o);
    friend GroupElement operator+(GroupElement a, const GroupElement &b) { return a += b; }
    friend GroupElement operator-(GroupElement a, const GroupElement &b) { return a -= b; }
    friend GroupElement operator*(std::int64_t k, GroupElement a);
    friend bool operator==(const GroupElement &, const GroupElement &) = default;
    friend auto operator<=>(const GroupElement &, const GroupElement &) = default;

    // "(c1,c2,...)".
    std::string to_string() const;

private:
    std::vector<std::int64_t> m_coords;
};

std::int64_t l1(const GroupElement &a);
Scalar embed(const GroupElement &a);

} // namespace expweyl
