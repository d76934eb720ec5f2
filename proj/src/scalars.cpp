#include "expweyl/scalars.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "expweyl/errors.hpp"

namespace expweyl
{

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Poly num, Poly den) : m_num(std::move(num)), m_den(std::move(den))
{
    canonicalize();
}

RationalFunction RationalFunction::rational(const mpz_class &num, const mpz_class &den)
{
    return RationalFunction(Poly(num), Poly(den));
}

void RationalFunction::canonicalize()
{
    if (m_den.is_zero())
        throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (m_num.is_zero())
    {
        m_den = Poly(1);
        return;
    }
    if (m_den.is_one())
        return;
    if (m_den.is_constant())
    {
        const mpz_class d = m_den.constant_value();
        mpz_class g = m_num.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        if (d < 0)
            g = -g;
        if (g != 1)
        {
            m_num = m_num.divexact(g);
            m_den = m_den.divexact(g);
        }
        return;
    }
    Poly g = gcd(m_num, m_den);
    if (m_den.sign() < 0)
        g = -g;
    if (!g.is_one())
    {
        m_num = *exact_divide(m_num, g);
        m_den = *exact_divide(m_den, g);
    }
}

mpq_class RationalFunction::to_mpq() const
{
    mpq_class q;
    if (!m_num.is_zero())
        q.get_num() = m_num.terms().front().second;
    q.get_den() = m_den.terms().front().second;
    return q;
}

RationalFunction RationalFunction::from_mpq(const mpq_class &q)
{
    // mpq_class results are already reduced with a positive denominator.
    if (q == 0)
        return RationalFunction();
    return RationalFunction(Poly(q.get_num()), Poly(q.get_den()), Canonical{});
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.m_num = -r.m_num;
    return r;
}

RationalFunction RationalFunction::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return RationalFunction(m_den, m_num);
}

RationalFunction operator+(const RationalFunction &a, const RationalFunction &b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.is_rational() && b.is_rational())
        return RationalFunction::from_mpq(a.to_mpq() + b.to_mpq());
    if (a.m_den == b.m_den)
    {
        if (a.m_den.is_one())
            return RationalFunction(a.m_num + b.m_num);
        return RationalFunction(a.m_num + b.m_num, a.m_den);
    }
    return RationalFunction(a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den);
}

RationalFunction operator-(const RationalFunction &a, const RationalFunction &b)
{
    return a + (-b);
}

RationalFunction operator*(const RationalFunction &a, const RationalFunction &b)
{
    if (a.is_zero() || b.is_zero())
        return RationalFunction();
    if (a.is_rational() && b.is_rational())
        return RationalFunction::from_mpq(a.to_mpq() * b.to_mpq());
    if (a.m_den.is_one() && b.m_den.is_one())
        return RationalFunction(a.m_num * b.m_num);
    return RationalFunction(a.m_num * b.m_num, a.m_den * b.m_den);
}

RationalFunction operator/(const RationalFunction &a, const RationalFunction &b)
{
    return a * b.inverse();
}

std::string RationalFunction::serialize(std::span<const std::string> names) const
{
    return "(" + m_num.to_string(names) + ")/(" + m_den.to_string(names) + ")";
}

std::string RationalFunction::to_string(std::span<const std::string> names) const
{
    if (is_rational())
    {
        std::string s = m_num.constant_value().get_str();
        if (!m_den.is_one())
            s += "/" + m_den.constant_value().get_str();
        return s;
    }
    if (m_den.is_one())
        return m_num.to_string(names);
    return serialize(names);
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(RationalFunction v)
{
    if (!v.is_zero())
        m_coeffs.push_back(std::move(v));
}

Scalar Scalar::rational(long num, long den)
{
    return Scalar(RationalFunction::rational(mpz_class(num), mpz_class(den)));
}

Scalar Scalar::hbar(int order)
{
    if (order < 0)
        throw Error(ErrorCode::InvalidArgument, "negative hbar truncation order");
    return series({RationalFunction(0), RationalFunction(1)}, order);
}

Scalar Scalar::series(std::vector<RationalFunction> coeffs, int order)
{
    if (order < 0)
        throw Error(ErrorCode::InvalidArgument, "negative hbar truncation order");
    Scalar s;
    s.m_coeffs = std::move(coeffs);
    s.m_order = order;
    s.trim();
    return s;
}

Scalar Scalar::symbol(std::size_t symbol)
{
    return Scalar(RationalFunction(Poly::variable(symbol)));
}

void Scalar::trim()
{
    if (m_order != kExact && m_coeffs.size() > static_cast<std::size_t>(m_order) + 1)
        m_coeffs.resize(static_cast<std::size_t>(m_order) + 1);
    while (!m_coeffs.empty() && m_coeffs.back().is_zero())
        m_coeffs.pop_back();
}

RationalFunction Scalar::coeff(std::size_t k) const
{
    return k < m_coeffs.size() ? m_coeffs[k] : RationalFunction();
}

Scalar Scalar::truncated(int order) const
{
    Scalar s = *this;
    s.m_order = std::min(m_order, order);
    s.trim();
    return s;
}

Scalar Scalar::operator-() const
{
    Scalar s = *this;
    for (auto &c : s.m_coeffs)
        c = -c;
    return s;
}

Scalar &Scalar::operator+=(const Scalar &o)
{
    m_order = std::min(m_order, o.m_order);
    if (m_coeffs.size() < o.m_coeffs.size())
        m_coeffs.resize(o.m_coeffs.size());
    for (std::size_t k = 0; k < o.m_coeffs.size(); ++k)
        m_coeffs[k] = m_coeffs[k] + o.m_coeffs[k];
    trim();
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
    return *this += -o;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
    const int order = std::min(m_order, o.m_order);
    if (m_coeffs.empty() || o.m_coeffs.empty())
    {
        m_coeffs.clear();
        m_order = order;
        return *this;
    }
    if (m_coeffs.size() == 1 && o.m_coeffs.size() == 1)
    {
        m_coeffs[0] = m_coeffs[0] * o.m_coeffs[0];
        m_order = order;
        trim();
        return *this;
    }
    std::size_t len = m_coeffs.size() + o.m_coeffs.size() - 1;
    if (order != kExact)
        len = std::min(len, static_cast<std::size_t>(order) + 1);
    std::vector<RationalFunction> out(len);
    for (std::size_t i = 0; i < m_coeffs.size() && i < len; ++i)
        for (std::size_t j = 0; j < o.m_coeffs.size() && i + j < len; ++j)
            out[i + j] = out[i + j] + m_coeffs[i] * o.m_coeffs[j];
    m_coeffs = std::move(out);
    m_order = order;
    trim();
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "division by zero scalar");
    if (m_coeffs[0].is_zero())
        throw Error(ErrorCode::NonInvertibleSeries, "series with zero constant term is not invertible");
    Scalar out;
    out.m_order = m_order;
    const RationalFunction c0 = m_coeffs[0].inverse();
    if (m_coeffs.size() == 1)
    {
        out.m_coeffs = {c0};
        return out;
    }
    // c_k = -c0 * sum_{j=1..k} b_j c_{k-j}; the order is finite here.
    const auto len = static_cast<std::size_t>(m_order) + 1;
    out.m_coeffs.resize(len);
    out.m_coeffs[0] = c0;
    for (std::size_t k = 1; k < len; ++k)
    {
        RationalFunction acc;
        for (std::size_t j = 1; j <= k && j < m_coeffs.size(); ++j)
            acc = acc + m_coeffs[j] * out.m_coeffs[k - j];
        out.m_coeffs[k] = -(c0 * acc);
    }
    out.trim();
    return out;
}

std::string Scalar::serialize(std::span<const std::string> names) const
{
    if (!has_hbar())
        return coeff(0).serialize(names);
    std::string out;
    for (std::size_t k = 0; k < m_coeffs.size(); ++k)
    {
        if (m_coeffs[k].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        if (k == 0)
            out += m_coeffs[k].serialize(names);
        else
            out += "(" + m_coeffs[k].serialize(names) + ")*hbar^" + std::to_string(k);
    }
    return out;
}

std::string Scalar::to_string(std::span<const std::string> names) const
{
    if (!has_hbar())
        return coeff(0).to_string(names);
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < m_coeffs.size(); ++k)
    {
        const auto &c = m_coeffs[k];
        if (c.is_zero())
            continue;
        if (k == 0)
        {
            parts.push_back(c.to_string(names));
            continue;
        }
        std::string h = k == 1 ? "hbar" : "hbar^" + std::to_string(k);
        if (c.is_one())
            parts.push_back(h);
        else if ((-c).is_one())
            parts.push_back("-" + h);
        else if (c.is_rational() && c.den().is_one())
            parts.push_back(c.to_string(names) + "*" + h);
        else
            parts.push_back("(" + c.to_string(names) + ")*" + h);
    }
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
    {
        if (parts[i][0] == '-')
            out += " - " + parts[i].substr(1);
        else
            out += " + " + parts[i];
    }
    return out;
}

Scalar factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(RationalFunction(f));
}

Scalar binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return Scalar();
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(RationalFunction(b));
}

// ---------------------------------------------------------------- GroupElement

GroupElement GroupElement::integer(std::size_t rank, std::int64_t k)
{
    GroupElement g(rank);
    if (rank == 0)
        throw Error(ErrorCode::InvalidArgument, "lattice rank must be at least 1");
    g.m_coords[0] = k;
    return g;
}

GroupElement GroupElement::unit(std::size_t rank, std::size_t j)
{
    GroupElement g(rank);
    g.m_coords.at(j) = 1;
    return g;
}

bool GroupElement::is_zero() const
{
    return std::all_of(m_coords.begin(), m_coords.end(), [](std::int64_t c) { return c == 0; });
}

std::optional<std::int64_t> GroupElement::as_natural() const
{
    if (m_coords.empty())
        return 0;
    for (std::size_t j = 1; j < m_coords.size(); ++j)
        if (m_coords[j] != 0)
            return std::nullopt;
    if (m_coords[0] < 0)
        return std::nullopt;
    return m_coords[0];
}

std::int64_t GroupElement::l1() const
{
    std::int64_t s = 0;
    for (auto c : m_coords)
        s += std::llabs(c);
    return s;
}

Scalar GroupElement::embed() const
{
    Poly p;
    for (std::size_t j = 0; j < m_coords.size(); ++j)
    {
        if (m_coords[j] == 0)
            continue;
        const mpz_class c(static_cast<long>(m_coords[j]));
        p += j == 0 ? Poly(c) : Poly::variable(j - 1) * c;
    }
    return Scalar(RationalFunction(std::move(p)));
}

GroupElement GroupElement::operator-() const
{
    GroupElement g = *this;
    for (auto &c : g.m_coords)
        c = -c;
    return g;
}

GroupElement &GroupElement::operator+=(const GroupElement &o)
{
    if (o.m_coords.size() != m_coords.size())
        throw Error(ErrorCode::SignatureMismatch, "group elements of different rank");
    for (std::size_t j = 0; j < m_coords.size(); ++j)
        m_coords[j] += o.m_coords[j];
    return *this;
}

GroupElement &GroupElement::operator-=(const GroupElement &o)
{
    return *this += -o;
}

GroupElement operator*(std::int64_t k, GroupElement a)
{
    for (auto &c : a.m_coords)
        c *= k;
    return a;
}

std::string GroupElement::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < m_coords.size(); ++j)
        os << (j ? "," : "") << m_coords[j];
    os << ')';
    return os.str();
}

std::int64_t l1(const GroupElement &a)
{
    return a.l1();
}

Scalar embed(const GroupElement &a)
{
    return a.embed();
}

} // namespace expweyl
