#include "expweyl/poly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace expweyl
{

namespace
{

std::uint32_t exponent_at(const Exponents &e, std::size_t i)
{
    return i < e.size() ? e[i] : 0;
}

void trim(Exponents &e)
{
    while (!e.empty() && e.back() == 0)
        e.pop_back();
}

std::uint32_t total(const Exponents &e)
{
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool divides(const Exponents &a, const Exponents &b)
{
    if (a.size() > b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Exponents add_exponents(const Exponents &a, const Exponents &b)
{
    Exponents out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = exponent_at(a, i) + exponent_at(b, i);
    return out;
}

Exponents sub_exponents(const Exponents &a, const Exponents &b)
{
    Exponents out(a);
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    trim(out);
    return out;
}

Poly shift(const Poly &p, std::size_t symbol, std::uint32_t power)
{
    if (power == 0)
        return p;
    std::vector<Poly::Term> terms = p.terms();
    for (auto &[e, c] : terms)
    {
        if (e.size() <= symbol)
            e.resize(symbol + 1, 0);
        e[symbol] += power;
    }
    return Poly::from_terms(std::move(terms));
}

Poly lc_in(const Poly &p, std::size_t symbol)
{
    auto cs = p.coefficients_in(symbol);
    return cs.empty() ? Poly() : cs.back();
}

Poly normalize_sign(const Poly &p)
{
    return p.sign() < 0 ? -p : p;
}

Poly content_in(const Poly &p, std::size_t symbol)
{
    Poly g;
    for (const auto &c : p.coefficients_in(symbol))
    {
        if (c.is_zero())
            continue;
        g = gcd(g, c);
        if (g.is_one())
            break;
    }
    return g;
}

Poly primitive_part_in(const Poly &p, std::size_t symbol)
{
    if (p.is_zero())
        return p;
    auto c = content_in(p, symbol);
    auto q = exact_divide(p, c);
    assert(q);
    return *q;
}

// Pseudo-remainder of a by b with respect to one symbol.
Poly prem(const Poly &a, const Poly &b, std::size_t symbol)
{
    const auto db = b.degree_in(symbol);
    const Poly lcb = lc_in(b, symbol);
    Poly r = a;
    while (!r.is_zero() && r.degree_in(symbol) >= db)
    {
        const auto dr = r.degree_in(symbol);
        const Poly lcr = lc_in(r, symbol);
        r = r * lcb - shift(lcr * b, symbol, dr - db);
    }
    return r;
}

} // namespace

int compare_graded_lex(const Exponents &a, const Exponents &b)
{
    const auto ta = total(a), tb = total(b);
    if (ta != tb)
        return ta < tb ? -1 : 1;
    const auto n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
    {
        const auto x = exponent_at(a, i), y = exponent_at(b, i);
        if (x != y)
            return x < y ? -1 : 1;
    }
    return 0;
}

Poly::Poly(const mpz_class &constant)
{
    if (constant != 0)
        m_terms.emplace_back(Exponents{}, constant);
}

Poly Poly::variable(std::size_t symbol)
{
    Exponents e(symbol + 1, 0);
    e[symbol] = 1;
    Poly p;
    p.m_terms.emplace_back(std::move(e), mpz_class(1));
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms)
{
    Poly p;
    p.m_terms = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize()
{
    for (auto &t : m_terms)
        trim(t.first);
    std::sort(m_terms.begin(), m_terms.end(),
              [](const Term &x, const Term &y) { return compare_graded_lex(x.first, y.first) > 0; });
    std::vector<Term> merged;
    merged.reserve(m_terms.size());
    for (auto &t : m_terms)
    {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term &t) { return t.second == 0; }),
                 merged.end());
    m_terms = std::move(merged);
}

bool Poly::is_constant() const noexcept
{
    return m_terms.empty() || (m_terms.size() == 1 && m_terms.front().first.empty());
}

mpz_class Poly::constant_value() const
{
    assert(is_constant());
    return m_terms.empty() ? mpz_class(0) : m_terms.front().second;
}

bool Poly::is_one() const
{
    return m_terms.size() == 1 && m_terms.front().first.empty() && m_terms.front().second == 1;
}

int Poly::sign() const
{
    return m_terms.empty() ? 0 : sgn(m_terms.front().second);
}

std::size_t Poly::symbol_span() const
{
    std::size_t s = 0;
    for (const auto &t : m_terms)
        s = std::max(s, t.first.size());
    return s;
}

std::uint32_t Poly::degree_in(std::size_t symbol) const
{
    std::uint32_t d = 0;
    for (const auto &t : m_terms)
        d = std::max(d, exponent_at(t.first, symbol));
    return d;
}

std::uint32_t Poly::total_degree() const
{
    return m_terms.empty() ? 0 : total(m_terms.front().first);
}

mpz_class Poly::content() const
{
    mpz_class g = 0;
    for (const auto &t : m_terms)
    {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Poly Poly::operator-() const
{
    Poly p = *this;
    for (auto &t : p.m_terms)
        t.second = -t.second;
    return p;
}

Poly &Poly::operator+=(const Poly &o)
{
    if (o.is_zero())
        return *this;
    // Merge two descending sequences.
    std::vector<Term> out;
    out.reserve(m_terms.size() + o.m_terms.size());
    std::size_t i = 0, j = 0;
    while (i < m_terms.size() || j < o.m_terms.size())
    {
        int c;
        if (i == m_terms.size())
            c = -1;
        else if (j == o.m_terms.size())
            c = 1;
        else
            c = compare_graded_lex(m_terms[i].first, o.m_terms[j].first);
        if (c > 0)
            out.push_back(std::move(m_terms[i++]));
        else if (c < 0)
            out.push_back(o.m_terms[j++]);
        else
        {
            mpz_class s = m_terms[i].second + o.m_terms[j].second;
            if (s != 0)
                out.emplace_back(std::move(m_terms[i].first), std::move(s));
            ++i;
            ++j;
        }
    }
    m_terms = std::move(out);
    return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
    return *this += -o;
}

Poly operator*(const Poly &a, const Poly &b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    if (b.is_constant())
        return a * b.constant_value();
    if (a.is_constant())
        return b * a.constant_value();
    std::vector<Poly::Term> terms;
    terms.reserve(a.m_terms.size() * b.m_terms.size());
    for (const auto &x : a.m_terms)
        for (const auto &y : b.m_terms)
            terms.emplace_back(add_exponents(x.first, y.first), x.second * y.second);
    return Poly::from_terms(std::move(terms));
}

Poly &Poly::operator*=(const Poly &o)
{
    *this = *this * o;
    return *this;
}

Poly &Poly::operator*=(const mpz_class &c)
{
    if (c == 0)
        m_terms.clear();
    else
        for (auto &t : m_terms)
            t.second *= c;
    return *this;
}

Poly Poly::divexact(const mpz_class &c) const
{
    Poly p = *this;
    for (auto &t : p.m_terms)
        mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
    return p;
}

std::vector<Poly> Poly::coefficients_in(std::size_t symbol) const
{
    std::vector<std::vector<Term>> buckets;
    for (const auto &[e, c] : m_terms)
    {
        const auto k = exponent_at(e, symbol);
        if (buckets.size() <= k)
            buckets.resize(k + 1);
        Exponents rest = e;
        if (symbol < rest.size())
            rest[symbol] = 0;
        buckets[k].emplace_back(std::move(rest), c);
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto &b : buckets)
        out.push_back(Poly::from_terms(std::move(b)));
    return out;
}

Poly Poly::from_coefficients_in(std::size_t symbol, const std::vector<Poly> &coeffs)
{
    Poly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        out += shift(coeffs[k], symbol, static_cast<std::uint32_t>(k));
    return out;
}

std::string Poly::to_string(std::span<const std::string> names) const
{
    if (m_terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : m_terms)
    {
        mpz_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (e.empty() || mag != 1)
        {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t s = 0; s < e.size(); ++s)
        {
            if (e[s] == 0)
                continue;
            if (wrote)
                os << '*';
            if (s < names.size())
                os << names[s];
            else
                os << 'g' << (s + 2);
            if (e[s] > 1)
                os << '^' << e[s];
            wrote = true;
        }
    }
    return os.str();
}

std::optional<Poly> exact_divide(const Poly &a, const Poly &b)
{
    if (b.is_zero())
        return std::nullopt;
    if (b.is_constant())
    {
        const mpz_class c = b.constant_value();
        for (const auto &t : a.terms())
            if (!mpz_divisible_p(t.second.get_mpz_t(), c.get_mpz_t()))
                return std::nullopt;
        return a.divexact(c);
    }
    Poly r = a;
    std::vector<Poly::Term> q;
    const auto &[lb, lcb] = b.leading();
    while (!r.is_zero())
    {
        const auto &[lr, lcr] = r.leading();
        if (!divides(lb, lr) || !mpz_divisible_p(lcr.get_mpz_t(), lcb.get_mpz_t()))
            return std::nullopt;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), lcr.get_mpz_t(), lcb.get_mpz_t());
        Poly t = Poly::from_terms({{sub_exponents(lr, lb), c}});
        q.emplace_back(t.terms().front());
        r -= t * b;
    }
    return Poly::from_terms(std::move(q));
}

Poly gcd(const Poly &a, const Poly &b)
{
    if (a.is_zero())
        return normalize_sign(b);
    if (b.is_zero())
        return normalize_sign(a);
    if (a.is_constant() || b.is_constant())
    {
        mpz_class g = a.is_constant() ? abs(a.constant_value()) : a.content();
        const mpz_class h = b.is_constant() ? abs(b.constant_value()) : b.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
        return Poly(g);
    }
    const std::size_t symbol = std::max(a.symbol_span(), b.symbol_span()) - 1;
    const Poly ca = content_in(a, symbol);
    const Poly cb = content_in(b, symbol);
    const Poly content_gcd = gcd(ca, cb);
    Poly pa = *exact_divide(a, ca);
    Poly pb = *exact_divide(b, cb);
    if (pa.degree_in(symbol) < pb.degree_in(symbol))
        std::swap(pa, pb);
    while (!pb.is_zero() && pb.degree_in(symbol) > 0)
    {
        Poly r = prem(pa, pb, symbol);
        pa = std::move(pb);
        pb = primitive_part_in(r, symbol);
    }
    if (!pb.is_zero())
        return content_gcd; // primitive parts are coprime
    return normalize_sign(primitive_part_in(pa, symbol) * content_gcd);
}

} // namespace expweyl
