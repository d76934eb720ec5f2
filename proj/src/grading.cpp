#include "expweyl/grading.hpp"

#include <cstdlib>

#include "expweyl/errors.hpp"

namespace expweyl
{

GrElement::GrElement(SignaturePtr sig) : m_sig(std::move(sig))
{
    if (!m_sig)
        throw Error(ErrorCode::InvalidArgument, "symbol without signature");
}

GrElement GrElement::unit(SignaturePtr sig)
{
    return constant(std::move(sig), Scalar(1));
}

GrElement GrElement::constant(SignaturePtr sig, const Scalar &c)
{
    GrElement u(std::move(sig));
    u.add_term(Monomial(u.m_sig->n, u.m_sig->rank), c);
    return u;
}

GrElement GrElement::monomial(SignaturePtr sig, const Monomial &m, const Scalar &c)
{
    GrElement u(std::move(sig));
    if (m.n() != u.m_sig->n || m.rank() != u.m_sig->rank)
        throw Error(ErrorCode::SignatureMismatch, "monomial shape does not match the signature");
    u.add_term(m, c);
    return u;
}

namespace
{

GrElement from_element(const Element &e)
{
    GrElement u(e.signature_ptr());
    for (const auto &[m, c] : e.terms())
        u.add_term(m, c);
    return u;
}

} // namespace

GrElement GrElement::x(SignaturePtr sig, int i)
{
    return from_element(Element::x(std::move(sig), i));
}

GrElement GrElement::y(SignaturePtr sig, int i, std::int64_t k)
{
    return from_element(Element::D(std::move(sig), i, k));
}

GrElement GrElement::E(SignaturePtr sig, int i, std::int64_t k)
{
    return from_element(Element::E(std::move(sig), i, k));
}

GrElement GrElement::exp(SignaturePtr sig, int i, const GroupElement &beta)
{
    return from_element(Element::exp(std::move(sig), i, beta));
}

GrElement GrElement::power(SignaturePtr sig, int i, const GroupElement &gamma)
{
    return from_element(Element::power(std::move(sig), i, gamma));
}

std::optional<Scalar> GrElement::as_constant() const
{
    if (m_terms.empty())
        return Scalar();
    if (m_terms.size() == 1 && m_terms.begin()->first.is_unit())
        return m_terms.begin()->second;
    return std::nullopt;
}

void GrElement::add_term(const Monomial &m, const Scalar &c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = m_terms.try_emplace(m, c);
    if (!inserted)
    {
        it->second += c;
        if (it->second.is_zero())
            m_terms.erase(it);
    }
}

void GrElement::check_same_signature(const GrElement &o) const
{
    if (!same_signature(*m_sig, *o.m_sig))
        throw Error(ErrorCode::SignatureMismatch, "operands belong to different algebras");
}

GrElement GrElement::operator-() const
{
    GrElement u = *this;
    for (auto &[m, c] : u.m_terms)
        c = -c;
    return u;
}

GrElement &GrElement::operator+=(const GrElement &o)
{
    check_same_signature(o);
    for (const auto &[m, c] : o.m_terms)
        add_term(m, c);
    return *this;
}

GrElement &GrElement::operator-=(const GrElement &o)
{
    check_same_signature(o);
    for (const auto &[m, c] : o.m_terms)
        add_term(m, -c);
    return *this;
}

GrElement &GrElement::operator*=(const Scalar &c)
{
    if (c.is_zero())
    {
        m_terms.clear();
        return *this;
    }
    for (auto it = m_terms.begin(); it != m_terms.end();)
    {
        it->second *= c;
        it = it->second.is_zero() ? m_terms.erase(it) : std::next(it);
    }
    return *this;
}

GrElement operator*(const GrElement &a, const GrElement &b)
{
    return gr_mul(a, b);
}

bool operator==(const GrElement &a, const GrElement &b)
{
    return same_signature(*a.m_sig, *b.m_sig) && a.m_terms == b.m_terms;
}

GrElement gr_mul(const GrElement &u, const GrElement &v)
{
    u.check_same_signature(v);
    GrElement out(u.signature_ptr());
    for (const auto &[m1, c1] : u.terms())
        for (const auto &[m2, c2] : v.terms())
            out.add_term(m1.times(m2), c1 * c2);
    return out;
}

// ---------------------------------------------------------------- order and degrees

std::int64_t monomial_order(const Monomial &m, const OrderWeights &w)
{
    std::int64_t total = 0;
    for (int i = 0; i < m.n(); ++i)
    {
        total += w.e * std::llabs(m.a(i));
        total += w.exp * m.beta(i).l1();
        total += w.power * m.gamma(i).l1();
        total += w.d * m.d(i);
    }
    return total;
}

std::int64_t ord(const Element &p, const OrderWeights &w)
{
    if (p.is_zero())
        throw Error(ErrorCode::ZeroElement, "the order of 0 is undefined");
    std::int64_t best = 0;
    bool first = true;
    for (const auto &[m, c] : p.terms())
    {
        const auto o = monomial_order(m, w);
        if (first || o > best)
            best = o;
        first = false;
    }
    return best;
}

namespace
{

template <typename Extract>
GroupElement common_degree(const Element &p, Extract extract, const char *what)
{
    if (p.is_zero())
        throw Error(ErrorCode::ZeroElement, "the degree of 0 is undefined");
    std::optional<GroupElement> degree;
    for (const auto &[m, c] : p.terms())
    {
        GroupElement total(static_cast<std::size_t>(m.rank()));
        for (int i = 0; i < m.n(); ++i)
            total += extract(m, i);
        if (!degree)
            degree = total;
        else if (*degree != total)
            throw Error(ErrorCode::NotHomogeneous, std::string("terms have different ") + what + " degrees " +
                                                       degree->to_string() + " and " + total.to_string());
    }
    return *degree;
}

Element top_term(const Element &e, const OrderWeights &w)
{
    const auto top = ord(e, w);
    for (const auto &[m, c] : e.terms())
        if (monomial_order(m, w) == top)
            return Element::monomial(e.signature_ptr(), m, c);
    return Element(e.signature_ptr()); // unreachable
}

} // namespace

GroupElement exp_degree(const Element &p)
{
    return common_degree(p, [](const Monomial &m, int i) { return m.beta(i); }, "exponential");
}

GroupElement power_degree(const Element &p)
{
    return common_degree(p, [](const Monomial &m, int i) { return m.gamma(i); }, "power");
}

GrElement symbol(const Element &p, const OrderWeights &w)
{
    const auto top = ord(p, w);
    GrElement u(p.signature_ptr());
    for (const auto &[m, c] : p.terms())
        if (monomial_order(m, w) == top)
            u.add_term(m, c);
    return u;
}

GrElement full_symbol(const Element &p)
{
    GrElement u(p.signature_ptr());
    for (const auto &[m, c] : p.terms())
        u.add_term(m, c);
    return u;
}

Element quantize_normal(const GrElement &u)
{
    Element e(u.signature_ptr());
    for (const auto &[m, c] : u.terms())
        e.add_term(m, c);
    return e;
}

FiltrationReport filtration_diagnostic(const Element &p, const Element &q, const OrderWeights &w)
{
    FiltrationReport r;
    r.ord_p = ord(p, w);
    r.ord_q = ord(q, w);
    const Element product = mul(p, q);
    const Element comm = commutator(p, q);
    const auto bound = r.ord_p + r.ord_q;
    if (!product.is_zero())
    {
        r.ord_product = ord(product, w);
        r.multiplicative = *r.ord_product <= bound;
        if (!r.multiplicative)
            r.product_witness = top_term(product, w);
    }
    if (!comm.is_zero())
    {
        r.ord_commutator = ord(comm, w);
        r.strict_drop = *r.ord_commutator < bound;
        if (!r.strict_drop)
            r.commutator_witness = top_term(comm, w);
    }
    return r;
}

} // namespace expweyl
