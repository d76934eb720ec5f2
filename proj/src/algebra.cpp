#include "expweyl/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "expweyl/errors.hpp"

namespace expweyl
{

// ---------------------------------------------------------------- signature

void AlgebraSignature::validate() const
{
    if (n < 1)
        throw Error(ErrorCode::InvalidConfig, "need at least one variable");
    if (rank < 1)
        throw Error(ErrorCode::InvalidConfig, "group rank must be at least 1 (g_1 = 1 is mandatory)");
    if (p.size() != static_cast<std::size_t>(n) || t.size() != static_cast<std::size_t>(n))
        throw Error(ErrorCode::InvalidConfig, "p and t must have one entry per variable");
    for (int pi : p)
        if (pi < 1)
            throw Error(ErrorCode::InvalidConfig, "p_i must be >= 1");
    for (const auto &ti : t)
        if (ti.rank() != static_cast<std::size_t>(rank))
            throw Error(ErrorCode::InvalidConfig, "t_i must be a coordinate vector of length r");
    if (generator_names.size() + 1 != static_cast<std::size_t>(rank))
        throw Error(ErrorCode::InvalidConfig, "need one generator name for each of g_2..g_r");
    for (const auto &name : generator_names)
    {
        if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0]))))
            throw Error(ErrorCode::InvalidConfig, "generator names must start with a letter: '" + name + "'");
        if (name == "hbar" || name == "exp" || name == "E" || name == "D" || name == "x" || name == "y")
            throw Error(ErrorCode::InvalidConfig, "generator name '" + name + "' is reserved");
    }
    if (hbar_order && *hbar_order < 0)
        throw Error(ErrorCode::InvalidConfig, "hbar order must be >= 0");
    if (e_rule == ERule::TShift && !hbar_order)
        throw Error(ErrorCode::HbarModeOff, "the t-shift rule needs hbar mode");
}

SignaturePtr make_signature(AlgebraSignature sig)
{
    if (sig.generator_names.empty() && sig.rank > 1)
        for (int j = 2; j <= sig.rank; ++j)
            sig.generator_names.push_back("g" + std::to_string(j));
    sig.validate();
    return std::make_shared<const AlgebraSignature>(std::move(sig));
}

SignaturePtr make_signature(int n, int rank, int p, const GroupElement &t, std::optional<int> hbar_order)
{
    AlgebraSignature sig;
    sig.n = n;
    sig.rank = rank;
    sig.p.assign(static_cast<std::size_t>(std::max(n, 0)), p);
    sig.t.assign(static_cast<std::size_t>(std::max(n, 0)), t);
    sig.hbar_order = hbar_order;
    return make_signature(std::move(sig));
}

bool same_signature(const AlgebraSignature &a, const AlgebraSignature &b)
{
    return &a == &b || a == b;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(int n, int rank)
    : m_n(n), m_rank(rank), m_data(1 + 2 * static_cast<std::size_t>(n) + 2 * static_cast<std::size_t>(n) * rank, 0)
{
}

GroupElement Monomial::beta(int i) const
{
    const auto s = m_data.begin() + static_cast<std::ptrdiff_t>(beta_at(i));
    return GroupElement(std::vector<std::int64_t>(s, s + m_rank));
}

GroupElement Monomial::gamma(int i) const
{
    const auto s = m_data.begin() + static_cast<std::ptrdiff_t>(gamma_at(i));
    return GroupElement(std::vector<std::int64_t>(s, s + m_rank));
}

void Monomial::set_d(int i, std::int64_t v)
{
    if (v < 0)
        throw Error(ErrorCode::NegativePower, "derivatives cannot carry negative exponents");
    m_data[0] += v - m_data[1 + i];
    m_data[1 + i] = v;
}

void Monomial::set_beta(int i, const GroupElement &g)
{
    std::copy(g.coords().begin(), g.coords().end(), m_data.begin() + static_cast<std::ptrdiff_t>(beta_at(i)));
}

void Monomial::set_gamma(int i, const GroupElement &g)
{
    std::copy(g.coords().begin(), g.coords().end(), m_data.begin() + static_cast<std::ptrdiff_t>(gamma_at(i)));
}

void Monomial::add_beta(int i, const GroupElement &g)
{
    for (int j = 0; j < m_rank; ++j)
        m_data[beta_at(i) + j] += g[static_cast<std::size_t>(j)];
}

void Monomial::add_gamma(int i, const GroupElement &g)
{
    for (int j = 0; j < m_rank; ++j)
        m_data[gamma_at(i) + j] += g[static_cast<std::size_t>(j)];
}

bool Monomial::is_unit() const
{
    return std::all_of(m_data.begin(), m_data.end(), [](std::int64_t v) { return v == 0; });
}

Monomial Monomial::function_part() const
{
    Monomial m = *this;
    for (int i = 0; i <= m_n; ++i)
        m.m_data[i] = 0;
    return m;
}

Monomial Monomial::times(const Monomial &o) const
{
    Monomial m = *this;
    for (std::size_t k = 0; k < m_data.size(); ++k)
        m.m_data[k] += o.m_data[k];
    return m;
}

// ---------------------------------------------------------------- Element

Element::Element(SignaturePtr sig) : m_sig(std::move(sig))
{
    if (!m_sig)
        throw Error(ErrorCode::InvalidArgument, "element without signature");
}

Element Element::unit(SignaturePtr sig)
{
    return constant(std::move(sig), Scalar(1));
}

Element Element::constant(SignaturePtr sig, const Scalar &c)
{
    Element e(std::move(sig));
    e.add_term(e.unit_monomial(), c);
    return e;
}

Element Element::monomial(SignaturePtr sig, const Monomial &m, const Scalar &c)
{
    Element e(std::move(sig));
    if (m.n() != e.m_sig->n || m.rank() != e.m_sig->rank)
        throw Error(ErrorCode::SignatureMismatch, "monomial shape does not match the signature");
    e.add_term(m, c);
    return e;
}

namespace
{

void check_variable(const AlgebraSignature &sig, int i)
{
    if (i < 0 || i >= sig.n)
        throw Error(ErrorCode::SignatureMismatch,
                    "variable index " + std::to_string(i + 1) + " outside 1.." + std::to_string(sig.n));
}

void check_rank(const AlgebraSignature &sig, const GroupElement &g)
{
    if (g.rank() != static_cast<std::size_t>(sig.rank))
        throw Error(ErrorCode::SignatureMismatch, "group element " + g.to_string() + " has the wrong rank");
}

} // namespace

Element Element::x(SignaturePtr sig, int i)
{
    return power(sig, i, GroupElement::integer(static_cast<std::size_t>(sig->rank), 1));
}

Element Element::D(SignaturePtr sig, int i, std::int64_t k)
{
    check_variable(*sig, i);
    Monomial m(sig->n, sig->rank);
    m.set_d(i, k);
    return monomial(std::move(sig), m);
}

Element Element::E(SignaturePtr sig, int i, std::int64_t k)
{
    check_variable(*sig, i);
    Monomial m(sig->n, sig->rank);
    m.set_a(i, k);
    return monomial(std::move(sig), m);
}

Element Element::exp(SignaturePtr sig, int i, const GroupElement &beta)
{
    check_variable(*sig, i);
    check_rank(*sig, beta);
    Monomial m(sig->n, sig->rank);
    m.set_beta(i, beta);
    return monomial(std::move(sig), m);
}

Element Element::power(SignaturePtr sig, int i, const GroupElement &gamma)
{
    check_variable(*sig, i);
    check_rank(*sig, gamma);
    Monomial m(sig->n, sig->rank);
    m.set_gamma(i, gamma);
    return monomial(std::move(sig), m);
}

bool Element::is_function() const
{
    return std::all_of(m_terms.begin(), m_terms.end(), [](const auto &t) { return t.first.is_function(); });
}

std::optional<Scalar> Element::as_constant() const
{
    if (m_terms.empty())
        return Scalar();
    if (m_terms.size() == 1 && m_terms.begin()->first.is_unit())
        return m_terms.begin()->second;
    return std::nullopt;
}

void Element::add_term(const Monomial &m, const Scalar &c)
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

void Element::check_same_signature(const Element &o) const
{
    if (!same_signature(*m_sig, *o.m_sig))
        throw Error(ErrorCode::SignatureMismatch, "operands belong to different algebras");
}

Element Element::operator-() const
{
    Element e = *this;
    for (auto &[m, c] : e.m_terms)
        c = -c;
    return e;
}

Element &Element::operator+=(const Element &o)
{
    check_same_signature(o);
    for (const auto &[m, c] : o.m_terms)
        add_term(m, c);
    return *this;
}

Element &Element::operator-=(const Element &o)
{
    check_same_signature(o);
    for (const auto &[m, c] : o.m_terms)
        add_term(m, -c);
    return *this;
}

Element &Element::operator*=(const Scalar &c)
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

Element operator*(const Element &a, const Element &b)
{
    return mul(a, b);
}

bool operator==(const Element &a, const Element &b)
{
    return same_signature(*a.m_sig, *b.m_sig) && a.m_terms == b.m_terms;
}

// ---------------------------------------------------------------- differentiation

namespace
{

Scalar hbar_power(int k, int order)
{
    std::vector<RationalFunction> c(static_cast<std::size_t>(k) + 1);
    c[static_cast<std::size_t>(k)] = RationalFunction(1);
    return Scalar::series(std::move(c), order);
}

// d/dx_i of E_i^a, excluding the factor E_i^a itself, accumulated into out.
void diff_e_factor(const AlgebraSignature &sig, int i, const Monomial &m, Element &out)
{
    const std::int64_t a = m.a(i);
    const std::int64_t p = sig.p[static_cast<std::size_t>(i)];
    const GroupElement &t = sig.t[static_cast<std::size_t>(i)];
    const Scalar t_value = t.embed();
    const Scalar a_scalar(static_cast<long>(a));

    if (sig.e_rule == ERule::Classical)
    {
        // a (p x^{p-1} + t x^p) e^{tx}
        Monomial m1 = m;
        m1.add_gamma1(i, p - 1);
        m1.add_beta(i, t);
        out.add_term(m1, a_scalar * Scalar(static_cast<long>(p)));
        if (!t.is_zero())
        {
            Monomial m2 = m;
            m2.add_gamma1(i, p);
            m2.add_beta(i, t);
            out.add_term(m2, a_scalar * t_value);
        }
        return;
    }

    // a (p x^{p-1} + (t + 2 hbar x) x^p) e^{tx} sum_k hbar^k x^{2k} / k!
    const int order = *sig.hbar_order;
    for (int k = 0; k <= order; ++k)
    {
        const Scalar w = hbar_power(k, order) / factorial(static_cast<unsigned>(k));
        Monomial m1 = m;
        m1.add_gamma1(i, p - 1 + 2 * k);
        m1.add_beta(i, t);
        out.add_term(m1, a_scalar * Scalar(static_cast<long>(p)) * w);
        if (!t.is_zero())
        {
            Monomial m2 = m;
            m2.add_gamma1(i, p + 2 * k);
            m2.add_beta(i, t);
            out.add_term(m2, a_scalar * t_value * w);
        }
        if (k + 1 <= order)
        {
            Monomial m3 = m;
            m3.add_gamma1(i, p + 1 + 2 * k);
            m3.add_beta(i, t);
            out.add_term(m3, a_scalar * Scalar(2) * hbar_power(k + 1, order) / factorial(static_cast<unsigned>(k)));
        }
    }
}

} // namespace

Element diff_function(const SignaturePtr &sig, int i, const Monomial &m)
{
    check_variable(*sig, i);
    if (!m.is_function())
        throw Error(ErrorCode::NotAFunction, "diff_function expects a monomial without derivatives");
    Element out(sig);
    if (m.a(i) != 0)
        diff_e_factor(*sig, i, m, out);
    const GroupElement beta = m.beta(i);
    if (!beta.is_zero())
        out.add_term(m, beta.embed());
    const GroupElement gamma = m.gamma(i);
    if (!gamma.is_zero())
    {
        Monomial lowered = m;
        lowered.add_gamma1(i, -1);
        out.add_term(lowered, gamma.embed());
    }
    return out;
}

Element diff_function(int i, const Element &f)
{
    Element out(f.signature_ptr());
    for (const auto &[m, c] : f.terms())
        out += diff_function(f.signature_ptr(), i, m) * c;
    return out;
}

// ---------------------------------------------------------------- products

namespace
{

// Memoized iterated derivatives D^k f of a single function monomial.
class DerivativeCache
{
public:
    explicit DerivativeCache(const SignaturePtr &sig) : m_sig(sig) {}

    const Element &get(const Monomial &f, const std::vector<std::int64_t> &k)
    {
        auto key = std::make_pair(f, k);
        if (auto it = m_cache.find(key); it != m_cache.end())
            return it->second;
        Element value(m_sig);
        auto pos = std::find_if(k.begin(), k.end(), [](std::int64_t v) { return v > 0; });
        if (pos == k.end())
            value.add_term(f, Scalar(1));
        else
        {
            const int i = static_cast<int>(pos - k.begin());
            auto lower = k;
            --lower[static_cast<std::size_t>(i)];
            const Element prev = get(f, lower);
            for (const auto &[g, c] : prev.terms())
            {
                const Element dg = diff_function(m_sig, i, g);
                for (const auto &[h, ch] : dg.terms())
                    value.add_term(h, ch * c);
            }
        }
        return m_cache.emplace(std::move(key), std::move(value)).first->second;
    }

private:
    SignaturePtr m_sig;
    std::map<std::pair<Monomial, std::vector<std::int64_t>>, Element> m_cache;
};

// Odometer over 0 <= k_i <= bound_i; returns false after the last index.
bool next_index(std::vector<std::int64_t> &k, const std::vector<std::int64_t> &bound)
{
    for (std::size_t i = 0; i < k.size(); ++i)
    {
        if (k[i] < bound[i])
        {
            ++k[i];
            return true;
        }
        k[i] = 0;
    }
    return false;
}

} // namespace

Element mul(const Element &p, const Element &q)
{
    p.check_same_signature(q);
    const SignaturePtr &sig = p.signature_ptr();
    const int n = sig->n;
    Element out(sig);
    DerivativeCache cache(sig);

    for (const auto &[m1, c1] : p.terms())
    {
        const Monomial f1 = m1.function_part();
        std::vector<std::int64_t> d1(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            d1[static_cast<std::size_t>(i)] = m1.d(i);

        for (const auto &[m2, c2] : q.terms())
        {
            const Monomial f2 = m2.function_part();
            const Scalar c12 = c1 * c2;
            // D^{d1} f2 = sum_k prod_i C(d1_i, k_i) (D^k f2) D^{d1-k}
            std::vector<std::int64_t> k(static_cast<std::size_t>(n), 0);
            do
            {
                mpz_class b = 1;
                for (int i = 0; i < n; ++i)
                {
                    mpz_class c;
                    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(d1[static_cast<std::size_t>(i)]),
                                 static_cast<unsigned long>(k[static_cast<std::size_t>(i)]));
                    b *= c;
                }
                const Scalar coeff = b == 1 ? c12 : c12 * Scalar(RationalFunction(b));
                const Element &deriv = cache.get(f2, k);
                for (const auto &[g, cg] : deriv.terms())
                {
                    Monomial r = f1.times(g);
                    for (int i = 0; i < n; ++i)
                        r.set_d(i, d1[static_cast<std::size_t>(i)] - k[static_cast<std::size_t>(i)] + m2.d(i));
                    out.add_term(r, coeff * cg);
                }
            } while (next_index(k, d1));
        }
    }
    return out;
}

Element commutator(const Element &p, const Element &q)
{
    return mul(p, q) - mul(q, p);
}

Element pow(const Element &p, std::int64_t k)
{
    if (k < 0)
        throw Error(ErrorCode::NegativePower, "pow is defined for natural exponents only");
    Element out = Element::unit(p.signature_ptr());
    for (std::int64_t j = 0; j < k; ++j)
        out = mul(out, p);
    return out;
}

Element function_product(const Element &f, const Element &g)
{
    f.check_same_signature(g);
    if (!f.is_function() || !g.is_function())
        throw Error(ErrorCode::NotAFunction, "function_product expects functions");
    Element out(f.signature_ptr());
    for (const auto &[m1, c1] : f.terms())
        for (const auto &[m2, c2] : g.terms())
            out.add_term(m1.times(m2), c1 * c2);
    return out;
}

} // namespace expweyl
