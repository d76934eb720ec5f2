#include "expweyl/representation.hpp"

#include <algorithm>

#include "expweyl/errors.hpp"

namespace expweyl
{

Element act(const Element &p, const Element &f)
{
    p.check_same_signature(f);
    if (!f.is_function())
        throw Error(ErrorCode::NotAFunction, "act expects a function (no derivatives) as its argument");
    Element out(p.signature_ptr());
    const Element pf = mul(p, f);
    for (const auto &[m, c] : pf.terms())
        if (m.is_function())
            out.add_term(m, c);
    return out;
}

Element power_function(const SignaturePtr &sig, const std::vector<std::int64_t> &gamma)
{
    Monomial m(sig->n, sig->rank);
    for (int i = 0; i < sig->n; ++i)
        m.add_gamma1(i, gamma.at(static_cast<std::size_t>(i)));
    return Element::monomial(sig, m);
}

ProbeResult faithfulness_probe(const Element &p, int maxdeg)
{
    if (maxdeg < 0)
        throw Error(ErrorCode::InvalidArgument, "maxdeg must be >= 0");
    ProbeResult result;
    const auto &sig = p.signature_ptr();
    if (p.is_zero())
        return result;
    std::vector<std::int64_t> gamma(static_cast<std::size_t>(sig->n), 0);
    // Lexicographic enumeration with the first variable most significant.
    while (true)
    {
        Element image = act(p, power_function(sig, gamma));
        if (!image.is_zero())
        {
            result.zero = false;
            result.test_exponent = gamma;
            result.witness = std::move(image);
            return result;
        }
        int i = sig->n - 1;
        while (i >= 0 && gamma[static_cast<std::size_t>(i)] == maxdeg)
            gamma[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++gamma[static_cast<std::size_t>(i)];
    }
    return result;
}

NoetherianReport noetherian_witness(const SignaturePtr &sig, unsigned n)
{
    if (n == 0)
        throw Error(ErrorCode::InvalidArgument, "the Noetherian witness needs n >= 1");
    const auto k = static_cast<std::int64_t>(n);
    const Element xn = Element::power(sig, 0, GroupElement::integer(static_cast<std::size_t>(sig->rank), k));
    const Element top = act(Element::D(sig, 0, k), xn);
    const Element overflow = act(Element::D(sig, 0, k + 1), xn);

    NoetherianReport r;
    r.n = n;
    const auto top_c = top.as_constant();
    const auto overflow_c = overflow.as_constant();
    r.top = top_c.value_or(Scalar());
    r.overflow = overflow_c.value_or(Scalar());
    r.certified = top_c && overflow_c && !r.top.is_zero() && r.overflow.is_zero();
    return r;
}

std::vector<std::int64_t> reduce_to_constant(const Element &f)
{
    if (f.is_zero())
        throw Error(ErrorCode::ZeroElement, "reduce_to_constant needs a nonzero function");
    if (!f.is_function())
        throw Error(ErrorCode::NotAFunction, "reduce_to_constant expects a function");
    const int n = f.signature().n;
    std::vector<std::int64_t> best;
    for (const auto &[m, c] : f.terms())
    {
        std::vector<std::int64_t> gamma(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
        {
            if (m.a(i) != 0 || !m.beta(i).is_zero())
                throw Error(ErrorCode::UnsupportedElement,
                            "exponential factors never differentiate down to a constant");
            const auto natural = m.gamma(i).as_natural();
            if (!natural)
                throw Error(ErrorCode::UnsupportedElement, "only natural powers of x can be reduced to a constant");
            gamma[static_cast<std::size_t>(i)] = *natural;
        }
        if (best.empty() || gamma > best)
            best = std::move(gamma);
    }
    return best;
}

} // namespace expweyl
