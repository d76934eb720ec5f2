#include "expweyl/random.hpp"

namespace expweyl
{

std::int64_t Random::uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(m_rng);
}

Scalar Random::scalar(const AlgebraSignature &sig, bool symbolic)
{
    std::int64_t p = 0;
    while (p == 0)
        p = uniform(-3, 3);
    Scalar s = Scalar::rational(static_cast<long>(p), static_cast<long>(uniform(1, 3)));
    if (symbolic && sig.rank > 1 && coin())
    {
        const auto j = static_cast<std::size_t>(uniform(0, sig.rank - 2));
        s *= Scalar::symbol(j) + Scalar(static_cast<long>(uniform(-2, 2)));
    }
    return s;
}

GroupElement Random::group(int rank, int bound, bool natural_multiple_of_one)
{
    GroupElement g(static_cast<std::size_t>(rank));
    if (natural_multiple_of_one)
        return GroupElement::integer(static_cast<std::size_t>(rank), uniform(0, bound));
    std::vector<std::int64_t> c(static_cast<std::size_t>(rank));
    for (auto &v : c)
        v = uniform(-bound, bound);
    return GroupElement(std::move(c));
}

Monomial Random::monomial(const AlgebraSignature &sig, const RandomShape &shape)
{
    Monomial m(sig.n, sig.rank);
    const int b = shape.max_exponent;
    for (int i = 0; i < sig.n; ++i)
    {
        if (shape.weyl_only)
        {
            m.add_gamma1(i, uniform(0, b));
        }
        else
        {
            // Sparse exponent data keeps products at desk scale.
            if (uniform(0, 2) == 0)
                m.set_a(i, uniform(-b, b));
            if (uniform(0, 2) == 0)
                m.set_beta(i, group(sig.rank, b));
            if (uniform(0, 1) == 0)
                m.set_gamma(i, group(sig.rank, b));
        }
        if (!shape.functions_only)
            m.set_d(i, uniform(0, b));
    }
    return m;
}

Element Random::element(const SignaturePtr &sig, const RandomShape &shape)
{
    Element e(sig);
    const auto terms = uniform(1, shape.max_terms);
    for (std::int64_t k = 0; k < terms; ++k)
        e.add_term(monomial(*sig, shape), scalar(*sig, shape.symbolic_coefficients));
    return e;
}

GrElement Random::symbol(const SignaturePtr &sig, const RandomShape &shape)
{
    GrElement u(sig);
    const auto terms = uniform(1, shape.max_terms);
    for (std::int64_t k = 0; k < terms; ++k)
        u.add_term(monomial(*sig, shape), scalar(*sig, shape.symbolic_coefficients));
    return u;
}

DerivationElement Random::derivation(const SignaturePtr &sig, const RandomShape &shape)
{
    RandomShape f = shape;
    f.functions_only = true;
    DerivationElement u(sig);
    for (int i = 0; i < sig->n; ++i)
        u += DerivationElement::single(element(sig, f), i);
    return u;
}

Chain Random::chain(const SignaturePtr &sig, int degree, int max_tensors, const RandomShape &shape)
{
    Chain c(sig, degree);
    const auto count = uniform(1, max_tensors);
    for (std::int64_t k = 0; k < count; ++k)
    {
        std::vector<Element> factors;
        for (int q = 0; q <= degree; ++q)
            factors.push_back(element(sig, shape));
        c.add_tensor(factors, scalar(*sig, shape.symbolic_coefficients));
    }
    return c;
}

Vector Random::vector(std::size_t dim)
{
    Vector v(dim);
    for (auto &s : v)
        if (coin())
            s = Scalar::rational(static_cast<long>(uniform(-3, 3)), static_cast<long>(uniform(1, 2)));
    return v;
}

} // namespace expweyl
