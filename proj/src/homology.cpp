#include "expweyl/homology.hpp"

#include "expweyl/errors.hpp"

namespace expweyl
{

Chain::Chain(SignaturePtr sig, int degree) : m_sig(std::move(sig)), m_degree(degree)
{
    if (!m_sig)
        throw Error(ErrorCode::InvalidArgument, "chain without signature");
    if (degree < 0)
        throw Error(ErrorCode::InvalidArgument, "chain degree must be >= 0");
}

Chain Chain::tensor(const std::vector<Element> &factors, const Scalar &c)
{
    if (factors.empty())
        throw Error(ErrorCode::InvalidArgument, "a tensor needs at least one factor");
    Chain out(factors.front().signature_ptr(), static_cast<int>(factors.size()) - 1);
    out.add_tensor(factors, c);
    return out;
}

void Chain::add_term(const Tensor &t, const Scalar &c)
{
    if (static_cast<int>(t.size()) != m_degree + 1)
        throw Error(ErrorCode::InvalidArgument, "tensor length does not match the chain degree");
    if (c.is_zero())
        return;
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i].is_unit())
            return;
    auto [it, inserted] = m_terms.try_emplace(t, c);
    if (!inserted)
    {
        it->second += c;
        if (it->second.is_zero())
            m_terms.erase(it);
    }
}

namespace
{

void expand(const std::vector<Element> &factors, std::size_t pos, Tensor &cur, const Scalar &c, Chain &out)
{
    if (pos == factors.size())
    {
        out.add_term(cur, c);
        return;
    }
    for (const auto &[m, k] : factors[pos].terms())
    {
        if (pos > 0 && m.is_unit())
            continue;
        cur.push_back(m);
        expand(factors, pos + 1, cur, c * k, out);
        cur.pop_back();
    }
}

} // namespace

void Chain::add_tensor(const std::vector<Element> &factors, const Scalar &c)
{
    if (static_cast<int>(factors.size()) != m_degree + 1)
        throw Error(ErrorCode::InvalidArgument, "tensor length does not match the chain degree");
    for (const auto &f : factors)
        if (!same_signature(f.signature(), *m_sig))
            throw Error(ErrorCode::SignatureMismatch, "tensor factors belong to different algebras");
    Tensor cur;
    expand(factors, 0, cur, c, *this);
}

void Chain::check_compatible(const Chain &o) const
{
    if (!same_signature(*m_sig, *o.m_sig))
        throw Error(ErrorCode::SignatureMismatch, "chains belong to different algebras");
    if (m_degree != o.m_degree)
        throw Error(ErrorCode::InvalidArgument, "chains have different degrees");
}

Chain Chain::operator-() const
{
    Chain c = *this;
    for (auto &[t, k] : c.m_terms)
        k = -k;
    return c;
}

Chain &Chain::operator+=(const Chain &o)
{
    check_compatible(o);
    for (const auto &[t, k] : o.m_terms)
        add_term(t, k);
    return *this;
}

Chain &Chain::operator-=(const Chain &o)
{
    check_compatible(o);
    for (const auto &[t, k] : o.m_terms)
        add_term(t, -k);
    return *this;
}

Chain &Chain::operator*=(const Scalar &c)
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

bool operator==(const Chain &a, const Chain &b)
{
    return a.m_degree == b.m_degree && same_signature(*a.m_sig, *b.m_sig) && a.m_terms == b.m_terms;
}

Chain hochschild_b(const Chain &c)
{
    const int n = c.degree();
    if (n == 0)
        throw Error(ErrorCode::DegreeZero, "b is not defined on degree-0 chains");
    const auto &sig = c.signature_ptr();
    Chain out(sig, n - 1);
    std::vector<Element> factors;
    for (const auto &[t, k] : c.terms())
    {
        auto element = [&](std::size_t i) { return Element::monomial(sig, t[i]); };
        for (int i = 0; i < n; ++i)
        {
            factors.clear();
            for (int q = 0; q < i; ++q)
                factors.push_back(element(static_cast<std::size_t>(q)));
            factors.push_back(mul(element(static_cast<std::size_t>(i)), element(static_cast<std::size_t>(i + 1))));
            for (int q = i + 2; q <= n; ++q)
                factors.push_back(element(static_cast<std::size_t>(q)));
            out.add_tensor(factors, i % 2 == 0 ? k : -k);
        }
        factors.clear();
        factors.push_back(mul(element(static_cast<std::size_t>(n)), element(0)));
        for (int q = 1; q < n; ++q)
            factors.push_back(element(static_cast<std::size_t>(q)));
        out.add_tensor(factors, n % 2 == 0 ? k : -k);
    }
    return out;
}

Chain connes_B(const Chain &c)
{
    const int n = c.degree();
    const auto &sig = c.signature_ptr();
    const Monomial one(sig->n, sig->rank);
    Chain out(sig, n + 1);
    for (const auto &[t, k] : c.terms())
        for (int i = 0; i <= n; ++i)
        {
            Tensor rotated{one};
            for (int q = i; q <= n; ++q)
                rotated.push_back(t[static_cast<std::size_t>(q)]);
            for (int q = 0; q < i; ++q)
                rotated.push_back(t[static_cast<std::size_t>(q)]);
            out.add_term(rotated, (n * i) % 2 == 0 ? k : -k);
        }
    return out;
}

// ---------------------------------------------------------------- windows

Window::Window(SignaturePtr sig, std::vector<Monomial> monomials) : m_sig(std::move(sig)), m_monomials(std::move(monomials))
{
    for (std::size_t i = 0; i < m_monomials.size(); ++i)
    {
        const auto &m = m_monomials[i];
        if (m.n() != m_sig->n || m.rank() != m_sig->rank)
            throw Error(ErrorCode::SignatureMismatch, "window monomial does not match the signature");
        if (!m_index.emplace(m, i).second)
            throw Error(ErrorCode::InvalidArgument, "window monomials must be distinct");
    }
}

Window Window::from_support(SignaturePtr sig, const std::vector<Element> &elements)
{
    std::map<Monomial, int, std::greater<>> support;
    for (const auto &e : elements)
        for (const auto &[m, c] : e.terms())
            support.emplace(m, 0);
    std::vector<Monomial> ms;
    for (const auto &[m, unused] : support)
        ms.push_back(m);
    return Window(std::move(sig), std::move(ms));
}

Vector Window::coordinates(const Element &e) const
{
    Vector v(m_monomials.size());
    for (const auto &[m, c] : e.terms())
    {
        const auto it = m_index.find(m);
        if (it == m_index.end())
            throw Error(ErrorCode::WindowOverflow, "element has a term outside the window");
        v[it->second] = c;
    }
    return v;
}

SpanCheck commutator_span_check(const Element &f, const std::vector<std::pair<Element, Element>> &pairs,
                                const Window &window)
{
    const Vector target = window.coordinates(f);
    Matrix m(window.size(), pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
    {
        const Vector col = window.coordinates(commutator(pairs[k].first, pairs[k].second));
        for (std::size_t r = 0; r < window.size(); ++r)
            m(r, k) = col[r];
    }
    SpanCheck result;
    if (f.is_zero())
    {
        result.inside = true;
        result.combination = Vector(pairs.size());
        return result;
    }
    result.combination = solve(m, target);
    result.inside = result.combination.has_value();
    return result;
}

namespace
{

// Normalized tensors of length n+1 over the window, in lexicographic index order.
std::vector<Tensor> window_tensors(const Window &w, int n)
{
    std::vector<Tensor> out;
    if (w.size() == 0)
        return out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n) + 1, 0);
    while (true)
    {
        bool degenerate = false;
        Tensor t;
        for (std::size_t p = 0; p < idx.size(); ++p)
        {
            const Monomial &m = w.monomials()[idx[p]];
            if (p > 0 && m.is_unit())
                degenerate = true;
            t.push_back(m);
        }
        if (!degenerate)
            out.push_back(std::move(t));
        std::size_t p = idx.size();
        while (p > 0 && idx[p - 1] + 1 == w.size())
            idx[--p] = 0;
        if (p == 0)
            break;
        ++idx[p - 1];
    }
    return out;
}

} // namespace

std::vector<WindowDegree> window_rank(const Window &window, int max_degree, bool strict)
{
    if (max_degree < 0)
        throw Error(ErrorCode::InvalidArgument, "max_degree must be >= 0");
    const auto &sig = window.signature_ptr();
    std::vector<WindowDegree> out;
    for (int n = 0; n <= max_degree; ++n)
    {
        WindowDegree wd;
        wd.degree = n;
        const auto basis = window_tensors(window, n);
        wd.chain_dim = basis.size();
        if (n == 0 || basis.empty())
        {
            for (const auto &t : basis)
            {
                Chain c(sig, n);
                c.add_term(t, Scalar(1));
                wd.kernel.push_back(std::move(c));
            }
            out.push_back(std::move(wd));
            continue;
        }
        std::vector<std::map<Tensor, Scalar>> images;
        for (const auto &t : basis)
        {
            Chain c(sig, n);
            c.add_term(t, Scalar(1));
            Chain img = hochschild_b(c);
            if (strict)
                for (const auto &[it, k] : img.terms())
                    for (const auto &m : it)
                        if (!window.contains(m))
                            throw Error(ErrorCode::WindowOverflow, "b maps a window chain outside the window");
            images.push_back(img.terms());
        }
        std::vector<Tensor> keys;
        const Matrix m = columns_matrix(images, keys);
        wd.rank = rank(m);
        for (const auto &v : kernel(m))
        {
            Chain c(sig, n);
            for (std::size_t j = 0; j < v.size(); ++j)
                c.add_term(basis[j], v[j]);
            wd.kernel.push_back(std::move(c));
        }
        out.push_back(std::move(wd));
    }
    return out;
}

} // namespace expweyl
