#include "expweyl/lie.hpp"

#include <algorithm>

#include "expweyl/errors.hpp"

namespace expweyl
{

// ---------------------------------------------------------------- derivations

DerivationElement::DerivationElement(SignaturePtr sig) : m_sig(std::move(sig))
{
    if (!m_sig)
        throw Error(ErrorCode::InvalidArgument, "derivation without signature");
    m_coeffs.assign(static_cast<std::size_t>(m_sig->n), Element(m_sig));
}

DerivationElement DerivationElement::single(const Element &f, int i)
{
    if (!f.is_function())
        throw Error(ErrorCode::NotAFunction, "derivation coefficients must be functions");
    if (i < 0 || i >= f.signature().n)
        throw Error(ErrorCode::SignatureMismatch, "variable index out of range");
    DerivationElement u(f.signature_ptr());
    u.m_coeffs[static_cast<std::size_t>(i)] = f;
    return u;
}

DerivationElement DerivationElement::from_operator(const Element &p)
{
    DerivationElement u(p.signature_ptr());
    for (const auto &[m, c] : p.terms())
    {
        if (m.total_d() != 1)
            throw Error(ErrorCode::InvalidArgument, "not a first-order operator sum f_i D_i");
        int i = 0;
        while (m.d(i) == 0)
            ++i;
        u.m_coeffs[static_cast<std::size_t>(i)].add_term(m.function_part(), c);
    }
    return u;
}

bool DerivationElement::is_zero() const
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Element &f) { return f.is_zero(); });
}

Element DerivationElement::to_operator() const
{
    Element out(m_sig);
    for (int i = 0; i < n(); ++i)
        out += mul(coeff(i), Element::D(m_sig, i));
    return out;
}

std::map<DerivationElement::Key, Scalar> DerivationElement::sparse() const
{
    std::map<Key, Scalar> out;
    for (int i = 0; i < n(); ++i)
        for (const auto &[m, c] : coeff(i).terms())
            out.emplace(Key{i, m}, c);
    return out;
}

DerivationElement DerivationElement::from_sparse(SignaturePtr sig, const std::map<Key, Scalar> &v)
{
    DerivationElement u(std::move(sig));
    for (const auto &[k, c] : v)
        u.m_coeffs.at(static_cast<std::size_t>(k.first)).add_term(k.second, c);
    return u;
}

DerivationElement DerivationElement::operator-() const
{
    DerivationElement u = *this;
    for (auto &f : u.m_coeffs)
        f = -f;
    return u;
}

DerivationElement &DerivationElement::operator+=(const DerivationElement &o)
{
    for (std::size_t i = 0; i < m_coeffs.size(); ++i)
        m_coeffs[i] += o.m_coeffs.at(i);
    return *this;
}

DerivationElement &DerivationElement::operator-=(const DerivationElement &o)
{
    for (std::size_t i = 0; i < m_coeffs.size(); ++i)
        m_coeffs[i] -= o.m_coeffs.at(i);
    return *this;
}

DerivationElement &DerivationElement::operator*=(const Scalar &c)
{
    for (auto &f : m_coeffs)
        f *= c;
    return *this;
}

bool operator==(const DerivationElement &a, const DerivationElement &b)
{
    return a.m_coeffs == b.m_coeffs;
}

DerivationElement witt_bracket(const DerivationElement &u, const DerivationElement &v)
{
    if (!same_signature(*u.signature_ptr(), *v.signature_ptr()))
        throw Error(ErrorCode::SignatureMismatch, "operands belong to different algebras");
    DerivationElement out(u.signature_ptr());
    for (int k = 0; k < u.n(); ++k)
    {
        Element c(u.signature_ptr());
        for (int i = 0; i < u.n(); ++i)
        {
            if (!u.coeff(i).is_zero() && !v.coeff(k).is_zero())
                c += function_product(u.coeff(i), diff_function(i, v.coeff(k)));
            if (!v.coeff(i).is_zero() && !u.coeff(k).is_zero())
                c -= function_product(v.coeff(i), diff_function(i, u.coeff(k)));
        }
        if (!c.is_zero())
            out += DerivationElement::single(c, k);
    }
    return out;
}

// ---------------------------------------------------------------- spans

namespace
{

Vector zero_vector(std::size_t n)
{
    return Vector(n);
}

bool is_zero_vector(const Vector &v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar &s) { return s.is_zero(); });
}

void axpy(Vector &y, const Scalar &a, const Vector &x)
{
    if (a.is_zero())
        return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero())
            y[i] += a * x[i];
}

} // namespace

LieSpan::LieSpan(std::vector<DerivationElement> basis, std::optional<std::size_t> grading)
    : m_basis(std::move(basis)), m_grading(grading)
{
    if (m_basis.empty())
        throw Error(ErrorCode::InvalidArgument, "a span needs at least one basis element");
    m_sig = m_basis.front().signature_ptr();
    for (const auto &b : m_basis)
        if (!same_signature(*b.signature_ptr(), *m_sig))
            throw Error(ErrorCode::SignatureMismatch, "basis elements belong to different algebras");

    std::vector<std::map<DerivationElement::Key, Scalar>> columns;
    for (const auto &b : m_basis)
        columns.push_back(b.sparse());
    m_matrix = columns_matrix(columns, m_keys);
    if (rank(m_matrix) != dim())
        throw Error(ErrorCode::NotIndependent, "basis elements are linearly dependent");

    const std::size_t n = dim();
    m_structure.assign(n * n, zero_vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            if (i == j)
            {
                if (!witt_bracket(m_basis[i], m_basis[i]).is_zero())
                    throw Error(ErrorCode::NotAntisymmetric, "[b, b] != 0 for basis " + std::to_string(i));
                continue;
            }
            try
            {
                m_structure[i * n + j] = coordinates(witt_bracket(m_basis[i], m_basis[j]));
            }
            catch (const Error &e)
            {
                if (e.code() != ErrorCode::NotClosed)
                    throw;
                throw Error(ErrorCode::NotClosed, "bracket of basis " + std::to_string(i) + " and " +
                                                      std::to_string(j) + " leaves the span");
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(structure(i, j)[k] + structure(j, i)[k]).is_zero())
                    throw Error(ErrorCode::NotAntisymmetric, "structure constants are not antisymmetric");

    // Jacobi: [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]] = 0.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
            {
                Vector ei = zero_vector(n), ej = zero_vector(n), ek = zero_vector(n);
                ei[i] = ej[j] = ek[k] = Scalar(1);
                Vector total = bracket(ei, structure(j, k));
                axpy(total, Scalar(1), bracket(ej, structure(k, i)));
                axpy(total, Scalar(1), bracket(ek, structure(i, j)));
                if (!is_zero_vector(total))
                    throw Error(ErrorCode::InvalidArgument, "structure constants violate the Jacobi identity");
            }

    if (m_grading)
    {
        const std::size_t h = *m_grading;
        if (h >= n)
            throw Error(ErrorCode::InvalidArgument, "grading index out of range");
        for (std::size_t k = 0; k < n; ++k)
        {
            const Vector &v = structure(h, k);
            for (std::size_t l = 0; l < n; ++l)
                if (l != k && !v[l].is_zero())
                    throw Error(ErrorCode::NotGraded, "ad(h) is not diagonal on basis " + std::to_string(k));
            const Scalar &lambda = v[k];
            if (lambda.is_zero())
            {
                m_degrees.push_back(0);
                continue;
            }
            const RationalFunction c = lambda.coeff(0);
            if (lambda.has_hbar() || !c.is_polynomial() || !c.num().is_constant() || !c.num().constant_value().fits_slong_p())
                throw Error(ErrorCode::NotGraded, "ad(h) eigenvalue on basis " + std::to_string(k) + " is not an integer");
            m_degrees.push_back(c.num().constant_value().get_si());
        }
    }
}

Vector LieSpan::coordinates(const DerivationElement &v) const
{
    const auto sparse = v.sparse();
    Vector b(m_keys.size());
    for (const auto &[k, c] : sparse)
    {
        const auto it = std::lower_bound(m_keys.begin(), m_keys.end(), k);
        if (it == m_keys.end() || *it != k)
            throw Error(ErrorCode::NotClosed, "element has support outside the span");
        b[static_cast<std::size_t>(it - m_keys.begin())] = c;
    }
    const auto sol = solve(m_matrix, b);
    if (!sol)
        throw Error(ErrorCode::NotClosed, "element is not in the span");
    return *sol;
}

DerivationElement LieSpan::combine(const Vector &coords) const
{
    DerivationElement out(m_sig);
    for (std::size_t k = 0; k < dim(); ++k)
        if (!coords.at(k).is_zero())
            out += coords[k] * m_basis[k];
    return out;
}

Vector LieSpan::bracket(const Vector &u, const Vector &v) const
{
    Vector out = zero_vector(dim());
    for (std::size_t i = 0; i < dim(); ++i)
    {
        if (u.at(i).is_zero())
            continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!v.at(j).is_zero())
                axpy(out, u[i] * v[j], structure(i, j));
    }
    return out;
}

LieSpan make_span(const std::vector<DerivationElement> &basis, std::optional<std::size_t> grading)
{
    return LieSpan(basis, grading);
}

std::vector<std::string> preset_span_names()
{
    return {"borel", "sl2like", "expaff"};
}

LieSpan preset_span(const std::string &name, const SignaturePtr &sig)
{
    const Element one = Element::unit(sig);
    const Element x = Element::x(sig, 0);
    if (name == "borel")
        return LieSpan({DerivationElement::single(one, 0), DerivationElement::single(x, 0)}, 1);
    if (name == "sl2like")
        return LieSpan({DerivationElement::single(one, 0), DerivationElement::single(x, 0),
                        DerivationElement::single(mul(x, x), 0)},
                       1);
    if (name == "expaff")
        return LieSpan({DerivationElement::single(one, 0),
                        DerivationElement::single(
                            Element::exp(sig, 0, GroupElement::integer(static_cast<std::size_t>(sig->rank), 1)), 0)},
                       0);
    throw Error(ErrorCode::InvalidArgument, "unknown span preset '" + name + "'");
}

// ---------------------------------------------------------------- cochains

namespace
{

void combinations(std::size_t dim, int k, std::size_t start, std::vector<std::size_t> &cur,
                  std::vector<std::vector<std::size_t>> &out)
{
    if (static_cast<int>(cur.size()) == k)
    {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < dim; ++i)
    {
        cur.push_back(i);
        combinations(dim, k, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

Cochain::Cochain(std::size_t dim, int degree) : m_dim(dim), m_degree(degree)
{
    if (degree < 0)
        throw Error(ErrorCode::InvalidArgument, "cochain degree must be >= 0");
    std::vector<std::size_t> cur;
    combinations(dim, degree, 0, cur, m_tuples);
    m_values.assign(m_tuples.size(), zero_vector(dim));
}

Vector Cochain::eval(const std::vector<std::size_t> &args) const
{
    if (static_cast<int>(args.size()) != m_degree)
        throw Error(ErrorCode::InvalidArgument, "cochain evaluated on the wrong number of arguments");
    std::vector<std::size_t> sorted = args;
    bool odd = false;
    // Insertion sort tracking the permutation parity.
    for (std::size_t i = 1; i < sorted.size(); ++i)
        for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j)
        {
            std::swap(sorted[j - 1], sorted[j]);
            odd = !odd;
        }
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            return zero_vector(m_dim);
    const auto it = std::lower_bound(m_tuples.begin(), m_tuples.end(), sorted);
    Vector v = m_values[static_cast<std::size_t>(it - m_tuples.begin())];
    if (odd)
        for (auto &s : v)
            s = -s;
    return v;
}

void Cochain::set(const std::vector<std::size_t> &increasing, Vector value)
{
    if (value.size() != m_dim)
        throw Error(ErrorCode::InvalidArgument, "cochain value has the wrong length");
    const auto it = std::lower_bound(m_tuples.begin(), m_tuples.end(), increasing);
    if (it == m_tuples.end() || *it != increasing)
        throw Error(ErrorCode::InvalidArgument, "cochain arguments must be a strictly increasing tuple");
    m_values[static_cast<std::size_t>(it - m_tuples.begin())] = std::move(value);
}

bool Cochain::is_zero() const
{
    return std::all_of(m_values.begin(), m_values.end(), is_zero_vector);
}

Cochain ce_differential(const LieSpan &s, const Cochain &w)
{
    if (w.dim() != s.dim())
        throw Error(ErrorCode::InvalidArgument, "cochain and span dimensions differ");
    const int k = w.degree();
    Cochain out(s.dim(), k + 1);
    for (const auto &t : out.tuples())
    {
        Vector total = zero_vector(s.dim());
        for (std::size_t i = 0; i < t.size(); ++i)
        {
            std::vector<std::size_t> rest;
            for (std::size_t q = 0; q < t.size(); ++q)
                if (q != i)
                    rest.push_back(t[q]);
            Vector ei = zero_vector(s.dim());
            ei[t[i]] = Scalar(1);
            axpy(total, Scalar(i % 2 == 0 ? 1 : -1), s.bracket(ei, w.eval(rest)));
        }
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
            {
                const Vector &c = s.structure(t[i], t[j]);
                const Scalar sign((i + j) % 2 == 0 ? 1 : -1);
                for (std::size_t l = 0; l < s.dim(); ++l)
                {
                    if (c[l].is_zero())
                        continue;
                    std::vector<std::size_t> args{l};
                    for (std::size_t q = 0; q < t.size(); ++q)
                        if (q != i && q != j)
                            args.push_back(t[q]);
                    axpy(total, sign * c[l], w.eval(args));
                }
            }
        out.set(t, std::move(total));
    }
    return out;
}

bool is_cocycle(const LieSpan &s, const Cochain &w)
{
    return ce_differential(s, w).is_zero();
}

Cochain identity_cochain(const LieSpan &s)
{
    Cochain c(s.dim(), 1);
    for (std::size_t k = 0; k < s.dim(); ++k)
    {
        Vector v = zero_vector(s.dim());
        v[k] = Scalar(1);
        c.set({k}, std::move(v));
    }
    return c;
}

Cochain bracket_cochain(const LieSpan &s)
{
    Cochain c(s.dim(), 2);
    for (const auto &t : c.tuples())
        c.set(t, s.structure(t[0], t[1]));
    return c;
}

std::optional<std::int64_t> cochain_degree(const LieSpan &s, const Cochain &w)
{
    if (!s.graded())
        throw Error(ErrorCode::NotGraded, "the span has no grading element");
    std::optional<std::int64_t> d;
    for (std::size_t idx = 0; idx < w.tuples().size(); ++idx)
    {
        std::int64_t in = 0;
        for (auto a : w.tuples()[idx])
            in += s.degree(a);
        const Vector &v = w.at(idx);
        for (std::size_t k = 0; k < v.size(); ++k)
        {
            if (v[k].is_zero())
                continue;
            const std::int64_t shift = s.degree(k) - in;
            if (!d)
                d = shift;
            else if (*d != shift)
                throw Error(ErrorCode::NotHomogeneous, "cochain components have degrees " + std::to_string(*d) +
                                                           " and " + std::to_string(shift));
        }
    }
    return d;
}

Cochain euler_integrate(const LieSpan &s, const Cochain &w, EulerMode mode)
{
    if (w.degree() != 2)
        throw Error(ErrorCode::InvalidArgument, "euler_integrate expects a 2-cochain");
    const auto d = cochain_degree(s, w);
    Cochain phi(s.dim(), 1);
    if (!d)
        return phi;
    if (*d == 0)
        throw Error(ErrorCode::DegreeZero, "degree-zero cocycles are outside the Euler-operator argument");
    const std::size_t h = *s.grading_index();
    for (std::size_t k = 0; k < s.dim(); ++k)
    {
        std::int64_t denominator = *d;
        if (mode == EulerMode::Literal)
        {
            denominator = *d - s.degree(k);
            if (denominator == 0)
                throw Error(ErrorCode::ResonantDegree, "basis " + std::to_string(k) + " has degree equal to the cocycle degree");
        }
        Vector v = w.eval({h, k});
        const Scalar factor = Scalar::rational(1, denominator);
        for (auto &c : v)
            c *= factor;
        phi.set({k}, std::move(v));
    }
    if (!(ce_differential(s, phi) == w))
        throw Error(ErrorCode::IntegrationFailed, "d(phi) differs from the input cocycle");
    return phi;
}

} // namespace expweyl
