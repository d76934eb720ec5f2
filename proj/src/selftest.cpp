#include "expweyl/selftest.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>

#include "expweyl/deformation.hpp"
#include "expweyl/errors.hpp"
#include "expweyl/homology.hpp"
#include "expweyl/lie.hpp"
#include "expweyl/linalg.hpp"
#include "expweyl/random.hpp"
#include "expweyl/representation.hpp"
#include "expweyl/serialize.hpp"
#include "expweyl/text.hpp"

namespace expweyl
{

namespace
{

bool is_weyl_monomial(const Monomial &m)
{
    for (int i = 0; i < m.n(); ++i)
        if (m.a(i) != 0 || !m.beta(i).is_zero() || !m.gamma(i).as_natural())
            return false;
    return true;
}

Scalar hbar_power(int k, int N)
{
    Scalar h(1);
    const Scalar step = Scalar::hbar(N);
    for (int j = 0; j < k; ++j)
        h *= step;
    return h;
}

} // namespace

GrElement contraction_graded_symbol(const Element &p, const Element &q, int N)
{
    p.check_same_signature(q);
    const SignaturePtr &sig = p.signature_ptr();
    GrElement out(sig);
    for (const auto &[m1, c1] : p.terms())
        for (const auto &[m2, c2] : q.terms())
        {
            if (!is_weyl_monomial(m1) || !is_weyl_monomial(m2))
                throw Error(ErrorCode::UnsupportedElement, "the contraction oracle needs polynomial Weyl elements");
            const Element prod = mul(Element::monomial(sig, m1, c1), Element::monomial(sig, m2, c2));
            const std::int64_t top = monomial_order(m1) + monomial_order(m2);
            for (const auto &[m, c] : prod.terms())
            {
                // Each contraction removes one x and one D.
                const std::int64_t k = (top - monomial_order(m)) / 2;
                if (k <= N)
                    out.add_term(m, c * hbar_power(static_cast<int>(k), N));
            }
        }
    return out;
}

namespace
{

using Outcome = std::optional<std::string>; // failure description

class Suite
{
public:
    explicit Suite(std::uint64_t seed) : m_seed(seed) {}

    void check(const std::string &name, const std::function<Outcome(Random &)> &body)
    {
        // Each check draws from its own stream so checks stay independent.
        Random rng(m_seed + 7919 * m_results.size());
        SelfCheck c{name, true, {}};
        try
        {
            if (auto failure = body(rng))
            {
                c.pass = false;
                c.detail = *failure;
            }
        }
        catch (const Error &e)
        {
            c.pass = false;
            c.detail = e.what();
        }
        m_results.push_back(std::move(c));
    }

    std::vector<SelfCheck> results() && { return std::move(m_results); }

private:
    std::uint64_t m_seed;
    std::vector<SelfCheck> m_results;
};

RandomShape shape(int terms, int exponent)
{
    RandomShape s;
    s.max_terms = terms;
    s.max_exponent = exponent;
    return s;
}

RandomShape weyl_shape(int terms, int exponent)
{
    RandomShape s = shape(terms, exponent);
    s.weyl_only = true;
    return s;
}

RandomShape function_shape(int terms, int exponent)
{
    RandomShape s = shape(terms, exponent);
    s.functions_only = true;
    return s;
}

Element elem(const SignaturePtr &sig, const Monomial &m)
{
    return Element::monomial(sig, m);
}

// ---------------------------------------------------------------- scalars

Outcome scalar_field_axioms(Random &rng)
{
    const auto sig = make_signature(1, 3, 1, GroupElement(3));
    for (int k = 0; k < 30; ++k)
    {
        const Scalar a = rng.scalar(*sig, true), b = rng.scalar(*sig, true), c = rng.scalar(*sig, true);
        if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c))
            return "associativity failed";
        if (a + b != b + a || a * b != b * a)
            return "commutativity failed";
        if (a * (b + c) != a * b + a * c)
            return "distributivity failed";
        if (a * a.inverse() != Scalar(1) || a - a != Scalar())
            return "inverse failed";
    }
    return {};
}

Outcome embed_homomorphism(Random &rng)
{
    for (int k = 0; k < 30; ++k)
    {
        const GroupElement x = rng.group(3, 3), y = rng.group(3, 3);
        if (embed(x + y) != embed(x) + embed(y))
            return "embed(x + y) != embed(x) + embed(y) for " + x.to_string() + ", " + y.to_string();
        if ((embed(x) == embed(y)) != (x == y))
            return "embed not injective on " + x.to_string() + ", " + y.to_string();
    }
    return {};
}

Outcome l1_subadditive(Random &rng)
{
    for (int k = 0; k < 50; ++k)
    {
        const GroupElement x = rng.group(3, 5), y = rng.group(3, 5);
        if (l1(x + y) > l1(x) + l1(y))
            return "l1 not subadditive on " + x.to_string() + ", " + y.to_string();
    }
    return {};
}

// ---------------------------------------------------------------- algebra

SignaturePtr mixed_signature()
{
    return make_signature(1, 2, 2, GroupElement::integer(2, 1));
}

Outcome associativity(Random &rng)
{
    const auto sig = mixed_signature();
    const auto sh = shape(3, 2);
    for (int k = 0; k < 15; ++k)
    {
        const Element p = rng.element(sig, sh), q = rng.element(sig, sh), r = rng.element(sig, sh);
        if (mul(mul(p, q), r) != mul(p, mul(q, r)))
            return "(PQ)R != P(QR) for P = " + format(p) + ", Q = " + format(q) + ", R = " + format(r);
    }
    return {};
}

Outcome unit_bilinearity(Random &rng)
{
    const auto sig = mixed_signature();
    const auto sh = shape(3, 2);
    const Element one = Element::unit(sig);
    for (int k = 0; k < 10; ++k)
    {
        const Element p = rng.element(sig, sh), q = rng.element(sig, sh), r = rng.element(sig, sh);
        const Scalar c = rng.scalar(*sig, true);
        if (mul(one, p) != p || mul(p, one) != p)
            return "unit law fails for " + format(p);
        if (mul(p, q + r) != mul(p, q) + mul(p, r) || mul(p + q, r) != mul(p, r) + mul(q, r))
            return "distributivity fails";
        if (mul(p * c, q) != mul(p, q) * c || mul(p, q * c) != mul(p, q) * c)
            return "scalar bilinearity fails";
    }
    return {};
}

Outcome diff_is_derivation(Random &rng)
{
    const auto sig = make_signature(2, 2, 2, GroupElement::integer(2, 1));
    const auto sh = function_shape(1, 3);
    for (int k = 0; k < 20; ++k)
    {
        const Monomial m1 = rng.monomial(*sig, sh), m2 = rng.monomial(*sig, sh);
        for (int i = 0; i < sig->n; ++i)
        {
            const Element lhs = diff_function(sig, i, m1.times(m2));
            const Element rhs = function_product(diff_function(sig, i, m1), elem(sig, m2)) +
                                function_product(elem(sig, m1), diff_function(sig, i, m2));
            if (lhs != rhs)
                return "Leibniz fails on " + format(elem(sig, m1)) + " and " + format(elem(sig, m2));
        }
    }
    return {};
}

Outcome defining_relations(Random &rng)
{
    for (int p = 1; p <= 3; ++p)
        for (const auto &t : {GroupElement(2), GroupElement::unit(2, 0), GroupElement::unit(2, 1)})
        {
            const auto sig = make_signature(2, 2, p, t);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                {
                    const Element delta = Element::constant(sig, Scalar(i == j ? 1 : 0));
                    if (commutator(Element::D(sig, i), Element::x(sig, j)) != delta)
                        return "[D_i, x_j] != delta_ij";
                    if (!commutator(Element::x(sig, i), Element::x(sig, j)).is_zero() ||
                        !commutator(Element::D(sig, i), Element::D(sig, j)).is_zero())
                        return "[x_i, x_j] or [D_i, D_j] nonzero";
                    const GroupElement alpha = rng.group(2, 3);
                    const Element e = Element::exp(sig, j, alpha);
                    const Element expect = i == j ? e * embed(alpha) : Element::zero(sig);
                    if (commutator(Element::D(sig, i), e) != expect)
                        return "[D_i, e^{alpha x_j}] wrong for alpha = " + alpha.to_string();
                    // [D_i, E_j] = delta_ij (p x^{p-1} + t x^p) e^{t x} E.
                    Element rule(sig);
                    if (i == j)
                    {
                        Monomial m1(2, 2);
                        m1.set_a(i, 1);
                        m1.set_beta(i, t);
                        m1.add_gamma1(i, p - 1);
                        rule.add_term(m1, Scalar(static_cast<long>(p)));
                        Monomial m2 = m1;
                        m2.add_gamma1(i, 1);
                        rule.add_term(m2, embed(t));
                    }
                    if (commutator(Element::D(sig, i), Element::E(sig, j)) != rule)
                        return "E relation fails for p = " + std::to_string(p) + ", t = " + t.to_string();
                    const Element symbols[] = {Element::E(sig, i), Element::exp(sig, i, alpha),
                                               Element::power(sig, i, alpha), Element::x(sig, i)};
                    const Element others[] = {Element::E(sig, j, -1), Element::exp(sig, j, rng.group(2, 2)),
                                              Element::power(sig, j, rng.group(2, 2))};
                    for (const auto &a : symbols)
                        for (const auto &b : others)
                            if (!commutator(a, b).is_zero())
                                return "exponential symbols do not commute";
                }
        }
    return {};
}

Outcome weyl_oracle(Random &rng)
{
    const auto sig = make_signature(2, 1, 1, GroupElement(1));
    const auto sh = weyl_shape(3, 3);
    for (int k = 0; k < 20; ++k)
    {
        const Element p = rng.element(sig, sh), q = rng.element(sig, sh);
        const Element f = power_function(sig, {rng.uniform(0, 4), rng.uniform(0, 4)});
        if (act(mul(p, q), f) != act(p, act(q, f)))
            return "act(PQ, f) != act(P, act(Q, f)) for P = " + format(p) + ", Q = " + format(q);
    }
    return {};
}

// ---------------------------------------------------------------- grading

Outcome ord_laws(Random &rng)
{
    const auto sig = mixed_signature();
    const auto sh = shape(3, 3);
    for (int k = 0; k < 30; ++k)
    {
        const Element p = rng.element(sig, sh), q = rng.element(sig, sh);
        if (p.is_zero() || q.is_zero())
            continue;
        const Element s = p + q;
        if (!s.is_zero() && ord(s) > std::max(ord(p), ord(q)))
            return "ord(P + Q) > max(ord P, ord Q)";
        if (ord(p * rng.scalar(*sig, true)) != ord(p))
            return "ord(cP) != ord(P)";
    }
    return {};
}

Outcome weyl_multiplicative(Random &rng)
{
    const auto sig = make_signature(2, 1, 1, GroupElement(1));
    const auto sh = weyl_shape(3, 3);
    for (int k = 0; k < 20; ++k)
    {
        const Element p = rng.element(sig, sh), q = rng.element(sig, sh);
        const Element pq = mul(p, q);
        if (ord(pq) != ord(p) + ord(q))
            return "ord(PQ) != ord P + ord Q for P = " + format(p) + ", Q = " + format(q);
        const Element c = commutator(p, q);
        if (!c.is_zero() && ord(c) > ord(p) + ord(q) - 2)
            return "ord([P,Q]) > ord P + ord Q - 2";
        if (symbol(pq) != gr_mul(symbol(p), symbol(q)))
            return "symbol is not multiplicative";
    }
    return {};
}

Outcome gr_mul_laws(Random &rng)
{
    const auto sig = mixed_signature();
    const auto sh = shape(3, 3);
    for (int k = 0; k < 20; ++k)
    {
        const GrElement u = rng.symbol(sig, sh), v = rng.symbol(sig, sh), w = rng.symbol(sig, sh);
        if (gr_mul(u, v) != gr_mul(v, u))
            return "gr_mul not commutative";
        if (gr_mul(gr_mul(u, v), w) != gr_mul(u, gr_mul(v, w)))
            return "gr_mul not associative";
    }
    return {};
}

// ---------------------------------------------------------------- representation

Outcome representation_homomorphism(Random &rng)
{
    const auto sig = mixed_signature();
    const auto sh = shape(2, 2);
    const auto fsh = function_shape(2, 2);
    for (int k = 0; k < 15; ++k)
    {
        const Element p = rng.element(sig, sh), q = rng.element(sig, sh), f = rng.element(sig, fsh);
        if (act(mul(p, q), f) != act(p, act(q, f)))
            return "act(PQ, f) != act(P, act(Q, f)) for P = " + format(p) + ", Q = " + format(q) + ", f = " +
                   format(f);
    }
    return {};
}

Outcome representation_leibniz(Random &rng)
{
    const auto sig = make_signature(2, 2, 2, GroupElement::unit(2, 1));
    const auto fsh = function_shape(3, 3);
    for (int k = 0; k < 20; ++k)
    {
        const Element f = rng.element(sig, fsh), g = rng.element(sig, fsh);
        for (int i = 0; i < sig->n; ++i)
        {
            const Element d = Element::D(sig, i);
            const Element lhs = act(d, function_product(f, g));
            const Element rhs = function_product(act(d, f), g) + function_product(f, act(d, g));
            if (lhs != rhs)
                return "act(D, fg) fails Leibniz for f = " + format(f) + ", g = " + format(g);
        }
    }
    return {};
}

Outcome trace_obstruction(Random &rng)
{
    // In the algebra [D, x] = 1. Any 2 x 2 matrices have trace([A,B]) = 0,
    // while a representation would need trace(1) = 2.
    const auto sig = make_signature(1, 1, 1, GroupElement(1));
    if (commutator(Element::D(sig, 0), Element::x(sig, 0)) != Element::unit(sig))
        return "[D, x] != 1";
    for (int k = 0; k < 20; ++k)
    {
        Matrix a(2, 2), b(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
            {
                a(i, j) = Scalar(static_cast<long>(rng.uniform(-5, 5)));
                b(i, j) = Scalar(static_cast<long>(rng.uniform(-5, 5)));
            }
        Scalar trace;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                trace += a(i, j) * b(j, i) - b(i, j) * a(j, i);
        if (!trace.is_zero())
            return "trace of a matrix commutator is not 0";
    }
    return {};
}

// ---------------------------------------------------------------- lie cohomology

Outcome witt_laws(Random &rng)
{
    const auto sig = mixed_signature();
    const auto sh = shape(2, 2);
    for (int k = 0; k < 15; ++k)
    {
        const DerivationElement u = rng.derivation(sig, sh), v = rng.derivation(sig, sh), w = rng.derivation(sig, sh);
        if (witt_bracket(u, v) != -witt_bracket(v, u))
            return "witt_bracket not antisymmetric";
        const DerivationElement jac =
            witt_bracket(u, witt_bracket(v, w)) + witt_bracket(v, witt_bracket(w, u)) + witt_bracket(w, witt_bracket(u, v));
        if (!jac.is_zero())
            return "Jacobi fails for u = " + format(u) + ", v = " + format(v) + ", w = " + format(w);
        // Operator commutator oracle.
        if (witt_bracket(u, v).to_operator() != commutator(u.to_operator(), v.to_operator()))
            return "witt_bracket disagrees with the operator commutator";
    }
    return {};
}

Cochain random_cochain(Random &rng, std::size_t dim, int degree)
{
    Cochain w(dim, degree);
    const auto tuples = w.tuples();
    for (const auto &t : tuples)
        w.set(t, rng.vector(dim));
    return w;
}

Outcome ce_d_squared(Random &rng)
{
    const auto sig = make_signature(1, 1, 1, GroupElement(1));
    for (const auto &name : preset_span_names())
    {
        const LieSpan s = preset_span(name, sig);
        for (int k = 0; k <= 2; ++k)
            for (int trial = 0; trial < 5; ++trial)
            {
                const Cochain w = random_cochain(rng, s.dim(), k);
                if (!ce_differential(s, ce_differential(s, w)).is_zero())
                    return "d^2 != 0 on span " + name + " in degree " + std::to_string(k);
            }
        if (!is_cocycle(s, bracket_cochain(s)))
            return "bracket cochain of " + name + " is not a cocycle";
    }
    return {};
}

Outcome euler_integration(Random &rng)
{
    const auto sig = make_signature(1, 1, 1, GroupElement(1));
    int done = 0;
    for (const auto &name : preset_span_names())
    {
        const LieSpan s = preset_span(name, sig);
        for (std::int64_t d = -2; d <= 2; ++d)
        {
            if (d == 0)
                continue;
            // psi(b_i) = c b_k for deg b_k - deg b_i = d is homogeneous of degree d.
            Cochain psi(s.dim(), 1);
            for (std::size_t i = 0; i < s.dim(); ++i)
            {
                Vector v(s.dim());
                for (std::size_t k = 0; k < s.dim(); ++k)
                    if (s.degree(k) - s.degree(i) == d && rng.coin())
                        v[k] = Scalar(static_cast<long>(rng.uniform(1, 3)));
                psi.set({i}, v);
            }
            const Cochain w = ce_differential(s, psi);
            if (w.is_zero())
                continue;
            const Cochain phi = euler_integrate(s, w);
            if (ce_differential(s, phi) != w)
                return "d(phi) != omega on span " + name + " at degree " + std::to_string(d);
            ++done;
        }
    }
    if (done == 0)
        return "no nonzero coboundary was constructed";
    return {};
}

// ---------------------------------------------------------------- homology

Outcome b_squared(Random &rng)
{
    const auto sig = mixed_signature();
    const auto sh = shape(2, 2);
    for (int degree = 2; degree <= 3; ++degree)
        for (int k = 0; k < 4; ++k)
        {
            const Chain c = rng.chain(sig, degree, 2, sh);
            if (!hochschild_b(hochschild_b(c)).is_zero())
                return "b^2 != 0 in degree " + std::to_string(degree);
        }
    return {};
}

Outcome connes_identities(Random &rng)
{
    const auto sig = mixed_signature();
    const auto sh = shape(2, 2);
    for (int degree = 0; degree <= 2; ++degree)
        for (int k = 0; k < 4; ++k)
        {
            const Chain c = rng.chain(sig, degree, 2, sh);
            if (!connes_B(connes_B(c)).is_zero())
                return "B^2 != 0 in degree " + std::to_string(degree);
            Chain anti = hochschild_b(connes_B(c));
            if (degree > 0)
                anti += connes_B(hochschild_b(c));
            if (!anti.is_zero())
                return "bB + Bb != 0 in degree " + std::to_string(degree);
        }
    return {};
}

Outcome unit_is_commutator(Random &)
{
    const auto sig = make_signature(1, 1, 1, GroupElement(1));
    const Element one = Element::unit(sig);
    const SpanCheck r = commutator_span_check(one, {{Element::D(sig, 0), Element::x(sig, 0)}},
                                              Window::from_support(sig, {one}));
    if (!r.inside || !r.combination || (*r.combination)[0] != Scalar(1))
        return "1 is not found in span{[D, x]}";
    return {};
}

// ---------------------------------------------------------------- deformation

GrElement jacobiator(const std::function<GrElement(const GrElement &, const GrElement &)> &br, const GrElement &f,
                     const GrElement &g, const GrElement &h)
{
    return br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g));
}

Outcome poisson_jacobi(Random &rng)
{
    const auto sig = make_signature(2, 2, 1, GroupElement(2));
    const auto sh = shape(2, 2);
    for (int k = 0; k < 8; ++k)
    {
        const GrElement f = rng.symbol(sig, sh), g = rng.symbol(sig, sh), h = rng.symbol(sig, sh);
        const Scalar lambda = rng.scalar(*sig, true);
        if (!jacobiator(poisson_std, f, g, h).is_zero())
            return "Jacobi fails for poisson_std";
        if (!jacobiator(poisson_exp, f, g, h).is_zero())
            return "Jacobi fails for poisson_exp";
        const auto lam = [&](const GrElement &a, const GrElement &b) { return lambda_bracket(a, b, lambda); };
        if (!jacobiator(lam, f, g, h).is_zero())
            return "Jacobi fails for lambda_bracket at lambda = " + format(lambda, *sig);
    }
    return {};
}

Outcome symbol_star_oracle(Random &rng)
{
    const auto sig = make_signature(2, 1, 1, GroupElement(1));
    const auto sh = weyl_shape(3, 3);
    for (int k = 0; k < 15; ++k)
    {
        const Element p = rng.element(sig, sh), q = rng.element(sig, sh);
        const int N = 6; // exceeds every d-degree of P
        if (symbol_star(full_symbol(p), full_symbol(q), N) != contraction_graded_symbol(p, q, N))
            return "symbol_star disagrees with contraction-graded mul for P = " + format(p) + ", Q = " + format(q);
    }
    return {};
}

std::vector<Triple> generator_triples(const SignaturePtr &sig, std::int64_t bound)
{
    std::vector<GrElement> gens;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            if (std::abs(a) + std::abs(b) <= bound && (a != 0 || b != 0))
                gens.push_back(GrElement::power(sig, 0, GroupElement({a, b})));
    std::vector<Triple> out;
    for (const auto &f : gens)
        for (const auto &g : gens)
            for (const auto &h : gens)
                out.push_back({f, g, h});
    return out;
}

Outcome rank2_checks(Random &)
{
    const auto sig = make_signature(1, 2, 1, GroupElement(2));
    const AntisymMatrix c({{Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(0)}});
    const Rank2Product r = rank2_deform(sig, c, GroupElement::unit(2, 0), GroupElement::unit(2, 1));
    Monomial m(1, 2);
    m.set_a(0, 1);
    m.set_gamma(0, GroupElement({1, 1}));
    if (r.commutator != GrElement::monomial(sig, m, Scalar::hbar(1) * Scalar(2)))
        return "commutator of x^{g1} and x^{g2} is not 2 hbar E x^{g1+g2}";
    const auto triples = generator_triples(sig, 1);
    const AssocReport first = star_assoc_check({rank2_cochain(sig, c)}, triples);
    if (first.first_nonzero_order)
        return "order-" + std::to_string(*first.first_nonzero_order) + " defect with m_1 alone";
    const AssocReport second = star_assoc_check({rank2_cochain(sig, c), rank2_cochain2(sig, c)}, triples);
    if (second.first_nonzero_order)
        return "order-" + std::to_string(*second.first_nonzero_order) + " defect with the exponential completion";
    return {};
}

Outcome mc_identity(Random &rng)
{
    const auto sig = make_signature(1, 1, 1, GroupElement(1));
    const auto sh = weyl_shape(2, 2);
    std::vector<Triple> triples;
    for (int k = 0; k < 5; ++k)
        triples.push_back({rng.symbol(sig, sh), rng.symbol(sig, sh), rng.symbol(sig, sh)});
    // Associative through order 2: the residual vanishes.
    const MCReport good =
        mc_check(Multilinear::from(symbol_star_op(sig, 1)), Multilinear::from(symbol_star_op(sig, 2)), triples);
    if (!good.zero || !good.agree)
        return "MC residual of symbol_star at N = 2 is nonzero";
    // Not associative at order 2: residual and defect agree and are nonzero.
    const Multilinear zero = Multilinear::from([sig](const GrElement &, const GrElement &) { return GrElement(sig); });
    triples.push_back({GrElement::x(sig, 0), GrElement::y(sig, 0), GrElement::y(sig, 0) * GrElement::x(sig, 0)});
    const MCReport bad = mc_check(Multilinear::from(poisson_std_op(sig)), zero, triples);
    if (bad.zero || !bad.agree)
        return "poisson_std with m_2 = 0 should leave a matching nonzero residual";
    return {};
}

Outcome t_shift(Random &rng)
{
    const auto base = make_signature(1, 1, 2, GroupElement::integer(1, 1), 2);
    const TShiftReport rep = t_shift_deform(base, 2);
    if (!rep.nontrivial)
        return "order-hbar coefficient of D E is zero";
    const auto sh = shape(2, 2);
    for (int k = 0; k < 5; ++k)
    {
        const Element p = rng.element(rep.deformed, sh), q = rng.element(rep.deformed, sh),
                      r = rng.element(rep.deformed, sh);
        if (mul(mul(p, q), r) != mul(p, mul(q, r)))
            return "deformed mul is not associative mod hbar^3";
    }
    const TShiftReport classical = t_shift_deform(base, 0);
    Monomial e(1, 1);
    e.set_a(0, 1);
    const auto plain = make_signature(1, 1, 2, GroupElement::integer(1, 1));
    if (format(classical.rules[0]) != format(diff_function(plain, 0, e)))
        return "N = 0 does not recover the classical rule";
    return {};
}

// ---------------------------------------------------------------- cli

Outcome round_trip(Random &rng)
{
    const auto sig = make_signature(2, 2, 2, GroupElement::unit(2, 1));
    RandomShape sh = shape(4, 3);
    sh.symbolic_coefficients = true;
    for (int k = 0; k < 30; ++k)
    {
        const Element p = rng.element(sig, sh);
        if (parse_element(sig, format(p)) != p)
            return "parse(format(P)) != P for " + format(p);
        if (element_from_json(sig, to_json(p)) != p)
            return "structured round trip fails for " + format(p);
    }
    return {};
}

Outcome determinism(Random &)
{
    const auto sig = mixed_signature();
    const auto draw = [&] {
        Random a(12345);
        std::string s;
        for (int k = 0; k < 5; ++k)
            s += format(mul(a.element(sig, shape(3, 2)), a.element(sig, shape(3, 2)))) + "\n";
        return s;
    };
    if (draw() != draw())
        return "identical seeds produced different output";
    return {};
}

} // namespace

std::vector<SelfCheck> run_selftest(std::uint64_t seed)
{
    Suite s(seed);
    s.check("scalars.field_axioms", scalar_field_axioms);
    s.check("scalars.embed_homomorphism", embed_homomorphism);
    s.check("scalars.l1_subadditive", l1_subadditive);
    s.check("algebra.associativity", associativity);
    s.check("algebra.unit_and_bilinearity", unit_bilinearity);
    s.check("algebra.diff_function_derivation", diff_is_derivation);
    s.check("algebra.defining_relations", defining_relations);
    s.check("algebra.weyl_oracle", weyl_oracle);
    s.check("grading.ord_laws", ord_laws);
    s.check("grading.weyl_multiplicative", weyl_multiplicative);
    s.check("grading.gr_mul_laws", gr_mul_laws);
    s.check("representation.homomorphism", representation_homomorphism);
    s.check("representation.leibniz", representation_leibniz);
    s.check("representation.trace_obstruction", trace_obstruction);
    s.check("lie.witt_antisymmetry_jacobi", witt_laws);
    s.check("lie.d_squared", ce_d_squared);
    s.check("lie.euler_integration", euler_integration);
    s.check("homology.b_squared", b_squared);
    s.check("homology.connes_identities", connes_identities);
    s.check("homology.unit_is_commutator", unit_is_commutator);
    s.check("deformation.poisson_jacobi", poisson_jacobi);
    s.check("deformation.symbol_star_oracle", symbol_star_oracle);
    s.check("deformation.rank2", rank2_checks);
    s.check("deformation.maurer_cartan", mc_identity);
    s.check("deformation.t_shift", t_shift);
    s.check("cli.round_trip", round_trip);
    s.check("cli.determinism", determinism);
    return std::move(s).results();
}

} // namespace expweyl
