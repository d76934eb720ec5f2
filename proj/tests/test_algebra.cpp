#include <gtest/gtest.h>

#include <cmath>

#include "expweyl/deformation.hpp"
#include "expweyl/errors.hpp"
#include "expweyl/random.hpp"
#include "expweyl/representation.hpp"
#include "support.hpp"

using namespace expweyl;
using namespace expweyl::testing;

namespace
{

template <typename F>
ErrorCode error_of(F &&f)
{
    try
    {
        f();
    }
    catch (const Error &e)
    {
        return e.code();
    }
    return ErrorCode{};
}

RandomShape shape(int terms, int exponent)
{
    RandomShape s;
    s.max_terms = terms;
    s.max_exponent = exponent;
    return s;
}

// Applies P to f term by term: each c g D^d contributes c * g * (D^d f) where
// D^d f is computed by repeated single differentiation. Independent of mul.
Element naive_apply(const Element &p, const Element &f)
{
    const SignaturePtr &sig = p.signature_ptr();
    Element out(sig);
    for (const auto &[m, c] : p.terms())
    {
        Element g = f;
        for (int i = 0; i < sig->n; ++i)
            for (std::int64_t k = 0; k < m.d(i); ++k)
                g = diff_function(i, g);
        out += function_product(Element::monomial(sig, m.function_part(), c), g);
    }
    return out;
}

double to_double(const Scalar &s)
{
    const RationalFunction r = s.coeff(0);
    return r.num().constant_value().get_d() / r.den().constant_value().get_d();
}

// Numeric value of a one-variable, rank-one function at x > 0.
double evaluate(const Element &f, double x)
{
    const AlgebraSignature &sig = f.signature();
    const double t = static_cast<double>(sig.t[0][0]);
    const double e = std::exp(std::pow(x, sig.p[0]) * std::exp(t * x));
    double out = 0;
    for (const auto &[m, c] : f.terms())
        out += to_double(c) * std::pow(e, static_cast<double>(m.a(0))) * std::exp(static_cast<double>(m.beta(0, 0)) * x) *
               std::pow(x, static_cast<double>(m.gamma(0, 0)));
    return out;
}

} // namespace

TEST(Algebra, DiffFunctionExamples)
{
    const auto sig = mixed();
    EXPECT_EQ(diff_function(0, el(sig, "x_1^3")), el(sig, "3*x_1^2"));
    EXPECT_EQ(diff_function(0, el(sig, "exp(2*x_1)")), el(sig, "2*exp(2*x_1)"));
    EXPECT_EQ(diff_function(0, el(sig, "exp(g2*x_1)")), el(sig, "g2*exp(g2*x_1)"));
    // p = 2, t = 1: D E = (2x + x^2) e^{x} E.
    EXPECT_EQ(diff_function(0, el(sig, "E_1")), el(sig, "2*E_1*exp(x_1)*x_1 + E_1*exp(x_1)*x_1^2"));
    EXPECT_EQ(diff_function(0, el(sig, "x_1^(g2)")), el(sig, "g2*x_1^(g2 - 1)"));
    EXPECT_EQ(error_of([&] { (void)diff_function(0, el(sig, "D_1")); }), ErrorCode::NotAFunction);
}

TEST(Algebra, NormalOrderingExamples)
{
    const auto sig = weyl();
    const Element x = Element::x(sig, 0), d = Element::D(sig, 0);
    EXPECT_EQ(mul(d, x), el(sig, "x_1*D_1 + 1"));
    EXPECT_EQ(mul(x, d), el(sig, "x_1*D_1"));
    EXPECT_EQ(mul(pow(d, 2), x), el(sig, "x_1*D_1^2 + 2*D_1"));
    EXPECT_EQ(mul(pow(d, 2), pow(x, 2)), el(sig, "x_1^2*D_1^2 + 4*x_1*D_1 + 2"));
    EXPECT_EQ(commutator(d, x), Element::unit(sig));
    EXPECT_EQ(pow(x, 0), Element::unit(sig));
}

TEST(Algebra, ErrorContracts)
{
    const auto sig = weyl();
    EXPECT_EQ(error_of([&] { (void)pow(Element::x(sig, 0), -1); }), ErrorCode::NegativePower);
    const auto other = weyl(2);
    EXPECT_EQ(error_of([&] { (void)mul(Element::x(sig, 0), Element::x(other, 0)); }), ErrorCode::SignatureMismatch);
    EXPECT_EQ(error_of([&] { (void)make_signature(1, 1, 0, GroupElement(1)); }), ErrorCode::InvalidConfig);
}

TEST(Algebra, DefiningRelationsAcrossSignatures)
{
    for (int n = 1; n <= 2; ++n)
        for (int r = 1; r <= 2; ++r)
            for (int p = 1; p <= 3; ++p)
                for (int tk = 0; tk < 3; ++tk)
                {
                    if (tk == 2 && r < 2)
                        continue;
                    const GroupElement t = tk == 0 ? GroupElement(static_cast<std::size_t>(r))
                                                   : GroupElement::unit(static_cast<std::size_t>(r),
                                                                        static_cast<std::size_t>(tk - 1));
                    const auto sig = make_signature(n, r, p, t);
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                        {
                            const Element delta = Element::constant(sig, Scalar(i == j ? 1 : 0));
                            EXPECT_EQ(commutator(Element::D(sig, i), Element::x(sig, j)), delta);
                            EXPECT_TRUE(commutator(Element::E(sig, i), Element::x(sig, j)).is_zero());
                            EXPECT_EQ(mul(Element::E(sig, i), Element::E(sig, i, -1)), Element::unit(sig));
                        }
                }
}

TEST(Algebra, DiffFunctionMatchesFiniteDifferences)
{
    // Central differences in double against a pinned relative tolerance.
    constexpr double kStep = 1e-6;
    constexpr double kRelTol = 1e-5;
    for (int p = 1; p <= 3; ++p)
        for (std::int64_t t = -1; t <= 1; ++t)
        {
            const auto sig = make_signature(1, 1, p, GroupElement::integer(1, t));
            Random rng(100 + static_cast<std::uint64_t>(3 * p + t));
            RandomShape sh = shape(3, 2);
            sh.functions_only = true;
            for (int k = 0; k < 10; ++k)
            {
                const Element f = rng.element(sig, sh);
                const Element df = diff_function(0, f);
                for (double x : {0.3, 0.7, 1.1})
                {
                    const double numeric = (evaluate(f, x + kStep) - evaluate(f, x - kStep)) / (2 * kStep);
                    const double exact = evaluate(df, x);
                    EXPECT_NEAR(numeric, exact, kRelTol * std::max(1.0, std::abs(exact)))
                        << "p=" << p << " t=" << t << " x=" << x;
                }
            }
        }
}

TEST(Algebra, MulAgreesWithNaiveOperatorApplication)
{
    for (const auto &sig : {weyl(1), mixed(), make_signature(2, 1, 1, GroupElement::integer(1, 1))})
    {
        Random rng(21);
        RandomShape fsh = shape(2, 2);
        fsh.functions_only = true;
        for (int k = 0; k < 20; ++k)
        {
            const Element p = rng.element(sig, shape(2, 2)), q = rng.element(sig, shape(2, 2));
            const Element f = rng.element(sig, fsh);
            EXPECT_EQ(naive_apply(mul(p, q), f), naive_apply(p, naive_apply(q, f)));
            EXPECT_EQ(act(p, f), naive_apply(p, f));
        }
    }
}

TEST(Algebra, AssociativityAndUnitProperties)
{
    const auto tshift = t_shift_deform(make_signature(1, 1, 1, GroupElement::integer(1, 1), 2)).deformed;
    for (const auto &sig : {weyl(1), mixed(), make_signature(2, 2, 1, GroupElement::unit(2, 1)), tshift})
    {
        Random rng(33);
        for (int k = 0; k < 10; ++k)
        {
            const Element p = rng.element(sig, shape(3, 2)), q = rng.element(sig, shape(3, 2)),
                          r = rng.element(sig, shape(3, 2));
            EXPECT_EQ(mul(mul(p, q), r), mul(p, mul(q, r)));
            EXPECT_EQ(mul(Element::unit(sig), p), p);
            EXPECT_EQ(mul(p, Element::unit(sig)), p);
            EXPECT_EQ(mul(p, q + r), mul(p, q) + mul(p, r));
        }
    }
}

TEST(Algebra, FunctionsCommute)
{
    const auto sig = mixed();
    Random rng(8);
    RandomShape sh = shape(3, 3);
    sh.functions_only = true;
    for (int k = 0; k < 20; ++k)
    {
        const Element f = rng.element(sig, sh), g = rng.element(sig, sh);
        EXPECT_EQ(mul(f, g), mul(g, f));
        EXPECT_EQ(mul(f, g), function_product(f, g));
    }
}
