#include <gtest/gtest.h>

#include "expweyl/errors.hpp"
#include "expweyl/random.hpp"
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

DerivationElement vf(const SignaturePtr &sig, const std::string &coeff, int i = 0)
{
    return DerivationElement::single(el(sig, coeff), i);
}

Cochain random_cochain(Random &rng, std::size_t dim, int degree)
{
    Cochain w(dim, degree);
    const auto tuples = w.tuples();
    for (const auto &t : tuples)
        w.set(t, rng.vector(dim));
    return w;
}

RandomShape shape(int terms, int exponent)
{
    RandomShape s;
    s.max_terms = terms;
    s.max_exponent = exponent;
    return s;
}

} // namespace

TEST(Lie, WittBracketOnMonomialFields)
{
    const auto sig = weyl();
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
        {
            const auto u = vf(sig, "x_1^" + std::to_string(m));
            const auto v = vf(sig, "x_1^" + std::to_string(n));
            // [x^m D, x^n D] = (n - m) x^{m+n-1} D.
            const std::string expect =
                m + n == 0 ? "0" : std::to_string(n - m) + "*x_1^" + std::to_string(m + n - 1);
            EXPECT_EQ(witt_bracket(u, v), vf(sig, expect)) << m << ", " << n;
        }
    EXPECT_EQ(witt_bracket(vf(sig, "x_1"), vf(sig, "1")), vf(sig, "-1"));
}

TEST(Lie, WittBracketMatchesOperatorCommutator)
{
    const auto sig = mixed();
    Random rng(41);
    for (int k = 0; k < 30; ++k)
    {
        const auto u = rng.derivation(sig, shape(2, 2)), v = rng.derivation(sig, shape(2, 2));
        EXPECT_EQ(witt_bracket(u, v).to_operator(), commutator(u.to_operator(), v.to_operator()));
        EXPECT_EQ(DerivationElement::from_operator(u.to_operator()), u);
    }
}

TEST(Lie, WittAntisymmetryAndJacobi)
{
    const auto sig = make_signature(2, 2, 1, GroupElement::unit(2, 1));
    Random rng(42);
    for (int k = 0; k < 20; ++k)
    {
        const auto u = rng.derivation(sig, shape(2, 2)), v = rng.derivation(sig, shape(2, 2)),
                   w = rng.derivation(sig, shape(2, 2));
        EXPECT_EQ(witt_bracket(u, v), -witt_bracket(v, u));
        EXPECT_TRUE((witt_bracket(u, witt_bracket(v, w)) + witt_bracket(v, witt_bracket(w, u)) +
                     witt_bracket(w, witt_bracket(u, v)))
                        .is_zero());
    }
}

TEST(Lie, SpanContracts)
{
    const auto sig = weyl();
    EXPECT_EQ(error_of([&] { (void)make_span({vf(sig, "1"), vf(sig, "x_1^3")}); }), ErrorCode::NotClosed);
    EXPECT_EQ(error_of([&] { (void)make_span({vf(sig, "1"), vf(sig, "2")}); }), ErrorCode::NotIndependent);
    // ad(D) on {D, x D} is not diagonal.
    EXPECT_EQ(error_of([&] { (void)make_span({vf(sig, "1"), vf(sig, "x_1")}, 0); }), ErrorCode::NotGraded);
    const LieSpan s = preset_span("sl2like", sig);
    EXPECT_EQ(s.dim(), 3u);
    EXPECT_EQ(s.degree(0), -1);
    EXPECT_EQ(s.degree(1), 0);
    EXPECT_EQ(s.degree(2), 1);
    EXPECT_EQ(s.coordinates(vf(sig, "3*x_1^2 - 1")), (Vector{Scalar(-1), Scalar(), Scalar(3)}));
    EXPECT_EQ(error_of([&] { (void)s.coordinates(vf(sig, "x_1^3")); }), ErrorCode::NotClosed);
    EXPECT_EQ(error_of([&] { (void)preset_span("nosuch", sig); }), ErrorCode::InvalidArgument);
}

TEST(Lie, DifferentialOfIdentityIsTheBracket)
{
    const auto sig = weyl();
    for (const auto &name : preset_span_names())
    {
        const LieSpan s = preset_span(name, sig);
        EXPECT_EQ(ce_differential(s, identity_cochain(s)), bracket_cochain(s)) << name;
        EXPECT_TRUE(is_cocycle(s, bracket_cochain(s))) << name;
    }
}

TEST(Lie, DifferentialByHandOnBorel)
{
    // borel = {D, x D} with [D, x D] = D. For w(D) = x D, w(x D) = 0:
    // dw(D, xD) = [D, w(xD)] - [xD, w(D)] - w([D, xD]) = 0 - 0 - x D.
    const auto sig = weyl();
    const LieSpan s = preset_span("borel", sig);
    Cochain w(2, 1);
    w.set({0}, {Scalar(), Scalar(1)});
    w.set({1}, {Scalar(), Scalar()});
    const Cochain dw = ce_differential(s, w);
    EXPECT_EQ(dw.eval({0, 1}), (Vector{Scalar(), Scalar(-1)}));
    EXPECT_EQ(dw.eval({1, 0}), (Vector{Scalar(), Scalar(1)}));
}

TEST(Lie, DSquaredVanishes)
{
    const auto sig = weyl();
    Random rng(43);
    for (const auto &name : preset_span_names())
    {
        const LieSpan s = preset_span(name, sig);
        for (int k = 0; k <= 2; ++k)
            for (int trial = 0; trial < 10; ++trial)
                EXPECT_TRUE(ce_differential(s, ce_differential(s, random_cochain(rng, s.dim(), k))).is_zero())
                    << name << " degree " << k;
    }
}

TEST(Lie, RandomCochainIsNotClosed)
{
    const auto sig = weyl();
    const LieSpan s = preset_span("sl2like", sig);
    Cochain w(3, 1);
    w.set({0}, {Scalar(), Scalar(), Scalar(1)});
    w.set({1}, {Scalar(), Scalar(), Scalar()});
    w.set({2}, {Scalar(), Scalar(), Scalar()});
    EXPECT_FALSE(is_cocycle(s, w));
}

TEST(Lie, CochainDegree)
{
    const auto sig = weyl();
    const LieSpan s = preset_span("sl2like", sig);
    EXPECT_EQ(cochain_degree(s, bracket_cochain(s)), 0);
    EXPECT_FALSE(cochain_degree(s, Cochain(3, 2)));
    Cochain w(3, 1);
    w.set({0}, {Scalar(), Scalar(1), Scalar()});
    EXPECT_EQ(cochain_degree(s, w), 1);
    w.set({1}, {Scalar(1), Scalar(), Scalar()});
    EXPECT_EQ(error_of([&] { (void)cochain_degree(s, w); }), ErrorCode::NotHomogeneous);
}

TEST(Lie, EulerIntegrationExamples)
{
    const auto sig = weyl();
    const LieSpan s = preset_span("sl2like", sig);
    // psi(D) = x D has degree 1, and omega = d psi is a nonzero coboundary.
    Cochain psi(3, 1);
    psi.set({0}, {Scalar(), Scalar(1), Scalar()});
    const Cochain omega = ce_differential(s, psi);
    ASSERT_FALSE(omega.is_zero());
    const Cochain phi = euler_integrate(s, omega);
    EXPECT_EQ(ce_differential(s, phi), omega);

    EXPECT_EQ(error_of([&] { (void)euler_integrate(s, bracket_cochain(s)); }), ErrorCode::DegreeZero);
    const LieSpan plain = make_span({vf(sig, "1"), vf(sig, "x_1")});
    EXPECT_EQ(error_of([&] { (void)euler_integrate(plain, bracket_cochain(plain)); }), ErrorCode::NotGraded);

    // Degree -1: the literal divisor d - deg x vanishes on x = D.
    Cochain down(3, 1);
    down.set({1}, {Scalar(1), Scalar(), Scalar()});
    down.set({2}, {Scalar(), Scalar(1), Scalar()});
    const Cochain omega_down = ce_differential(s, down);
    ASSERT_FALSE(omega_down.is_zero());
    EXPECT_EQ(ce_differential(s, euler_integrate(s, omega_down)), omega_down);
    EXPECT_EQ(error_of([&] { (void)euler_integrate(s, omega_down, EulerMode::Literal); }),
              ErrorCode::ResonantDegree);
}

TEST(Lie, EulerIntegrationOnRandomCoboundaries)
{
    const auto sig = weyl();
    Random rng(44);
    int done = 0;
    for (const auto &name : preset_span_names())
    {
        const LieSpan s = preset_span(name, sig);
        for (std::int64_t d = -2; d <= 2; ++d)
        {
            if (d == 0)
                continue;
            for (int trial = 0; trial < 3; ++trial)
            {
                Cochain psi(s.dim(), 1);
                for (std::size_t i = 0; i < s.dim(); ++i)
                {
                    Vector v(s.dim());
                    for (std::size_t k = 0; k < s.dim(); ++k)
                        if (s.degree(k) - s.degree(i) == d)
                            v[k] = Scalar(static_cast<long>(rng.uniform(1, 4)));
                    psi.set({i}, v);
                }
                const Cochain omega = ce_differential(s, psi);
                if (omega.is_zero())
                    continue;
                EXPECT_EQ(ce_differential(s, euler_integrate(s, omega)), omega) << name << " degree " << d;
                ++done;
            }
        }
    }
    EXPECT_GT(done, 0);
}
