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

RandomShape shape(int terms, int exponent, bool weyl_only = false)
{
    RandomShape s;
    s.max_terms = terms;
    s.max_exponent = exponent;
    s.weyl_only = weyl_only;
    return s;
}

} // namespace

TEST(Grading, OrdExamples)
{
    const auto sig = mixed();
    EXPECT_EQ(ord(el(sig, "x_1")), 1);
    EXPECT_EQ(ord(el(sig, "D_1^2 + x_1")), 2);
    EXPECT_EQ(ord(el(sig, "7")), 0);
    // |a| + |beta|_1 + |gamma|_1 + d = 2 + 3 + 1 + 3.
    EXPECT_EQ(ord(el(sig, "E_1^(-2)*exp((1,-2)*x_1)*x_1^(0,1)*D_1^3")), 9);
    EXPECT_EQ(error_of([&] { (void)ord(Element::zero(sig)); }), ErrorCode::ZeroElement);
}

TEST(Grading, WeightedOrd)
{
    const auto sig = mixed();
    const OrderWeights w{0, 0, 1, 1};
    EXPECT_EQ(ord(el(sig, "E_1^3*exp(2*x_1)*x_1*D_1"), w), 2);
}

TEST(Grading, HomogeneousDegrees)
{
    const auto sig = mixed();
    EXPECT_EQ(exp_degree(el(sig, "exp(x_1)*D_1 + exp(x_1)*x_1")), GroupElement::integer(2, 1));
    EXPECT_EQ(power_degree(el(sig, "x_1^2*D_1 + E_1*x_1^2")), GroupElement::integer(2, 2));
    EXPECT_EQ(error_of([&] { (void)exp_degree(el(sig, "exp(x_1) + 1")); }), ErrorCode::NotHomogeneous);
    EXPECT_EQ(error_of([&] { (void)power_degree(el(sig, "x_1 + 1")); }), ErrorCode::NotHomogeneous);
    EXPECT_EQ(error_of([&] { (void)exp_degree(Element::zero(sig)); }), ErrorCode::ZeroElement);
}

TEST(Grading, SymbolExamples)
{
    const auto sig = weyl();
    EXPECT_EQ(symbol(el(sig, "x_1*D_1 + D_1 + 3")), sym(sig, "x_1*y_1"));
    EXPECT_EQ(symbol(el(sig, "D_1*x_1")), sym(sig, "x_1*y_1"));
    EXPECT_EQ(full_symbol(el(sig, "D_1*x_1")), sym(sig, "x_1*y_1 + 1"));
    EXPECT_EQ(gr_mul(sym(sig, "x_1 + y_1"), sym(sig, "x_1 - y_1")), sym(sig, "x_1^2 - y_1^2"));
    EXPECT_EQ(error_of([&] { (void)symbol(Element::zero(sig)); }), ErrorCode::ZeroElement);
}

TEST(Grading, QuantizeInvertsFullSymbol)
{
    const auto sig = mixed();
    Random rng(4);
    for (int k = 0; k < 30; ++k)
    {
        const Element p = rng.element(sig, shape(4, 3));
        EXPECT_EQ(quantize_normal(full_symbol(p)), p);
    }
}

TEST(Grading, WeylPairStaysFiltered)
{
    const auto sig = weyl();
    const FiltrationReport r = filtration_diagnostic(el(sig, "x_1"), el(sig, "D_1"));
    EXPECT_EQ(r.ord_p, 1);
    EXPECT_EQ(r.ord_q, 1);
    EXPECT_EQ(r.ord_product, 2);
    EXPECT_EQ(r.ord_commutator, 0);
    EXPECT_TRUE(r.multiplicative);
    EXPECT_TRUE(r.strict_drop);
    EXPECT_FALSE(r.product_witness);
}

TEST(Grading, ExponentialPairBreaksStrictDrop)
{
    const auto sig = mixed();
    const FiltrationReport r = filtration_diagnostic(el(sig, "D_1"), el(sig, "E_1"));
    EXPECT_EQ(r.ord_product, 4);
    EXPECT_EQ(r.ord_commutator, 4);
    EXPECT_FALSE(r.multiplicative);
    EXPECT_FALSE(r.strict_drop);
    ASSERT_TRUE(r.commutator_witness);
    EXPECT_EQ(*r.commutator_witness, el(sig, "E_1*exp(x_1)*x_1^2"));
}

TEST(Grading, StrictDropOnSmallGeneratorPairs)
{
    const auto sig = make_signature(1, 1, 1, GroupElement(1));
    const std::vector<std::string> gens{"x_1", "D_1", "exp(x_1)", "x_1^2"};
    for (const auto &a : gens)
        for (const auto &b : gens)
        {
            const FiltrationReport r = filtration_diagnostic(el(sig, a), el(sig, b));
            EXPECT_TRUE(r.strict_drop) << a << ", " << b;
        }
}

TEST(Grading, WeylOrdIsMultiplicative)
{
    const auto sig = weyl(2);
    Random rng(6);
    for (int k = 0; k < 40; ++k)
    {
        const Element p = rng.element(sig, shape(3, 3, true)), q = rng.element(sig, shape(3, 3, true));
        EXPECT_EQ(ord(mul(p, q)), ord(p) + ord(q));
        EXPECT_EQ(symbol(mul(p, q)), gr_mul(symbol(p), symbol(q)));
        const Element c = commutator(p, q);
        if (!c.is_zero())
        {
            EXPECT_LE(ord(c), ord(p) + ord(q) - 2);
        }
    }
}

TEST(Grading, OrdSubadditiveAndScaleInvariant)
{
    const auto sig = mixed();
    Random rng(9);
    for (int k = 0; k < 40; ++k)
    {
        const Element p = rng.element(sig, shape(3, 3)), q = rng.element(sig, shape(3, 3));
        if (p.is_zero() || q.is_zero() || (p + q).is_zero())
            continue;
        EXPECT_LE(ord(p + q), std::max(ord(p), ord(q)));
        EXPECT_EQ(ord(p * Scalar::rational(-3, 2)), ord(p));
    }
}

TEST(Grading, GrMulIsCommutativeAndAssociative)
{
    const auto sig = mixed();
    Random rng(12);
    for (int k = 0; k < 30; ++k)
    {
        const GrElement u = rng.symbol(sig, shape(3, 3)), v = rng.symbol(sig, shape(3, 3)),
                        w = rng.symbol(sig, shape(3, 3));
        EXPECT_EQ(gr_mul(u, v), gr_mul(v, u));
        EXPECT_EQ(gr_mul(gr_mul(u, v), w), gr_mul(u, gr_mul(v, w)));
        EXPECT_EQ(gr_mul(u, GrElement::unit(sig)), u);
    }
}
