#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include <gmpxx.h>

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

RandomShape shape(int terms, int exponent)
{
    RandomShape s;
    s.max_terms = terms;
    s.max_exponent = exponent;
    return s;
}

// Rank over Q by Gauss-Jordan elimination on mpq entries.
std::size_t rank_q(std::vector<std::vector<mpq_class>> rows)
{
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c)
    {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][c] != 0)
            {
                const mpq_class f = rows[i][c] / rows[r][c];
                for (std::size_t k = c; k < cols; ++k)
                    rows[i][k] -= f * rows[r][k];
            }
        ++r;
    }
    return r;
}

mpq_class to_mpq(const Scalar &s)
{
    const RationalFunction q = s.coeff(0);
    return mpq_class(q.num().constant_value(), q.den().constant_value());
}

} // namespace

TEST(Homology, BoundaryOfDTensorX)
{
    const auto sig = weyl();
    const Chain c = Chain::tensor({el(sig, "D_1"), el(sig, "x_1")});
    EXPECT_EQ(hochschild_b(c), Chain::tensor({el(sig, "1")}));
    EXPECT_EQ(format(hochschild_b(c)), "[1]");
    EXPECT_EQ(error_of([&] { (void)hochschild_b(Chain::tensor({el(sig, "x_1")})); }), ErrorCode::DegreeZero);
}

TEST(Homology, ConnesOperatorExamples)
{
    const auto sig = weyl();
    EXPECT_EQ(connes_B(Chain::tensor({el(sig, "x_1")})), Chain::tensor({el(sig, "1"), el(sig, "x_1")}));
    // The unit tensor is degenerate in position 1, so B(1) = 0.
    EXPECT_TRUE(connes_B(Chain::tensor({el(sig, "1")})).is_zero());
    // B(a0 (x) a1) = 1 (x) a0 (x) a1 - 1 (x) a1 (x) a0.
    const Chain b = connes_B(Chain::tensor({el(sig, "x_1"), el(sig, "D_1")}));
    Chain expect = Chain::tensor({el(sig, "1"), el(sig, "x_1"), el(sig, "D_1")});
    expect -= Chain::tensor({el(sig, "1"), el(sig, "D_1"), el(sig, "x_1")});
    EXPECT_EQ(b, expect);
}

TEST(Homology, DegenerateTensorsAreDropped)
{
    const auto sig = weyl();
    EXPECT_TRUE(Chain::tensor({el(sig, "x_1"), el(sig, "3")}).is_zero());
    EXPECT_EQ(Chain::tensor({el(sig, "x_1"), el(sig, "D_1 + 2")}), Chain::tensor({el(sig, "x_1"), el(sig, "D_1")}));
}

TEST(Homology, BSquaredVanishes)
{
    const auto sig = mixed();
    Random rng(51);
    for (int degree = 2; degree <= 3; ++degree)
        for (int k = 0; k < 8; ++k)
        {
            const Chain c = rng.chain(sig, degree, 2, shape(2, 2));
            EXPECT_TRUE(hochschild_b(hochschild_b(c)).is_zero()) << "degree " << degree;
        }
}

TEST(Homology, MixedComplexIdentities)
{
    const auto sig = mixed();
    Random rng(52);
    for (int degree = 0; degree <= 2; ++degree)
        for (int k = 0; k < 8; ++k)
        {
            const Chain c = rng.chain(sig, degree, 2, shape(2, 2));
            EXPECT_TRUE(connes_B(connes_B(c)).is_zero());
            Chain anti = hochschild_b(connes_B(c));
            if (degree > 0)
                anti += connes_B(hochschild_b(c));
            EXPECT_TRUE(anti.is_zero()) << "degree " << degree;
        }
}

TEST(Homology, CommutatorSpanExamples)
{
    const auto sig = weyl();
    const Element one = el(sig, "1");
    const SpanCheck unit = commutator_span_check(one, {{el(sig, "D_1"), el(sig, "x_1")}}, Window::from_support(sig, {one}));
    ASSERT_TRUE(unit.inside);
    EXPECT_EQ(*unit.combination, Vector{Scalar(1)});

    const Element x = el(sig, "x_1");
    const SpanCheck half = commutator_span_check(x, {{el(sig, "D_1"), el(sig, "x_1^2")}}, Window::from_support(sig, {x}));
    ASSERT_TRUE(half.inside);
    EXPECT_EQ(*half.combination, Vector{Scalar::rational(1, 2)});

    const Element d = el(sig, "D_1");
    const SpanCheck outside =
        commutator_span_check(x, {{el(sig, "D_1"), el(sig, "x_1^2")}}, Window::from_support(sig, {x, d}));
    EXPECT_TRUE(outside.inside);
    const SpanCheck miss = commutator_span_check(d, {{el(sig, "D_1"), el(sig, "x_1^2")}}, Window::from_support(sig, {x, d}));
    EXPECT_FALSE(miss.inside);
    EXPECT_FALSE(miss.combination);

    EXPECT_EQ(error_of([&] {
                  (void)commutator_span_check(one, {{el(sig, "D_1"), el(sig, "x_1^2")}}, Window::from_support(sig, {one}));
              }),
              ErrorCode::WindowOverflow);
}

TEST(Homology, WindowCoordinates)
{
    const auto sig = weyl();
    const Window w = Window::from_support(sig, {el(sig, "x_1*D_1 + 1"), el(sig, "x_1")});
    EXPECT_EQ(w.size(), 3u);
    EXPECT_EQ(w.coordinates(el(sig, "2*x_1 - 1")).size(), 3u);
    EXPECT_EQ(error_of([&] { (void)w.coordinates(el(sig, "D_1")); }), ErrorCode::WindowOverflow);
}

TEST(Homology, WindowRankAgreesWithExactRankOracle)
{
    const auto sig = weyl();
    const std::vector<Element> gens{el(sig, "1"), el(sig, "x_1"), el(sig, "D_1"), el(sig, "x_1*D_1"), el(sig, "x_1^2")};
    const Window w = Window::from_support(sig, gens);
    const auto degrees = window_rank(w, 1);
    ASSERT_EQ(degrees.size(), 2u);
    EXPECT_EQ(degrees[0].chain_dim, 5u);
    EXPECT_EQ(degrees[0].rank, 0u);
    // Degree 1: tensors a0 (x) a1 with a1 != 1 map to the commutator a0 a1 - a1 a0.
    std::vector<Monomial> keys;
    std::vector<std::vector<mpq_class>> rows;
    std::vector<std::map<Monomial, mpq_class>> images;
    for (const auto &m0 : w.monomials())
        for (const auto &m1 : w.monomials())
        {
            if (m1.is_unit())
                continue;
            const Element a0 = Element::monomial(sig, m0), a1 = Element::monomial(sig, m1);
            const Element image = mul(a0, a1) - mul(a1, a0);
            std::map<Monomial, mpq_class> img;
            for (const auto &[m, c] : image.terms())
            {
                img[m] = to_mpq(c);
                if (std::find(keys.begin(), keys.end(), m) == keys.end())
                    keys.push_back(m);
            }
            images.push_back(std::move(img));
        }
    for (const auto &img : images)
    {
        std::vector<mpq_class> row(keys.size());
        for (std::size_t k = 0; k < keys.size(); ++k)
            if (auto it = img.find(keys[k]); it != img.end())
                row[k] = it->second;
        rows.push_back(std::move(row));
    }
    EXPECT_EQ(degrees[1].chain_dim, images.size());
    EXPECT_EQ(degrees[1].rank, rank_q(rows));
    EXPECT_EQ(degrees[1].kernel.size(), degrees[1].chain_dim - degrees[1].rank);
    for (const auto &z : degrees[1].kernel)
        EXPECT_TRUE(hochschild_b(z).is_zero());
}

TEST(Homology, WindowRankOnEmptyWindow)
{
    const auto sig = weyl();
    const auto degrees = window_rank(Window(sig), 2);
    ASSERT_EQ(degrees.size(), 3u);
    for (const auto &d : degrees)
    {
        EXPECT_EQ(d.chain_dim, 0u);
        EXPECT_EQ(d.rank, 0u);
        EXPECT_TRUE(d.kernel.empty());
    }
}

TEST(Homology, StrictWindowRankOverflows)
{
    const auto sig = weyl();
    const Window w = Window::from_support(sig, {el(sig, "x_1"), el(sig, "D_1")});
    EXPECT_EQ(error_of([&] { (void)window_rank(w, 1, true); }), ErrorCode::WindowOverflow);
}
