#include <gtest/gtest.h>

#include "expweyl/random.hpp"
#include "expweyl/serialize.hpp"
#include "support.hpp"

using namespace expweyl;
using namespace expweyl::testing;

namespace
{

struct ParseFailure
{
    ErrorCode code{};
    std::size_t position = 0;
};

template <typename F>
ParseFailure parse_failure(F &&f)
{
    try
    {
        f();
    }
    catch (const ParseError &e)
    {
        return {e.code(), e.position()};
    }
    return {};
}

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
    s.symbolic_coefficients = true;
    return s;
}

} // namespace

TEST(Text, FormatExamples)
{
    const auto sig = mixed();
    EXPECT_EQ(format(mul(Element::D(sig, 0), Element::x(sig, 0))), "x_1*D_1 + 1");
    EXPECT_EQ(format(el(sig, "1/2*x_1")), "1/2*x_1");
    EXPECT_EQ(format(el(sig, "D_1^2*E_1^(-2)*exp((0,1)*x_1)*x_1^3")).substr(0, 33), "E_1^(-2)*exp((0,1)*x_1)*x_1^3*D_1");
    EXPECT_EQ(format(Element::zero(sig)), "0");
    EXPECT_EQ(format(el(sig, "-x_1 - 1")), "-x_1 - 1");
    EXPECT_EQ(format(sym(sig, "D_1*x_1")), "x_1*y_1");
    EXPECT_EQ(format(GroupElement({3, 0})), "3");
    EXPECT_EQ(format(GroupElement({1, -2})), "(1,-2)");
}

TEST(Text, ParseIsInputOrderRespecting)
{
    const auto sig = weyl();
    EXPECT_EQ(el(sig, "D_1 * x_1"), el(sig, "x_1*D_1 + 1"));
    EXPECT_EQ(el(sig, "(x_1 + 1)^2"), el(sig, "x_1^2 + 2*x_1 + 1"));
    EXPECT_EQ(el(sig, "x_1/2"), el(sig, "1/2*x_1"));
    EXPECT_EQ(parse_scalar(sig, "3/6"), Scalar::rational(1, 2));
}

TEST(Text, ParseErrorsCarryOffsets)
{
    const auto sig = weyl();
    const ParseFailure a = parse_failure([&] { (void)el(sig, "x_3"); });
    EXPECT_EQ(a.code, ErrorCode::SignatureMismatch);
    EXPECT_EQ(a.position, 0u);
    const ParseFailure b = parse_failure([&] { (void)el(sig, "x_1 + * 2"); });
    EXPECT_EQ(b.code, ErrorCode::SyntaxError);
    EXPECT_EQ(b.position, 6u);
    EXPECT_EQ(parse_failure([&] { (void)el(sig, "foo"); }).code, ErrorCode::UnknownSymbol);
    EXPECT_EQ(parse_failure([&] { (void)el(sig, "x_1 / x_1"); }).code, ErrorCode::SyntaxError);
    EXPECT_EQ(parse_failure([&] { (void)el(sig, "(x_1"); }).code, ErrorCode::SyntaxError);
    EXPECT_EQ(parse_failure([&] { (void)el(sig, "hbar"); }).code, ErrorCode::SignatureMismatch);
}

TEST(Text, FormatParseRoundTrip)
{
    for (const auto &sig : {mixed(), make_signature(2, 2, 2, GroupElement::unit(2, 1)),
                            make_signature(1, 1, 1, GroupElement(1), 2)})
    {
        Random rng(71);
        for (int k = 0; k < 50; ++k)
        {
            const Element p = rng.element(sig, shape(4, 3));
            EXPECT_EQ(parse_element(sig, format(p)), p) << format(p);
            const GrElement u = rng.symbol(sig, shape(4, 3));
            EXPECT_EQ(parse_symbol(sig, format(u)), u) << format(u);
        }
    }
}

TEST(Text, StructuredRoundTrip)
{
    const auto sig = make_signature(2, 2, 2, GroupElement::unit(2, 1));
    Random rng(72);
    for (int k = 0; k < 50; ++k)
    {
        const Element p = rng.element(sig, shape(4, 3));
        EXPECT_EQ(element_from_json(sig, json::parse(to_json(p).dump())), p);
        const GrElement u = rng.symbol(sig, shape(4, 3));
        EXPECT_EQ(symbol_from_json(sig, json::parse(to_json(u).dump())), u);
    }
    const auto back = signature_from_json(to_json(*sig));
    EXPECT_EQ(*back, *sig);
}

TEST(Text, ChainAndDerivationFormatting)
{
    const auto sig = weyl();
    EXPECT_EQ(format(Chain::tensor({el(sig, "x_1"), el(sig, "D_1")}, Scalar(2))), "2*[x_1 | D_1]");
    EXPECT_EQ(format(Chain(sig, 1)), "0");
    EXPECT_EQ(format(DerivationElement::single(el(sig, "x_1^2"), 0)), "x_1^2*D_1");
}

TEST(Text, ConfigValidation)
{
    const SessionConfig c = config_from_json(json::parse(R"({"n": 2, "rank": 2, "p": [1, 3], "t": [[0, 1], [1, 0]],
                                                              "format": "structured", "seed": 9})"));
    EXPECT_EQ(c.signature->n, 2);
    EXPECT_EQ(c.signature->p, (std::vector<int>{1, 3}));
    EXPECT_EQ(c.format, OutputFormat::Structured);
    EXPECT_EQ(c.seed, 9u);
    EXPECT_EQ(error_of([] { (void)config_from_json(json::parse(R"({"n": 1, "colour": 1})")); }),
              ErrorCode::InvalidConfig);
    EXPECT_EQ(error_of([] { (void)config_from_json(json::parse(R"({"n": 1, "p": [0]})")); }), ErrorCode::InvalidConfig);
    EXPECT_EQ(error_of([] { (void)config_from_json(json::parse(R"({"n": 2, "p": [1]})")); }), ErrorCode::InvalidConfig);
    EXPECT_EQ(error_of([] { (void)load_config("/nonexistent/expweyl.json"); }), ErrorCode::InvalidConfig);
}
