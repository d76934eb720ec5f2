#include "expweyl/text.hpp"

#include <cctype>
#include <gmpxx.h>
#include <vector>

#include "expweyl/errors.hpp"

namespace expweyl
{

// ---------------------------------------------------------------- formatting

namespace
{

std::optional<std::int64_t> as_integer(const GroupElement &g)
{
    for (std::size_t j = 1; j < g.rank(); ++j)
        if (g[j] != 0)
            return std::nullopt;
    return g.rank() == 0 ? 0 : g[0];
}

std::string signed_exponent(std::int64_t k)
{
    return k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k);
}

std::string monomial_text(const Monomial &m, const char *derivative)
{
    std::vector<std::string> f;
    for (int i = 0; i < m.n(); ++i)
    {
        const auto a = m.a(i);
        const std::string v = std::to_string(i + 1);
        if (a == 1)
            f.push_back("E_" + v);
        else if (a != 0)
            f.push_back("E_" + v + "^" + signed_exponent(a));
    }
    for (int i = 0; i < m.n(); ++i)
    {
        const GroupElement b = m.beta(i);
        if (b.is_zero())
            continue;
        const std::string x = "x_" + std::to_string(i + 1);
        const auto k = as_integer(b);
        if (k && *k == 1)
            f.push_back("exp(" + x + ")");
        else if (k && *k == -1)
            f.push_back("exp(-" + x + ")");
        else
            f.push_back("exp(" + format(b) + "*" + x + ")");
    }
    for (int i = 0; i < m.n(); ++i)
    {
        const GroupElement g = m.gamma(i);
        if (g.is_zero())
            continue;
        const std::string x = "x_" + std::to_string(i + 1);
        const auto k = as_integer(g);
        if (k && *k == 1)
            f.push_back(x);
        else if (k)
            f.push_back(x + "^" + signed_exponent(*k));
        else
            f.push_back(x + "^" + format(g));
    }
    for (int i = 0; i < m.n(); ++i)
    {
        const auto d = m.d(i);
        const std::string s = std::string(derivative) + "_" + std::to_string(i + 1);
        if (d == 1)
            f.push_back(s);
        else if (d > 1)
            f.push_back(s + "^" + std::to_string(d));
    }
    std::string out;
    for (const auto &s : f)
        out += (out.empty() ? "" : "*") + s;
    return out;
}

std::string terms_text(const TermMap &terms, const AlgebraSignature &sig, const char *derivative)
{
    if (terms.empty())
        return "0";
    std::string out;
    for (const auto &[m, c] : terms)
    {
        const std::string mon = monomial_text(m, derivative);
        std::string t;
        if (mon.empty())
            t = c.to_string(sig.generator_names);
        else if (c.is_one())
            t = mon;
        else if ((-c).is_one())
            t = "-" + mon;
        else if (!c.has_hbar() && c.coeff(0).is_rational())
            t = c.coeff(0).to_string(sig.generator_names) + "*" + mon;
        else
            t = "(" + c.to_string(sig.generator_names) + ")*" + mon;
        if (out.empty())
            out = t;
        else if (t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

} // namespace

std::string format(const Element &p)
{
    return terms_text(p.terms(), p.signature(), "D");
}

std::string format(const GrElement &u)
{
    return terms_text(u.terms(), u.signature(), "y");
}

std::string format(const Scalar &s, const AlgebraSignature &sig)
{
    return s.to_string(sig.generator_names);
}

std::string format(const Chain &c)
{
    if (c.is_zero())
        return "0";
    const AlgebraSignature &sig = *c.signature_ptr();
    std::string out;
    for (const auto &[tensor, coeff] : c.terms())
    {
        std::string body = "[";
        for (std::size_t q = 0; q < tensor.size(); ++q)
        {
            const std::string m = monomial_text(tensor[q], "D");
            body += (q ? " | " : "") + (m.empty() ? std::string("1") : m);
        }
        body += "]";
        std::string t;
        if (coeff.is_one())
            t = body;
        else if ((-coeff).is_one())
            t = "-" + body;
        else if (!coeff.has_hbar() && coeff.coeff(0).is_rational())
            t = coeff.coeff(0).to_string(sig.generator_names) + "*" + body;
        else
            t = "(" + coeff.to_string(sig.generator_names) + ")*" + body;
        if (out.empty())
            out = t;
        else if (t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

std::string format(const DerivationElement &u)
{
    return format(u.to_operator());
}

std::string format(const GroupElement &g)
{
    if (const auto k = as_integer(g))
        return std::to_string(*k);
    std::string out = "(";
    for (std::size_t j = 0; j < g.rank(); ++j)
        out += (j ? "," : "") + std::to_string(g[j]);
    return out + ")";
}

// ---------------------------------------------------------------- lexer

namespace
{

struct Token
{
    enum class Kind
    {
        Number,
        Ident,
        Punct,
        End,
    };
    Kind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size())
    {
        const unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c))
        {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(c))
        {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                ++i;
            out.push_back({Token::Kind::Number, std::string(src.substr(start, i - start)), start});
        }
        else if (std::isalpha(c))
        {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            out.push_back({Token::Kind::Ident, std::string(src.substr(start, i - start)), start});
        }
        else if (std::string_view("+-*/^(),").find(static_cast<char>(c)) != std::string_view::npos)
        {
            out.push_back({Token::Kind::Punct, std::string(1, static_cast<char>(c)), start});
            ++i;
        }
        else
        {
            throw ParseError(ErrorCode::SyntaxError, std::string("unexpected character '") + static_cast<char>(c) + "'",
                             start);
        }
    }
    out.push_back({Token::Kind::End, "", src.size()});
    return out;
}

// ---------------------------------------------------------------- value traits

template <typename T>
struct Ops;

template <>
struct Ops<Element>
{
    static constexpr bool symbol_mode = false;
    static Element constant(const SignaturePtr &s, const Scalar &c) { return Element::constant(s, c); }
    static Element times(const Element &a, const Element &b) { return mul(a, b); }
    static Element x(const SignaturePtr &s, int i, const GroupElement &g) { return Element::power(s, i, g); }
    static Element d(const SignaturePtr &s, int i, std::int64_t k) { return Element::D(s, i, k); }
    static Element e(const SignaturePtr &s, int i, std::int64_t k) { return Element::E(s, i, k); }
    static Element exp(const SignaturePtr &s, int i, const GroupElement &g) { return Element::exp(s, i, g); }
};

template <>
struct Ops<GrElement>
{
    static constexpr bool symbol_mode = true;
    static GrElement constant(const SignaturePtr &s, const Scalar &c) { return GrElement::constant(s, c); }
    static GrElement times(const GrElement &a, const GrElement &b) { return gr_mul(a, b); }
    static GrElement x(const SignaturePtr &s, int i, const GroupElement &g) { return GrElement::power(s, i, g); }
    static GrElement d(const SignaturePtr &s, int i, std::int64_t k) { return GrElement::y(s, i, k); }
    static GrElement e(const SignaturePtr &s, int i, std::int64_t k) { return GrElement::E(s, i, k); }
    static GrElement exp(const SignaturePtr &s, int i, const GroupElement &g) { return GrElement::exp(s, i, g); }
};

// ---------------------------------------------------------------- parser

template <typename T>
class Parser
{
public:
    Parser(SignaturePtr sig, std::string_view src) : m_sig(std::move(sig)), m_tokens(lex(src)) {}

    T parse_all()
    {
        T v = expr();
        if (peek().kind != Token::Kind::End)
            fail(ErrorCode::SyntaxError, "unexpected '" + peek().text + "'");
        return v;
    }

    GroupElement parse_group_all()
    {
        GroupElement g;
        if (is_punct("(") && looks_like_tuple())
        {
            next();
            g = group_in_parens();
        }
        else
            g = group_sum();
        if (peek().kind != Token::Kind::End)
            fail(ErrorCode::SyntaxError, "unexpected '" + peek().text + "'");
        return g;
    }

private:
    using Ops_ = Ops<T>;

    const Token &peek(std::size_t ahead = 0) const
    {
        return m_tokens[std::min(m_pos + ahead, m_tokens.size() - 1)];
    }
    const Token &next() { return m_tokens[std::min(m_pos++, m_tokens.size() - 1)]; }
    bool is_punct(const char *p, std::size_t ahead = 0) const
    {
        return peek(ahead).kind == Token::Kind::Punct && peek(ahead).text == p;
    }
    void expect(const char *p)
    {
        if (!is_punct(p))
            fail(ErrorCode::SyntaxError, std::string("expected '") + p + "'" +
                                             (peek().kind == Token::Kind::End ? " at end of input" : " before '" + peek().text + "'"));
        next();
    }
    [[noreturn]] void fail(ErrorCode code, const std::string &msg) const { throw ParseError(code, msg, peek().pos); }
    [[noreturn]] void fail_at(ErrorCode code, const std::string &msg, std::size_t pos) const
    {
        throw ParseError(code, msg, pos);
    }

    std::size_t rank() const { return static_cast<std::size_t>(m_sig->rank); }

    T constant(const Scalar &c) const { return Ops_::constant(m_sig, c); }

    T expr()
    {
        T acc = term();
        while (is_punct("+") || is_punct("-"))
        {
            const bool minus = next().text == "-";
            T t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    T term()
    {
        T acc = factor();
        while (is_punct("*") || is_punct("/"))
        {
            const bool divide = next().text == "/";
            const std::size_t pos = peek().pos;
            T f = factor();
            if (!divide)
            {
                acc = Ops_::times(acc, f);
                continue;
            }
            const auto c = f.as_constant();
            if (!c)
                fail_at(ErrorCode::SyntaxError, "can only divide by a constant", pos);
            if (c->is_zero())
                fail_at(ErrorCode::DivisionByZero, "division by zero", pos);
            acc = acc * c->inverse();
        }
        return acc;
    }

    T factor()
    {
        if (is_punct("-"))
        {
            next();
            return -factor();
        }
        if (is_punct("+"))
        {
            next();
            return factor();
        }
        if (peek().kind == Token::Kind::Ident)
            return atom();
        const std::size_t pos = peek().pos;
        T base = primary();
        if (!is_punct("^"))
            return base;
        next();
        const std::size_t epos = peek().pos;
        const std::int64_t k = integer_exponent();
        if (k >= 0)
            return power(base, k);
        const auto c = base.as_constant();
        if (!c)
            fail_at(ErrorCode::NegativePower, "only constants can be raised to negative powers", pos);
        if (c->is_zero())
            fail_at(ErrorCode::DivisionByZero, "zero raised to a negative power", epos);
        return power(constant(c->inverse()), -k);
    }

    T power(const T &base, std::int64_t k) const
    {
        T out = constant(Scalar(1));
        for (std::int64_t i = 0; i < k; ++i)
            out = Ops_::times(out, base);
        return out;
    }

    T primary()
    {
        const Token &t = peek();
        if (t.kind == Token::Kind::Number)
        {
            next();
            return constant(Scalar(RationalFunction(mpz_class(t.text))));
        }
        if (is_punct("("))
        {
            next();
            T v = expr();
            expect(")");
            return v;
        }
        if (t.kind == Token::Kind::End)
            fail(ErrorCode::SyntaxError, "unexpected end of input");
        fail(ErrorCode::SyntaxError, "unexpected '" + t.text + "'");
    }

    std::optional<std::size_t> generator_index(const std::string &name) const
    {
        for (std::size_t j = 0; j < m_sig->generator_names.size(); ++j)
            if (m_sig->generator_names[j] == name)
                return j + 1;
        return std::nullopt;
    }

    // "x_3" -> ('x', 2). Validates the index against the signature.
    std::optional<std::pair<char, int>> variable_atom(const Token &t) const
    {
        const std::string &s = t.text;
        if (s.size() < 3 || s[1] != '_' || std::string_view("xDyE").find(s[0]) == std::string_view::npos)
            return std::nullopt;
        for (std::size_t i = 2; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return std::nullopt;
        if (s.size() > 6)
            fail_at(ErrorCode::SignatureMismatch, "variable index out of range in '" + s + "'", t.pos);
        const int idx = std::stoi(s.substr(2));
        if (idx < 1 || idx > m_sig->n)
            fail_at(ErrorCode::SignatureMismatch,
                    "variable index " + std::to_string(idx) + " outside 1.." + std::to_string(m_sig->n), t.pos);
        return std::pair{s[0], idx - 1};
    }

    T atom()
    {
        const Token t = next();
        if (generator_index(t.text))
        {
            Scalar g = Scalar::symbol(*generator_index(t.text) - 1);
            if (!is_punct("^"))
                return constant(g);
            next();
            const std::int64_t k = integer_exponent();
            if (k < 0)
            {
                g = g.inverse();
                return constant(scalar_power(g, -k));
            }
            return constant(scalar_power(g, k));
        }
        if (t.text == "hbar")
        {
            if (!m_sig->hbar_mode())
                fail_at(ErrorCode::SignatureMismatch, "hbar is only available in hbar mode", t.pos);
            const Scalar h = Scalar::hbar(*m_sig->hbar_order);
            if (!is_punct("^"))
                return constant(h);
            next();
            const std::size_t epos = peek().pos;
            const std::int64_t k = integer_exponent();
            if (k < 0)
                fail_at(ErrorCode::NonInvertibleSeries, "hbar is not invertible", epos);
            return constant(scalar_power(h, k));
        }
        if (t.text == "exp")
            return exp_atom(t);
        const auto v = variable_atom(t);
        if (!v)
            fail_at(ErrorCode::UnknownSymbol, "unknown symbol '" + t.text + "'", t.pos);
        const auto [kind, i] = *v;
        switch (kind)
        {
        case 'x': {
            if (!is_punct("^"))
                return Ops_::x(m_sig, i, GroupElement::integer(rank(), 1));
            next();
            return Ops_::x(m_sig, i, group_exponent());
        }
        case 'E': {
            std::int64_t k = 1;
            if (is_punct("^"))
            {
                next();
                k = integer_exponent();
            }
            return Ops_::e(m_sig, i, k);
        }
        default: {
            if (kind == 'y' && !Ops_::symbol_mode)
                fail_at(ErrorCode::UnknownSymbol, "'" + t.text + "' is a symbol variable; use D_i in elements", t.pos);
            std::int64_t k = 1;
            if (is_punct("^"))
            {
                next();
                const std::size_t epos = peek().pos;
                k = integer_exponent();
                if (k < 0)
                    fail_at(ErrorCode::NegativePower, "derivatives have no negative powers", epos);
            }
            return Ops_::d(m_sig, i, k);
        }
        }
    }

    static Scalar scalar_power(const Scalar &s, std::int64_t k)
    {
        Scalar out(1);
        for (std::int64_t i = 0; i < k; ++i)
            out *= s;
        return out;
    }

    T exp_atom(const Token &exp_token)
    {
        expect("(");
        GroupElement coeff = GroupElement::integer(rank(), 1);
        bool negate = false;
        if (is_punct("-"))
        {
            next();
            negate = true;
        }
        const bool bare = peek().kind == Token::Kind::Ident && variable_atom(peek()).has_value();
        if (!bare)
        {
            if (is_punct("("))
            {
                next();
                coeff = group_in_parens();
            }
            else
                coeff = group_term();
            if (is_punct("*"))
                next();
        }
        const Token xt = next();
        const auto v = xt.kind == Token::Kind::Ident ? variable_atom(xt) : std::nullopt;
        if (!v || v->first != 'x')
            fail_at(ErrorCode::SyntaxError, "exp expects its argument in the form G*x_i", xt.pos);
        expect(")");
        if (negate)
            coeff = -coeff;
        if (is_punct("^"))
        {
            next();
            coeff = integer_exponent() * coeff;
        }
        (void)exp_token;
        return Ops_::exp(m_sig, v->second, coeff);
    }

    std::int64_t to_int64(const Token &t) const
    {
        const mpz_class v(t.text);
        if (!v.fits_slong_p())
            fail_at(ErrorCode::SyntaxError, "exponent too large", t.pos);
        return v.get_si();
    }

    // integer | '-' integer | '(' group ')' that is a multiple of g_1.
    std::int64_t integer_exponent()
    {
        const std::size_t pos = peek().pos;
        const GroupElement g = group_exponent();
        for (std::size_t j = 1; j < g.rank(); ++j)
            if (g[j] != 0)
                fail_at(ErrorCode::SyntaxError, "expected an integer exponent", pos);
        return g.rank() ? g[0] : 0;
    }

    GroupElement group_exponent()
    {
        if (peek().kind == Token::Kind::Number)
            return GroupElement::integer(rank(), to_int64(next()));
        if (is_punct("-") && peek(1).kind == Token::Kind::Number)
        {
            next();
            return GroupElement::integer(rank(), -to_int64(next()));
        }
        if (is_punct("("))
        {
            next();
            return group_in_parens();
        }
        fail(ErrorCode::SyntaxError, "expected an exponent");
    }

    bool looks_like_tuple() const
    {
        std::size_t k = 1;
        if (is_punct("-", k))
            ++k;
        return peek(k).kind == Token::Kind::Number && is_punct(",", k + 1);
    }

    // After '(' : a tuple (c1,..,cr) or a combination such as 1+g2; consumes ')'.
    GroupElement group_in_parens()
    {
        std::size_t k = 0;
        if (is_punct("-"))
            ++k;
        if (peek(k).kind == Token::Kind::Number && is_punct(",", k + 1))
        {
            const std::size_t pos = peek().pos;
            std::vector<std::int64_t> coords;
            while (true)
            {
                bool neg = false;
                if (is_punct("-"))
                {
                    next();
                    neg = true;
                }
                if (peek().kind != Token::Kind::Number)
                    fail(ErrorCode::SyntaxError, "expected an integer coordinate");
                const std::int64_t c = to_int64(next());
                coords.push_back(neg ? -c : c);
                if (!is_punct(","))
                    break;
                next();
            }
            expect(")");
            if (coords.size() != rank())
                fail_at(ErrorCode::SignatureMismatch,
                        "group tuple has " + std::to_string(coords.size()) + " coordinates, rank is " +
                            std::to_string(rank()),
                        pos);
            return GroupElement(std::move(coords));
        }
        GroupElement g = group_sum();
        expect(")");
        return g;
    }

    GroupElement group_sum()
    {
        GroupElement acc(rank());
        bool first = true;
        while (true)
        {
            bool neg = false;
            if (is_punct("-") || is_punct("+"))
                neg = next().text == "-";
            else if (!first)
                break;
            acc += neg ? -group_term() : group_term();
            first = false;
            if (!is_punct("+") && !is_punct("-"))
                break;
        }
        return acc;
    }

    // integer ['*' name] | name
    GroupElement group_term()
    {
        const Token &t = peek();
        if (t.kind == Token::Kind::Number)
        {
            const std::int64_t k = to_int64(next());
            if (is_punct("*") && peek(1).kind == Token::Kind::Ident && generator_index(peek(1).text))
            {
                next();
                const std::size_t j = *generator_index(next().text);
                return k * GroupElement::unit(rank(), j);
            }
            return GroupElement::integer(rank(), k);
        }
        if (t.kind == Token::Kind::Ident)
        {
            if (const auto j = generator_index(t.text))
            {
                next();
                return GroupElement::unit(rank(), *j);
            }
            fail(ErrorCode::UnknownSymbol, "unknown group generator '" + t.text + "'");
        }
        fail(ErrorCode::SyntaxError, "expected a group element");
    }

    SignaturePtr m_sig;
    std::vector<Token> m_tokens;
    std::size_t m_pos = 0;
};

} // namespace

Element parse_element(const SignaturePtr &sig, std::string_view src)
{
    return Parser<Element>(sig, src).parse_all();
}

GrElement parse_symbol(const SignaturePtr &sig, std::string_view src)
{
    return Parser<GrElement>(sig, src).parse_all();
}

Scalar parse_scalar(const SignaturePtr &sig, std::string_view src)
{
    const Element e = parse_element(sig, src);
    const auto c = e.as_constant();
    if (!c)
        throw ParseError(ErrorCode::SyntaxError, "expected a constant expression", 0);
    return *c;
}

GroupElement parse_group(const SignaturePtr &sig, std::string_view src)
{
    return Parser<Element>(sig, src).parse_group_all();
}

} // namespace expweyl
