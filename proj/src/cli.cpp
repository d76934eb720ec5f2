#include "expweyl/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "expweyl/deformation.hpp"
#include "expweyl/errors.hpp"
#include "expweyl/homology.hpp"
#include "expweyl/lie.hpp"
#include "expweyl/random.hpp"
#include "expweyl/representation.hpp"
#include "expweyl/selftest.hpp"
#include "expweyl/serialize.hpp"
#include "expweyl/text.hpp"

namespace expweyl
{

namespace
{

struct Report
{
    std::vector<std::string> text;
    json data = json::object();
    int status = 0;

    void line(const std::string &s) { text.push_back(s); }
};

struct Session
{
    SessionConfig config;
    const SignaturePtr &sig() const { return config.signature; }
    Element element(const std::string &s) const { return parse_element(sig(), s); }
    GrElement symbol(const std::string &s) const { return parse_symbol(sig(), s); }
};

json element_json(const Element &e)
{
    return json{{"text", format(e)}, {"terms", to_json(e)}};
}

json symbol_json(const GrElement &u)
{
    return json{{"text", format(u)}, {"terms", to_json(u)}};
}

std::string bool_text(bool b)
{
    return b ? "true" : "false";
}

std::string vector_text(const Vector &v, const AlgebraSignature &sig)
{
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k)
        out += (k ? ", " : "") + format(v[k], sig);
    return out + "]";
}

json vector_json(const Vector &v, const AlgebraSignature &sig)
{
    json out = json::array();
    for (const auto &s : v)
        out.push_back(format(s, sig));
    return out;
}

std::string tuple_text(const std::vector<std::size_t> &t)
{
    std::string out;
    for (std::size_t k = 0; k < t.size(); ++k)
        out += (k ? "," : "") + ("b" + std::to_string(t[k]));
    return out;
}

// Nonzero values of a cochain, one line each.
void cochain_lines(Report &r, const std::string &label, const Cochain &w, const AlgebraSignature &sig)
{
    json values = json::array();
    bool any = false;
    for (std::size_t i = 0; i < w.tuples().size(); ++i)
    {
        const Vector &v = w.at(i);
        const bool zero = std::all_of(v.begin(), v.end(), [](const Scalar &s) { return s.is_zero(); });
        if (zero)
            continue;
        any = true;
        r.line("  " + label + "(" + tuple_text(w.tuples()[i]) + ") = " + vector_text(v, sig));
        values.push_back(json{{"args", w.tuples()[i]}, {"value", vector_json(v, sig)}});
    }
    if (!any)
        r.line("  " + label + " = 0");
    r.data[label] = json{{"degree", w.degree()}, {"values", values}};
}

Chain chain_of(const Session &s, const std::vector<std::string> &factors)
{
    if (factors.empty())
        throw Error(ErrorCode::InvalidArgument, "a chain needs at least one factor");
    std::vector<Element> fs;
    for (const auto &f : factors)
        fs.push_back(s.element(f));
    return Chain::tensor(fs);
}

std::vector<Element> elements_of(const Session &s, const std::vector<std::string> &srcs)
{
    std::vector<Element> out;
    for (const auto &src : srcs)
        out.push_back(s.element(src));
    return out;
}

AntisymMatrix matrix_of(const Session &s, const std::string &src)
{
    std::vector<std::vector<Scalar>> rows;
    std::stringstream rs(src);
    std::string row;
    while (std::getline(rs, row, ';'))
    {
        std::vector<Scalar> entries;
        std::stringstream es(row);
        std::string entry;
        while (std::getline(es, entry, ','))
            entries.push_back(parse_scalar(s.sig(), entry));
        rows.push_back(std::move(entries));
    }
    for (const auto &r : rows)
        if (r.size() != rows.size())
            throw Error(ErrorCode::InvalidArgument, "the matrix must be square, rows separated by ';'");
    return AntisymMatrix(std::move(rows));
}

// Degree-d homogeneous 1-cochain psi(b_i) = sum c b_k over deg b_k - deg b_i = d.
Cochain homogeneous_one_cochain(const LieSpan &span, std::int64_t d, Random &rng)
{
    Cochain psi(span.dim(), 1);
    for (std::size_t i = 0; i < span.dim(); ++i)
    {
        Vector v(span.dim());
        for (std::size_t k = 0; k < span.dim(); ++k)
            if (span.degree(k) - span.degree(i) == d)
                v[k] = Scalar(static_cast<long>(rng.uniform(1, 3)));
        psi.set({i}, v);
    }
    return psi;
}

LieSpan span_of(const Session &s, const std::string &preset, const std::vector<std::string> &basis,
                std::optional<std::size_t> grading)
{
    if (!preset.empty())
    {
        if (!basis.empty())
            throw Error(ErrorCode::InvalidArgument, "give either --preset or a basis, not both");
        return preset_span(preset, s.sig());
    }
    if (basis.empty())
        throw Error(ErrorCode::InvalidArgument, "a span needs --preset or basis derivations");
    std::vector<DerivationElement> b;
    for (const auto &src : basis)
        b.push_back(DerivationElement::from_operator(s.element(src)));
    return make_span(b, grading);
}

std::vector<Multilinear> star_components(const SignaturePtr &sig, const std::string &kind, int N)
{
    std::vector<Multilinear> ms;
    if (kind == "symbol")
        for (int k = 1; k <= N; ++k)
            ms.push_back(Multilinear::from(symbol_star_op(sig, k)));
    else if (kind == "moyal")
        for (int k = 1; k <= N; ++k)
            ms.push_back(Multilinear::from(moyal_op(sig, k)));
    else if (kind == "poisson")
    {
        ms.push_back(Multilinear::from(poisson_std_op(sig)));
        for (int k = 2; k <= N; ++k)
            ms.push_back(Multilinear::from(PolyDiffOp(sig)));
    }
    else if (kind == "mixed")
        ms = {Multilinear::from(poisson_std_op(sig)), Multilinear::from(symbol_star_op(sig, 2))};
    else
        throw Error(ErrorCode::InvalidArgument, "unknown star product '" + kind + "'");
    return ms;
}

// ---------------------------------------------------------------- command table

struct Options
{
    std::vector<std::string> args;
    bool power = false;
    int maxdeg = 3;
    int max_degree = 2;
    std::string preset;
    std::optional<std::size_t> grading;
    int degree = 2;
    bool bracket = false;
    bool identity = false;
    std::string mode = "corrected";
    std::optional<int> order;
    std::string star = "symbol";
    std::string variant = "symbol";
    std::string matrix;
};

using Handler = std::function<Report(const Session &, const Options &)>;

void require_args(const Options &o, std::size_t n, const char *usage)
{
    if (o.args.size() != n)
        throw Error(ErrorCode::InvalidArgument, std::string("usage: ") + usage);
}

Report element_report(const Element &e)
{
    Report r;
    r.line(format(e));
    r.data["result"] = element_json(e);
    return r;
}

Report cmd_normalize(const Session &s, const Options &o)
{
    require_args(o, 1, "normalize EXPR");
    return element_report(s.element(o.args[0]));
}

Report cmd_mul(const Session &s, const Options &o)
{
    if (o.args.empty())
        throw Error(ErrorCode::InvalidArgument, "usage: mul EXPR [EXPR ...]");
    Element p = s.element(o.args[0]);
    for (std::size_t k = 1; k < o.args.size(); ++k)
        p = mul(p, s.element(o.args[k]));
    return element_report(p);
}

Report cmd_comm(const Session &s, const Options &o)
{
    require_args(o, 2, "comm P Q");
    return element_report(commutator(s.element(o.args[0]), s.element(o.args[1])));
}

Report cmd_ord(const Session &s, const Options &o)
{
    require_args(o, 1, "ord EXPR");
    Report r;
    const auto k = ord(s.element(o.args[0]));
    r.line(std::to_string(k));
    r.data["ord"] = k;
    return r;
}

Report cmd_degree(const Session &s, const Options &o)
{
    require_args(o, 1, "degree EXPR [--power]");
    const Element p = s.element(o.args[0]);
    const GroupElement g = o.power ? power_degree(p) : exp_degree(p);
    Report r;
    r.line(format(g));
    r.data["kind"] = o.power ? "power" : "exp";
    r.data["degree"] = to_json(g);
    return r;
}

Report cmd_symbol(const Session &s, const Options &o)
{
    require_args(o, 1, "symbol EXPR");
    const GrElement u = symbol(s.element(o.args[0]));
    Report r;
    r.line(format(u));
    r.data["result"] = symbol_json(u);
    return r;
}

Report cmd_grdiag(const Session &s, const Options &o)
{
    require_args(o, 2, "grdiag P Q");
    const FiltrationReport f = filtration_diagnostic(s.element(o.args[0]), s.element(o.args[1]));
    const auto opt = [](const std::optional<std::int64_t> &v) { return v ? std::to_string(*v) : std::string("none"); };
    Report r;
    r.line("ord(P) = " + std::to_string(f.ord_p));
    r.line("ord(Q) = " + std::to_string(f.ord_q));
    r.line("ord(PQ) = " + opt(f.ord_product));
    r.line("ord([P,Q]) = " + opt(f.ord_commutator));
    r.line("multiplicative = " + bool_text(f.multiplicative));
    r.line("strict_drop = " + bool_text(f.strict_drop));
    r.data["ord_p"] = f.ord_p;
    r.data["ord_q"] = f.ord_q;
    r.data["ord_product"] = f.ord_product ? json(*f.ord_product) : json(nullptr);
    r.data["ord_commutator"] = f.ord_commutator ? json(*f.ord_commutator) : json(nullptr);
    r.data["multiplicative"] = f.multiplicative;
    r.data["strict_drop"] = f.strict_drop;
    if (f.product_witness)
    {
        r.line("product_witness = " + format(*f.product_witness));
        r.data["product_witness"] = element_json(*f.product_witness);
    }
    if (f.commutator_witness)
    {
        r.line("commutator_witness = " + format(*f.commutator_witness));
        r.data["commutator_witness"] = element_json(*f.commutator_witness);
    }
    return r;
}

Report cmd_act(const Session &s, const Options &o)
{
    require_args(o, 2, "act P F");
    return element_report(act(s.element(o.args[0]), s.element(o.args[1])));
}

Report cmd_probe(const Session &s, const Options &o)
{
    require_args(o, 1, "probe P [--maxdeg K]");
    const ProbeResult p = faithfulness_probe(s.element(o.args[0]), o.maxdeg);
    Report r;
    r.line("zero = " + bool_text(p.zero));
    r.data["zero"] = p.zero;
    if (p.test_exponent)
    {
        std::string t = "(";
        for (std::size_t k = 0; k < p.test_exponent->size(); ++k)
            t += (k ? "," : "") + std::to_string((*p.test_exponent)[k]);
        r.line("test_exponent = " + t + ")");
        r.line("witness = " + format(*p.witness));
        r.data["test_exponent"] = *p.test_exponent;
        r.data["witness"] = element_json(*p.witness);
    }
    return r;
}

Report cmd_noetherian(const Session &s, const Options &o)
{
    require_args(o, 1, "noetherian N");
    long n = 0;
    try
    {
        n = std::stol(o.args[0]);
    }
    catch (const std::exception &)
    {
        throw Error(ErrorCode::InvalidArgument, "N must be a positive integer");
    }
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "N must be a positive integer");
    const NoetherianReport w = noetherian_witness(s.sig(), static_cast<unsigned>(n));
    Report r;
    r.line("(" + format(w.top, *s.sig()) + ", " + format(w.overflow, *s.sig()) + ")");
    r.data["n"] = n;
    r.data["top"] = format(w.top, *s.sig());
    r.data["overflow"] = format(w.overflow, *s.sig());
    r.data["certified"] = w.certified;
    return r;
}

Report cmd_reduce(const Session &s, const Options &o)
{
    require_args(o, 1, "reduce F");
    const Element f = s.element(o.args[0]);
    const auto gamma = reduce_to_constant(f);
    Element d = Element::unit(s.sig());
    for (int i = 0; i < s.sig()->n; ++i)
        d = mul(d, Element::D(s.sig(), i, gamma[static_cast<std::size_t>(i)]));
    const Element c = act(d, f);
    std::string t = "(";
    for (std::size_t k = 0; k < gamma.size(); ++k)
        t += (k ? "," : "") + std::to_string(gamma[k]);
    Report r;
    r.line("gamma = " + t + ")");
    r.line("constant = " + format(c));
    r.data["gamma"] = gamma;
    r.data["constant"] = element_json(c);
    return r;
}

Report cmd_liebracket(const Session &s, const Options &o)
{
    require_args(o, 2, "liebracket U V");
    const auto u = DerivationElement::from_operator(s.element(o.args[0]));
    const auto v = DerivationElement::from_operator(s.element(o.args[1]));
    return element_report(witt_bracket(u, v).to_operator());
}

std::string combination_text(const Vector &v, const AlgebraSignature &sig)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k)
    {
        if (v[k].is_zero())
            continue;
        const std::string b = "b" + std::to_string(k);
        std::string t;
        if (v[k].is_one())
            t = b;
        else if ((-v[k]).is_one())
            t = "-" + b;
        else
            t = format(v[k], sig) + "*" + b;
        if (out.empty())
            out = t;
        else if (t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out.empty() ? "0" : out;
}

Report cmd_cespan(const Session &s, const Options &o)
{
    const LieSpan span = span_of(s, o.preset, o.args, o.grading);
    const AlgebraSignature &sig = *s.sig();
    Report r;
    r.line("dim = " + std::to_string(span.dim()));
    json basis = json::array();
    for (std::size_t k = 0; k < span.dim(); ++k)
    {
        std::string l = "b" + std::to_string(k) + " = " + format(span.basis()[k]);
        json b{{"text", format(span.basis()[k])}};
        if (span.graded())
        {
            l += "  (degree " + std::to_string(span.degree(k)) + ")";
            b["degree"] = span.degree(k);
        }
        r.line(l);
        basis.push_back(b);
    }
    json structure = json::array();
    for (std::size_t i = 0; i < span.dim(); ++i)
        for (std::size_t j = i + 1; j < span.dim(); ++j)
        {
            const Vector &c = span.structure(i, j);
            r.line("[b" + std::to_string(i) + ", b" + std::to_string(j) + "] = " + combination_text(c, sig));
            structure.push_back(json{{"i", i}, {"j", j}, {"coords", vector_json(c, sig)}});
        }
    r.data["dim"] = span.dim();
    r.data["basis"] = basis;
    r.data["structure"] = structure;
    r.data["grading_index"] = span.grading_index() ? json(*span.grading_index()) : json(nullptr);
    return r;
}

Report cmd_ced(const Session &s, const Options &o)
{
    const LieSpan span = span_of(s, o.preset, o.args, o.grading);
    Cochain w(span.dim(), o.degree);
    if (o.bracket)
        w = bracket_cochain(span);
    else if (o.identity)
        w = identity_cochain(span);
    else
    {
        if (o.degree < 0)
            throw Error(ErrorCode::InvalidArgument, "cochain degree must be >= 0");
        Random rng(s.config.seed);
        const auto tuples = w.tuples();
        for (const auto &t : tuples)
            w.set(t, rng.vector(span.dim()));
    }
    const Cochain dw = ce_differential(span, w);
    const Cochain ddw = ce_differential(span, dw);
    Report r;
    r.line("omega:");
    cochain_lines(r, "omega", w, *s.sig());
    r.line("d(omega):");
    cochain_lines(r, "d_omega", dw, *s.sig());
    r.line("cocycle = " + bool_text(dw.is_zero()));
    r.line("dd_zero = " + bool_text(ddw.is_zero()));
    r.data["cocycle"] = dw.is_zero();
    r.data["dd_zero"] = ddw.is_zero();
    if (!ddw.is_zero())
        r.status = 1;
    return r;
}

Report cmd_eulerint(const Session &s, const Options &o)
{
    const LieSpan span = span_of(s, o.preset, o.args, o.grading);
    if (!span.graded())
        throw Error(ErrorCode::NotGraded, "euler integration needs a graded span (--grading or a preset)");
    EulerMode mode;
    if (o.mode == "corrected")
        mode = EulerMode::Corrected;
    else if (o.mode == "literal")
        mode = EulerMode::Literal;
    else
        throw Error(ErrorCode::InvalidArgument, "--mode must be 'corrected' or 'literal'");
    Random rng(s.config.seed);
    const Cochain psi = homogeneous_one_cochain(span, o.degree, rng);
    const Cochain w = ce_differential(span, psi);
    const Cochain phi = euler_integrate(span, w, mode);
    const bool ok = ce_differential(span, phi) == w;
    Report r;
    r.line("omega = d(psi), degree " + std::to_string(o.degree) + ":");
    cochain_lines(r, "omega", w, *s.sig());
    r.line("phi:");
    cochain_lines(r, "phi", phi, *s.sig());
    r.line("d(phi) == omega: " + bool_text(ok));
    r.data["mode"] = o.mode;
    r.data["degree"] = o.degree;
    r.data["verified"] = ok;
    if (!ok)
        r.status = 1;
    return r;
}

Report chain_report(const Chain &c)
{
    Report r;
    r.line(format(c));
    r.data["degree"] = c.degree();
    r.data["result"] = format(c);
    return r;
}

Report cmd_hochb(const Session &s, const Options &o)
{
    return chain_report(hochschild_b(chain_of(s, o.args)));
}

Report cmd_connesB(const Session &s, const Options &o)
{
    return chain_report(connes_B(chain_of(s, o.args)));
}

Report cmd_commspan(const Session &s, const Options &o)
{
    if (o.args.size() < 1 || o.args.size() % 2 != 1)
        throw Error(ErrorCode::InvalidArgument, "usage: commspan F P1 Q1 [P2 Q2 ...]");
    const Element f = s.element(o.args[0]);
    std::vector<std::pair<Element, Element>> pairs;
    std::vector<Element> support{f};
    for (std::size_t k = 1; k < o.args.size(); k += 2)
    {
        pairs.emplace_back(s.element(o.args[k]), s.element(o.args[k + 1]));
        support.push_back(commutator(pairs.back().first, pairs.back().second));
    }
    const SpanCheck c = commutator_span_check(f, pairs, Window::from_support(s.sig(), support));
    Report r;
    r.line("inside = " + bool_text(c.inside));
    r.data["inside"] = c.inside;
    if (c.combination)
    {
        r.line("combination = " + vector_text(*c.combination, *s.sig()));
        r.data["combination"] = vector_json(*c.combination, *s.sig());
    }
    return r;
}

Report cmd_windowrank(const Session &s, const Options &o)
{
    const Window window = Window::from_support(s.sig(), elements_of(s, o.args));
    Report r;
    r.line("window = " + std::to_string(window.size()) + " monomials (window-relative ranks, not homology)");
    json degrees = json::array();
    for (const auto &d : window_rank(window, o.max_degree))
    {
        r.line("degree " + std::to_string(d.degree) + ": chains = " + std::to_string(d.chain_dim) +
               ", rank(b) = " + std::to_string(d.rank) + ", kernel = " + std::to_string(d.kernel.size()));
        degrees.push_back(json{{"degree", d.degree}, {"chains", d.chain_dim}, {"rank", d.rank}, {"kernel", d.kernel.size()}});
    }
    r.data["window_size"] = window.size();
    r.data["degrees"] = degrees;
    return r;
}

int star_order(const Session &s, const Options &o)
{
    const int N = o.order.value_or(s.sig()->hbar_order.value_or(2));
    if (N < 0)
        throw Error(ErrorCode::InvalidArgument, "truncation order must be >= 0");
    return N;
}

Report cmd_star(const Session &s, const Options &o)
{
    require_args(o, 2, "star F G [--order N]");
    const GrElement u = symbol_star(s.symbol(o.args[0]), s.symbol(o.args[1]), star_order(s, o));
    Report r;
    r.line(format(u));
    r.data["order"] = star_order(s, o);
    r.data["result"] = symbol_json(u);
    return r;
}

Report cmd_assoc(const Session &s, const Options &o)
{
    require_args(o, 3, "assoc F G H [--star symbol|moyal|poisson|mixed] [--order N]");
    const auto ms = star_components(s.sig(), o.star, star_order(s, o));
    const Triple t{s.symbol(o.args[0]), s.symbol(o.args[1]), s.symbol(o.args[2])};
    const AssocReport a = star_assoc_check(ms, {t});
    Report r;
    json orders = json::array();
    for (std::size_t k = 0; k < a.defects[0].size(); ++k)
    {
        r.line("order " + std::to_string(k) + ": " + format(a.defects[0][k]));
        orders.push_back(symbol_json(a.defects[0][k]));
    }
    r.line("first_nonzero_order = " + (a.first_nonzero_order ? std::to_string(*a.first_nonzero_order) : "none"));
    r.data["star"] = o.star;
    r.data["defects"] = orders;
    r.data["first_nonzero_order"] = a.first_nonzero_order ? json(*a.first_nonzero_order) : json(nullptr);
    return r;
}

Report cmd_rank2(const Session &s, const Options &o)
{
    require_args(o, 2, "rank2 --matrix 'c11,c12;c21,c22' ALPHA BETA");
    if (o.matrix.empty())
        throw Error(ErrorCode::InvalidArgument, "rank2 needs --matrix");
    const AntisymMatrix c = matrix_of(s, o.matrix);
    const Rank2Product p = rank2_deform(s.sig(), c, parse_group(s.sig(), o.args[0]), parse_group(s.sig(), o.args[1]));
    Report r;
    r.line("x^alpha * x^beta = " + format(p.forward));
    r.line("x^beta * x^alpha = " + format(p.backward));
    r.line("commutator = " + format(p.commutator));
    r.data["forward"] = symbol_json(p.forward);
    r.data["backward"] = symbol_json(p.backward);
    r.data["commutator"] = symbol_json(p.commutator);
    return r;
}

Report cmd_tshift(const Session &s, const Options &o)
{
    require_args(o, 0, "tshift [--order N]");
    const TShiftReport t = t_shift_deform(s.sig(), o.order);
    Report r;
    json rules = json::array();
    for (std::size_t i = 0; i < t.rules.size(); ++i)
    {
        const std::string v = std::to_string(i + 1);
        r.line("D_" + v + "(E_" + v + ") = " + format(t.rules[i]));
        r.line("hbar^1 part = " + format(t.order_one[i]));
        rules.push_back(json{{"rule", element_json(t.rules[i])}, {"order_one", element_json(t.order_one[i])}});
    }
    r.line("nontrivial = " + bool_text(t.nontrivial));
    r.data["hbar_order"] = *t.deformed->hbar_order;
    r.data["rules"] = rules;
    r.data["nontrivial"] = t.nontrivial;
    return r;
}

Report cmd_mc(const Session &s, const Options &o)
{
    std::vector<Multilinear> ms;
    const auto &sig = s.sig();
    if (o.variant == "symbol")
        ms = star_components(sig, "symbol", 2);
    else if (o.variant == "moyal")
        ms = star_components(sig, "moyal", 2);
    else if (o.variant == "mixed")
        ms = star_components(sig, "mixed", 2);
    else
        throw Error(ErrorCode::InvalidArgument, "--variant must be symbol, moyal or mixed");
    std::vector<Triple> triples;
    if (o.args.size() == 3)
        triples.push_back({s.symbol(o.args[0]), s.symbol(o.args[1]), s.symbol(o.args[2])});
    else if (o.args.empty())
    {
        Random rng(s.config.seed);
        RandomShape sh;
        sh.max_terms = 2;
        sh.max_exponent = 2;
        sh.weyl_only = true;
        for (int k = 0; k < 3; ++k)
            triples.push_back({rng.symbol(sig, sh), rng.symbol(sig, sh), rng.symbol(sig, sh)});
    }
    else
        throw Error(ErrorCode::InvalidArgument, "usage: mc [--variant symbol|moyal|mixed] [F G H]");
    const MCReport m = mc_check(ms[0], ms[1], triples);
    Report r;
    json rows = json::array();
    for (std::size_t t = 0; t < triples.size(); ++t)
    {
        r.line("triple " + std::to_string(t + 1) + ": " + format(triples[t][0]) + " | " + format(triples[t][1]) +
               " | " + format(triples[t][2]));
        r.line("  residual = " + format(m.residuals[t]));
        r.line("  defect   = " + format(m.defects[t]));
        rows.push_back(json{{"residual", symbol_json(m.residuals[t])}, {"defect", symbol_json(m.defects[t])}});
    }
    r.line("zero = " + bool_text(m.zero));
    r.line("agree = " + bool_text(m.agree));
    r.data["variant"] = o.variant;
    r.data["triples"] = rows;
    r.data["zero"] = m.zero;
    r.data["agree"] = m.agree;
    return r;
}

Report cmd_selftest(const Session &s, const Options &o)
{
    require_args(o, 0, "selftest");
    const auto results = run_selftest(s.config.seed);
    Report r;
    json checks = json::array();
    std::size_t passed = 0;
    for (const auto &c : results)
    {
        passed += c.pass ? 1 : 0;
        r.line(std::string(c.pass ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail));
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    r.line("selftest: " + std::to_string(passed) + "/" + std::to_string(results.size()) + " passed");
    r.data["checks"] = checks;
    r.data["passed"] = passed;
    r.data["total"] = results.size();
    if (passed != results.size())
        r.status = 1;
    return r;
}

struct Command
{
    const char *name;
    const char *help;
    Handler run;
};

SessionConfig session_config(const std::string &config_path, const std::string &format_flag,
                             const std::optional<std::uint64_t> &seed, const std::optional<int> &hbar_order)
{
    SessionConfig cfg = config_path.empty() ? config_from_json(json::object()) : load_config(config_path);
    if (format_flag == "text")
        cfg.format = OutputFormat::Text;
    else if (format_flag == "structured")
        cfg.format = OutputFormat::Structured;
    if (seed)
        cfg.seed = *seed;
    if (hbar_order)
    {
        if (*hbar_order < 0)
            throw Error(ErrorCode::InvalidConfig, "--hbar-order must be >= 0");
        AlgebraSignature sig = *cfg.signature;
        sig.hbar_order = *hbar_order;
        cfg.signature = make_signature(std::move(sig));
    }
    return cfg;
}

void emit(std::ostream &out, const SessionConfig &cfg, const std::string &command, const Report &r)
{
    if (cfg.format == OutputFormat::Text)
    {
        for (const auto &l : r.text)
            out << l << '\n';
        return;
    }
    json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    j["status"] = r.status;
    for (const auto &[k, v] : r.data.items())
        j[k] = v;
    out << j.dump(2) << '\n';
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact normal-form arithmetic for Weyl-type algebras over exponential-polynomial rings", "expweyl"};
    app.require_subcommand(1);
    std::string config_path;
    std::string format_flag;
    std::optional<std::uint64_t> seed;
    std::optional<int> hbar_order;
    app.add_option("--config", config_path, "JSON session configuration (signature, format, seed)");
    app.add_option("--format", format_flag, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--seed", seed, "Random seed for generated data");
    app.add_option("--hbar-order", hbar_order, "Enable hbar mode truncated at this order");

    const std::vector<Command> commands{
        {"normalize", "Normal form of an expression", cmd_normalize},
        {"mul", "Product of expressions, left to right", cmd_mul},
        {"comm", "Commutator [P, Q]", cmd_comm},
        {"ord", "Exponential order", cmd_ord},
        {"degree", "Exponential (or power) degree of a homogeneous element", cmd_degree},
        {"symbol", "Top-order symbol with D_i read as y_i", cmd_symbol},
        {"grdiag", "Filtration diagnostics for a pair", cmd_grdiag},
        {"act", "Apply P to a function F", cmd_act},
        {"probe", "Faithfulness probe on test monomials", cmd_probe},
        {"noetherian", "Non-Noetherian witness (act(D^n, x^n), act(D^{n+1}, x^n))", cmd_noetherian},
        {"reduce", "Derivative multi-index reducing a polynomial to a constant", cmd_reduce},
        {"liebracket", "Witt bracket of two derivations", cmd_liebracket},
        {"cespan", "Structure of a bracket-closed span", cmd_cespan},
        {"ced", "Chevalley-Eilenberg differential of a cochain", cmd_ced},
        {"eulerint", "Euler integration of a constructed coboundary", cmd_eulerint},
        {"hochb", "Hochschild boundary of the tensor F0 | F1 | ...", cmd_hochb},
        {"connesB", "Connes operator of the tensor F0 | F1 | ...", cmd_connesB},
        {"commspan", "Is F in span{[P_k, Q_k]}?", cmd_commspan},
        {"windowrank", "Ranks of b on the normalized window chains", cmd_windowrank},
        {"star", "Truncated symbol star product", cmd_star},
        {"assoc", "Associativity defects of a star product on one triple", cmd_assoc},
        {"rank2", "Rank-2 deformed product of x^alpha and x^beta", cmd_rank2},
        {"tshift", "t -> t + hbar x deformation of the E rule", cmd_tshift},
        {"mc", "Maurer-Cartan check through order 2", cmd_mc},
        {"selftest", "Run the invariant suite", cmd_selftest},
    };

    Options opts;
    std::map<const CLI::App *, const Command *> by_app;
    for (const auto &c : commands)
    {
        CLI::App *sub = app.add_subcommand(c.name, c.help);
        sub->fallthrough();
        sub->add_option("args", opts.args, "Expressions and other positional arguments");
        const std::string name = c.name;
        if (name == "degree")
            sub->add_flag("--power", opts.power, "Use the power exponents instead of the exponentials");
        if (name == "probe")
            sub->add_option("--maxdeg", opts.maxdeg, "Largest test exponent per variable");
        if (name == "windowrank")
            sub->add_option("--max-degree", opts.max_degree, "Largest chain degree");
        if (name == "cespan" || name == "ced" || name == "eulerint")
        {
            sub->add_option("--preset", opts.preset, "Named span: borel, sl2like or expaff");
            sub->add_option("--grading", opts.grading, "Index of the grading element in the basis");
        }
        if (name == "ced")
        {
            sub->add_option("--degree", opts.degree, "Degree of the random cochain");
            sub->add_flag("--bracket", opts.bracket, "Use the bracket 2-cochain");
            sub->add_flag("--identity", opts.identity, "Use the identity 1-cochain");
        }
        if (name == "eulerint")
        {
            sub->add_option("--degree", opts.degree, "Ad-degree of the constructed coboundary");
            sub->add_option("--mode", opts.mode, "corrected or literal");
        }
        if (name == "star" || name == "assoc" || name == "tshift")
            sub->add_option("--order", opts.order, "hbar truncation order");
        if (name == "assoc")
            sub->add_option("--star", opts.star, "symbol, moyal, poisson or mixed");
        if (name == "mc")
            sub->add_option("--variant", opts.variant, "symbol, moyal or mixed");
        if (name == "rank2")
            sub->add_option("--matrix", opts.matrix, "Antisymmetric matrix, rows separated by ';'");
        by_app[sub] = &c;
    }

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e, out, err);
        return 2;
    }

    const Command *command = nullptr;
    for (const auto *sub : app.get_subcommands())
        command = by_app.at(sub);

    SessionConfig cfg;
    try
    {
        cfg = session_config(config_path, format_flag, seed, hbar_order);
        const Report r = command->run(Session{cfg}, opts);
        emit(out, cfg, command->name, r);
        return r.status;
    }
    catch (const Error &e)
    {
        err << "error: " << e.what() << '\n';
        if (cfg.signature && cfg.format == OutputFormat::Structured)
        {
            json j;
            j["schema"] = kReportSchema;
            j["command"] = command->name;
            j["error"] = json{{"code", static_cast<int>(e.code())}, {"name", e.name()}, {"message", e.what()}};
            out << j.dump(2) << '\n';
        }
        return 10 + static_cast<int>(e.code());
    }
}

} // namespace expweyl
