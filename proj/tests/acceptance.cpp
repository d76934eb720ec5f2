// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "expweyl/cli.hpp"
#include "expweyl/deformation.hpp"
#include "expweyl/errors.hpp"
#include "expweyl/random.hpp"
#include "expweyl/representation.hpp"
#include "expweyl/selftest.hpp"
#include "expweyl/text.hpp"

using namespace expweyl;

namespace
{

// Wall-clock limits in seconds.
constexpr double kRelationLimit = 5.0;
constexpr double kAssociativityLimit = 60.0;
constexpr double kDefaultLimit = 60.0;
constexpr double kTotalLimit = 300.0;

using Failure = std::optional<std::string>;

RandomShape shape(int terms, int exponent, bool weyl_only = false, bool functions_only = false)
{
    RandomShape s;
    s.max_terms = terms;
    s.max_exponent = exponent;
    s.weyl_only = weyl_only;
    s.functions_only = functions_only;
    return s;
}

// ---------------------------------------------------------------- 1

// [D_i, E_j] = delta_ij (p x^{p-1} + t x^p) e^{t x} E for variable i.
Element e_rule(const SignaturePtr &sig, int i)
{
    const int p = sig->p[static_cast<std::size_t>(i)];
    const GroupElement &t = sig->t[static_cast<std::size_t>(i)];
    Monomial m(sig->n, sig->rank);
    m.set_a(i, 1);
    m.set_beta(i, t);
    m.add_gamma1(i, p - 1);
    Element out(sig);
    out.add_term(m, Scalar(static_cast<long>(p)));
    Monomial m2 = m;
    m2.add_gamma1(i, 1);
    out.add_term(m2, embed(t));
    return out;
}

Failure relations_on(const SignaturePtr &sig)
{
    const int n = sig->n;
    const auto r = static_cast<std::size_t>(sig->rank);
    std::vector<GroupElement> alphas{GroupElement::integer(r, 1), GroupElement::integer(r, -2)};
    if (r > 1)
    {
        alphas.push_back(GroupElement::unit(r, 1));
        alphas.push_back(GroupElement({2, -1}));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
        {
            const Element delta = Element::constant(sig, Scalar(i == j ? 1 : 0));
            if (commutator(Element::D(sig, i), Element::x(sig, j)) != delta)
                return "[D_i, x_j] != delta_ij";
            if (!commutator(Element::x(sig, i), Element::x(sig, j)).is_zero())
                return "[x_i, x_j] != 0";
            if (!commutator(Element::D(sig, i), Element::D(sig, j)).is_zero())
                return "[D_i, D_j] != 0";
            for (const auto &alpha : alphas)
            {
                const Element e = Element::exp(sig, j, alpha);
                const Element expect = i == j ? e * embed(alpha) : Element::zero(sig);
                if (commutator(Element::D(sig, i), e) != expect)
                    return "[D_i, e^{alpha x_j}] wrong for alpha = " + alpha.to_string();
            }
            const Element rule = i == j ? e_rule(sig, i) : Element::zero(sig);
            if (commutator(Element::D(sig, i), Element::E(sig, j)) != rule)
                return "E relation fails";
            if (mul(Element::E(sig, j), Element::E(sig, j, -1)) != Element::unit(sig))
                return "E E^{-1} != 1";
            std::vector<Element> symbols{Element::E(sig, i), Element::E(sig, j, -1), Element::x(sig, i),
                                         Element::x(sig, j)};
            for (const auto &alpha : alphas)
            {
                symbols.push_back(Element::exp(sig, j, alpha));
                symbols.push_back(Element::power(sig, i, alpha));
            }
            for (const auto &a : symbols)
                for (const auto &b : symbols)
                    if (!commutator(a, b).is_zero())
                        return "exponential symbols " + format(a) + " and " + format(b) + " do not commute";
        }
    return {};
}

Failure criterion_relations()
{
    for (int n = 1; n <= 2; ++n)
        for (int r = 1; r <= 2; ++r)
        {
            const auto ur = static_cast<std::size_t>(r);
            std::vector<GroupElement> ts{GroupElement(ur), GroupElement::unit(ur, 0)};
            if (r == 2)
                ts.push_back(GroupElement::unit(ur, 1));
            // Every per-variable choice of p_i and t_i.
            const std::size_t choices = 3 * ts.size();
            std::size_t total = 1;
            for (int i = 0; i < n; ++i)
                total *= choices;
            for (std::size_t code = 0; code < total; ++code)
            {
                AlgebraSignature s;
                s.n = n;
                s.rank = r;
                std::size_t c = code;
                for (int i = 0; i < n; ++i)
                {
                    s.p.push_back(static_cast<int>(c % 3) + 1);
                    s.t.push_back(ts[(c / 3) % ts.size()]);
                    c /= choices;
                }
                const auto sig = make_signature(s);
                if (auto f = relations_on(sig))
                    return *f + " (n = " + std::to_string(n) + ", r = " + std::to_string(r) + ")";
            }
        }
    return {};
}

// ---------------------------------------------------------------- 2

Failure criterion_associativity()
{
    // 100 triples in two variables with every symbol kind, 100 in one
    // variable over a rank-2 lattice.
    const std::vector<std::pair<SignaturePtr, int>> plan{
        {make_signature(2, 1, 2, GroupElement::integer(1, 1)), 100},
        {make_signature(1, 2, 2, GroupElement::integer(2, 1)), 100},
    };
    Random rng(20261016);
    const RandomShape sh = shape(4, 3);
    for (const auto &[sig, count] : plan)
        for (int k = 0; k < count; ++k)
        {
            const Element p = rng.element(sig, sh), q = rng.element(sig, sh), r = rng.element(sig, sh);
            if (mul(mul(p, q), r) != mul(p, mul(q, r)))
                return "(PQ)R != P(QR) for P = " + format(p) + ", Q = " + format(q) + ", R = " + format(r);
        }
    return {};
}

// ---------------------------------------------------------------- 3

Failure criterion_representation()
{
    const auto sig = make_signature(1, 2, 2, GroupElement::integer(2, 1));
    Random rng(3);
    for (int k = 0; k < 100; ++k)
    {
        const Element p = rng.element(sig, shape(3, 2)), q = rng.element(sig, shape(3, 2));
        const Element f = rng.element(sig, shape(3, 2, false, true));
        if (act(mul(p, q), f) != act(p, act(q, f)))
            return "act(PQ, f) != act(P, act(Q, f)) for P = " + format(p) + ", Q = " + format(q) + ", f = " +
                   format(f);
    }
    return {};
}

// ---------------------------------------------------------------- 4

Failure criterion_noetherian()
{
    const auto sig = make_signature(1, 1, 1, GroupElement(1));
    for (unsigned n = 1; n <= 6; ++n)
    {
        const NoetherianReport r = noetherian_witness(sig, n);
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), n);
        if (r.top != Scalar(RationalFunction(fact)))
            return "act(D^n, x^n) != n! at n = " + std::to_string(n);
        if (!r.overflow.is_zero())
            return "act(D^{n+1}, x^n) != 0 at n = " + std::to_string(n);
        if (!r.certified)
            return "witness not certified at n = " + std::to_string(n);
    }
    return {};
}

// ---------------------------------------------------------------- 5

Failure criterion_filtration()
{
    const auto sig = make_signature(1, 1, 2, GroupElement::integer(1, 1));
    const std::vector<Element> gens{Element::x(sig, 0), Element::D(sig, 0),
                                    Element::exp(sig, 0, GroupElement::integer(1, 1)),
                                    Element::power(sig, 0, GroupElement::integer(1, 2))};
    for (const auto &a : gens)
        for (const auto &b : gens)
            if (!filtration_diagnostic(a, b).strict_drop)
                return "strict drop fails for (" + format(a) + ", " + format(b) + ")";
    const FiltrationReport r = filtration_diagnostic(Element::D(sig, 0), Element::E(sig, 0));
    if (r.strict_drop || !r.commutator_witness)
        return "(D, E) was not refuted";
    if (format(*r.commutator_witness) != "E_1*exp(x_1)*x_1^2")
        return "unexpected witness " + format(*r.commutator_witness);
    return {};
}

// ---------------------------------------------------------------- 6

Failure criterion_lie()
{
    const auto sig = make_signature(1, 2, 2, GroupElement::integer(2, 1));
    Random rng(6);
    for (int k = 0; k < 100; ++k)
    {
        const auto u = rng.derivation(sig, shape(2, 2)), v = rng.derivation(sig, shape(2, 2)),
                   w = rng.derivation(sig, shape(2, 2));
        if (!(witt_bracket(u, witt_bracket(v, w)) + witt_bracket(v, witt_bracket(w, u)) +
              witt_bracket(w, witt_bracket(u, v)))
                 .is_zero())
            return "Jacobi fails for u = " + format(u) + ", v = " + format(v) + ", w = " + format(w);
    }
    const auto weyl = make_signature(1, 1, 1, GroupElement(1));
    for (const std::string name : {"borel", "sl2like"})
    {
        const LieSpan s = preset_span(name, weyl);
        for (int degree = 0; degree <= 2; ++degree)
            for (int trial = 0; trial < 10; ++trial)
            {
                Cochain c(s.dim(), degree);
                const auto tuples = c.tuples();
                for (const auto &t : tuples)
                    c.set(t, rng.vector(s.dim()));
                if (!ce_differential(s, ce_differential(s, c)).is_zero())
                    return "d^2 != 0 on " + name + " in degree " + std::to_string(degree);
            }
    }
    int integrated = 0;
    for (int round = 0; integrated < 20 && round < 200; ++round)
        for (const auto &name : preset_span_names())
        {
            if (integrated == 20)
                break;
            const LieSpan s = preset_span(name, weyl);
            const std::int64_t d = rng.coin() ? rng.uniform(1, 2) : -rng.uniform(1, 2);
            Cochain psi(s.dim(), 1);
            for (std::size_t i = 0; i < s.dim(); ++i)
            {
                Vector v(s.dim());
                for (std::size_t k = 0; k < s.dim(); ++k)
                    if (s.degree(k) - s.degree(i) == d)
                        v[k] = Scalar(static_cast<long>(rng.uniform(1, 5)));
                psi.set({i}, v);
            }
            const Cochain omega = ce_differential(s, psi);
            if (omega.is_zero())
                continue;
            if (ce_differential(s, euler_integrate(s, omega)) != omega)
                return "d(phi) != omega on " + name + " at degree " + std::to_string(d);
            ++integrated;
        }
    if (integrated < 20)
        return "only " + std::to_string(integrated) + " nonzero coboundaries were constructed";
    return {};
}

// ---------------------------------------------------------------- 7

Failure criterion_homology()
{
    const auto sig = make_signature(1, 2, 2, GroupElement::integer(2, 1));
    Random rng(7);
    for (int k = 0; k < 50; ++k)
    {
        const Chain high = rng.chain(sig, 2 + k % 2, 2, shape(2, 2));
        if (!hochschild_b(hochschild_b(high)).is_zero())
            return "b^2 != 0 in degree " + std::to_string(high.degree());
        const Chain c = rng.chain(sig, k % 3, 2, shape(2, 2));
        if (!connes_B(connes_B(c)).is_zero())
            return "B^2 != 0 in degree " + std::to_string(c.degree());
        Chain anti = hochschild_b(connes_B(c));
        if (c.degree() > 0)
            anti += connes_B(hochschild_b(c));
        if (!anti.is_zero())
            return "bB + Bb != 0 in degree " + std::to_string(c.degree());
    }
    const auto weyl = make_signature(1, 1, 1, GroupElement(1));
    const Element one = Element::unit(weyl);
    const SpanCheck r = commutator_span_check(one, {{Element::D(weyl, 0), Element::x(weyl, 0)}},
                                              Window::from_support(weyl, {one}));
    if (!r.inside)
        return "1 is not in span{[D, x]}";
    return {};
}

// ---------------------------------------------------------------- 8

// Triples of generators x^alpha (alpha != 0) with l1 sum at most bound.
std::vector<Triple> rank2_generator_triples(const SignaturePtr &sig, std::int64_t bound)
{
    std::vector<GroupElement> gens;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            if (std::abs(a) + std::abs(b) <= bound && (a != 0 || b != 0))
                gens.push_back(GroupElement({a, b}));
    std::vector<Triple> out;
    for (const auto &f : gens)
        for (const auto &g : gens)
            for (const auto &h : gens)
                if (l1(f) + l1(g) + l1(h) <= bound)
                    out.push_back({GrElement::power(sig, 0, f), GrElement::power(sig, 0, g),
                                   GrElement::power(sig, 0, h)});
    return out;
}

Failure criterion_deformation()
{
    const auto weyl = make_signature(2, 1, 1, GroupElement(1));
    Random rng(8);
    for (int k = 0; k < 100; ++k)
    {
        const Element p = rng.element(weyl, shape(3, 3, true)), q = rng.element(weyl, shape(3, 3, true));
        for (int N : {2, 6})
            if (symbol_star(full_symbol(p), full_symbol(q), N) != contraction_graded_symbol(p, q, N))
                return "symbol_star != contraction product for P = " + format(p) + ", Q = " + format(q);
    }

    const auto r2 = make_signature(1, 2, 1, GroupElement(2));
    const AntisymMatrix c({{Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(0)}});
    const Rank2Product prod = rank2_deform(r2, c, GroupElement::unit(2, 0), GroupElement::unit(2, 1));
    Monomial m(1, 2);
    m.set_a(0, 1);
    m.set_gamma(0, GroupElement({1, 1}));
    if (prod.commutator != GrElement::monomial(r2, m, Scalar(2) * Scalar::hbar(1)))
        return "rank-2 commutator is " + format(prod.commutator);
    const auto triples = rank2_generator_triples(r2, 4);
    const AssocReport assoc = star_assoc_check({rank2_cochain(r2, c)}, triples);
    for (const auto &d : assoc.defects)
        if (!d[0].is_zero() || !d[1].is_zero())
            return "rank-2 defect nonzero mod hbar^2";

    const auto base = make_signature(1, 1, 2, GroupElement::integer(1, 1), 2);
    const TShiftReport ts = t_shift_deform(base, 2);
    if (!ts.nontrivial)
        return "order-hbar part of D E vanishes";
    for (int k = 0; k < 50; ++k)
    {
        const Element p = rng.element(ts.deformed, shape(2, 2)), q = rng.element(ts.deformed, shape(2, 2)),
                      r = rng.element(ts.deformed, shape(2, 2));
        if (mul(mul(p, q), r) != mul(p, mul(q, r)))
            return "t-shift mul not associative mod hbar^3";
    }

    const auto one = make_signature(1, 1, 1, GroupElement(1));
    std::vector<Triple> mc_triples;
    for (int k = 0; k < 20; ++k)
        mc_triples.push_back({rng.symbol(one, shape(2, 2, true)), rng.symbol(one, shape(2, 2, true)),
                              rng.symbol(one, shape(2, 2, true))});
    const MCReport mc =
        mc_check(Multilinear::from(symbol_star_op(one, 1)), Multilinear::from(symbol_star_op(one, 2)), mc_triples);
    if (!mc.zero || !mc.agree)
        return "MC residual of the N = 2 symbol star product is nonzero";
    return {};
}

// ---------------------------------------------------------------- 9

std::string slurp(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Failure golden(const std::string &name)
{
    const std::string dir = EXPWEYL_GOLDEN_DIR;
    std::vector<std::string> args;
    std::istringstream lines(slurp(dir + "/" + name + ".args"));
    for (std::string line; std::getline(lines, line);)
    {
        for (std::size_t pos; (pos = line.find("@GOLDEN@")) != std::string::npos;)
            line.replace(pos, 8, dir);
        args.push_back(line);
    }
    std::ostringstream out, err;
    if (run_cli(args, out, err) != 0)
        return "golden " + name + " exited nonzero";
    if (out.str() != slurp(dir + "/" + name + ".out"))
        return "golden " + name + " output differs";
    return {};
}

Failure criterion_cli()
{
    const auto sig = make_signature(2, 2, 2, GroupElement::unit(2, 1));
    RandomShape sh = shape(4, 3);
    sh.symbolic_coefficients = true;
    Random rng(9);
    for (int k = 0; k < 200; ++k)
    {
        const Element p = rng.element(sig, sh);
        if (parse_element(sig, format(p)) != p)
            return "parse(format(P)) != P for " + format(p);
    }
    for (const auto &c : run_selftest(1))
        if (!c.pass)
            return "selftest " + c.name + " failed: " + c.detail;
    for (const char *name : {"comm_relation", "noetherian_three", "grdiag_exponential"})
        if (auto f = golden(name))
            return f;
    return {};
}

struct Criterion
{
    int id;
    const char *name;
    double limit;
    std::function<Failure()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "relation suite", kRelationLimit, criterion_relations},
        {2, "associativity fuzz", kAssociativityLimit, criterion_associativity},
        {3, "representation oracle", kDefaultLimit, criterion_representation},
        {4, "factorial witness", kDefaultLimit, criterion_noetherian},
        {5, "order-drop diagnostics", kDefaultLimit, criterion_filtration},
        {6, "lie suite", kDefaultLimit, criterion_lie},
        {7, "homology suite", kDefaultLimit, criterion_homology},
        {8, "deformation suite", kDefaultLimit, criterion_deformation},
        {9, "cli", kDefaultLimit, criterion_cli},
    };
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    int failed = 0;
    for (const auto &c : criteria)
    {
        const auto t0 = clock::now();
        Failure f;
        try
        {
            f = c.run();
        }
        catch (const Error &e)
        {
            f = std::string("unexpected error ") + e.what();
        }
        const double secs = std::chrono::duration<double>(clock::now() - t0).count();
        if (!f && secs > c.limit)
            f = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit) + " s";
        std::cout << (f ? "FAIL" : "PASS") << " " << c.id << " " << c.name << " (" << std::fixed
                  << std::setprecision(2) << secs << " s)";
        if (f)
        {
            std::cout << ": " << *f;
            ++failed;
        }
        std::cout << std::endl;
    }
    const double total = std::chrono::duration<double>(clock::now() - start).count();
    std::cout << "total " << std::fixed << std::setprecision(2) << total << " s (limit " << kTotalLimit << " s), "
              << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " passed"
              << std::endl;
    if (total > kTotalLimit)
        ++failed;
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
