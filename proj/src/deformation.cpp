#include "expweyl/deformation.hpp"

#include "expweyl/errors.hpp"

namespace expweyl
{

std::string Partial::to_string() const
{
    const std::string v = std::to_string(var + 1);
    switch (kind)
    {
    case Kind::E:
        return "d/dE_" + v;
    case Kind::U:
        return "d/du_" + v + "_" + std::to_string(gen + 1);
    case Kind::X:
        return "d/dx_" + v;
    case Kind::Y:
        return "d/dy_" + v;
    }
    return "?";
}

GrElement partial(const Partial &d, const GrElement &f)
{
    GrElement out(f.signature_ptr());
    for (const auto &[m, c] : f.terms())
    {
        Monomial r = m;
        switch (d.kind)
        {
        case Partial::Kind::E: {
            const auto a = m.a(d.var);
            if (a == 0)
                continue;
            r.set_a(d.var, a - 1);
            out.add_term(r, c * Scalar(static_cast<long>(a)));
            break;
        }
        case Partial::Kind::U: {
            const auto k = m.beta(d.var, d.gen);
            if (k == 0)
                continue;
            r.add_beta(d.var, -GroupElement::unit(static_cast<std::size_t>(m.rank()), static_cast<std::size_t>(d.gen)));
            out.add_term(r, c * Scalar(static_cast<long>(k)));
            break;
        }
        case Partial::Kind::X: {
            const GroupElement g = m.gamma(d.var);
            if (g.is_zero())
                continue;
            r.add_gamma1(d.var, -1);
            out.add_term(r, c * g.embed());
            break;
        }
        case Partial::Kind::Y: {
            const auto e = m.d(d.var);
            if (e == 0)
                continue;
            r.set_d(d.var, e - 1);
            out.add_term(r, c * Scalar(static_cast<long>(e)));
            break;
        }
        }
    }
    return out;
}

GrElement apply_word(const Word &w, const GrElement &f)
{
    GrElement out = f;
    for (const auto &d : w)
    {
        if (out.is_zero())
            break;
        out = partial(d, out);
    }
    return out;
}

// ---------------------------------------------------------------- PolyDiffOp

void PolyDiffOp::add(const GrElement &coeff, Word left, Word right)
{
    if (!same_signature(coeff.signature(), *m_sig))
        throw Error(ErrorCode::SignatureMismatch, "coefficient belongs to a different algebra");
    if (coeff.is_zero())
        return;
    m_terms.push_back({coeff, std::move(left), std::move(right)});
}

void PolyDiffOp::add(const Scalar &coeff, Word left, Word right)
{
    add(GrElement::constant(m_sig, coeff), std::move(left), std::move(right));
}

GrElement PolyDiffOp::operator()(const GrElement &f, const GrElement &g) const
{
    GrElement out(m_sig);
    for (const auto &t : m_terms)
    {
        const GrElement lf = apply_word(t.left, f);
        if (lf.is_zero())
            continue;
        const GrElement rg = apply_word(t.right, g);
        if (rg.is_zero())
            continue;
        out += gr_mul(t.coeff, gr_mul(lf, rg));
    }
    return out;
}

PolyDiffOp &PolyDiffOp::operator+=(const PolyDiffOp &o)
{
    for (const auto &t : o.m_terms)
        add(t.coeff, t.left, t.right);
    return *this;
}

PolyDiffOp &PolyDiffOp::operator*=(const Scalar &c)
{
    std::vector<PolyDiffTerm> kept;
    for (auto &t : m_terms)
    {
        t.coeff *= c;
        if (!t.coeff.is_zero())
            kept.push_back(std::move(t));
    }
    m_terms = std::move(kept);
    return *this;
}

namespace
{

Partial px(int i)
{
    return {Partial::Kind::X, i, 0};
}

Partial py(int i)
{
    return {Partial::Kind::Y, i, 0};
}

Partial pu(int i)
{
    return {Partial::Kind::U, i, 0};
}

void multi_indices(int n, int k, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    if (static_cast<int>(cur.size()) == n - 1)
    {
        cur.push_back(k);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int j = k; j >= 0; --j)
    {
        cur.push_back(j);
        multi_indices(n, k - j, cur, out);
        cur.pop_back();
    }
}

} // namespace

PolyDiffOp poisson_std_op(const SignaturePtr &sig)
{
    PolyDiffOp op(sig);
    for (int i = 0; i < sig->n; ++i)
    {
        op.add(Scalar(1), {px(i)}, {py(i)});
        op.add(Scalar(-1), {py(i)}, {px(i)});
    }
    return op;
}

PolyDiffOp poisson_exp_op(const SignaturePtr &sig)
{
    PolyDiffOp op(sig);
    for (int i = 0; i < sig->n; ++i)
    {
        const GrElement e = GrElement::E(sig, i);
        op.add(e, {pu(i)}, {px(i)});
        op.add(-e, {px(i)}, {pu(i)});
    }
    return op;
}

PolyDiffOp lambda_op(const SignaturePtr &sig, const Scalar &lambda)
{
    return lambda * poisson_std_op(sig) + (Scalar(1) - lambda) * poisson_exp_op(sig);
}

PolyDiffOp symbol_star_op(const SignaturePtr &sig, int k)
{
    if (k < 0)
        throw Error(ErrorCode::InvalidArgument, "star component index must be >= 0");
    PolyDiffOp op(sig);
    std::vector<std::vector<int>> ks;
    std::vector<int> cur;
    multi_indices(sig->n, k, cur, ks);
    for (const auto &K : ks)
    {
        Word left, right;
        Scalar weight(1);
        for (int i = 0; i < sig->n; ++i)
        {
            const int ki = K[static_cast<std::size_t>(i)];
            for (int q = 0; q < ki; ++q)
            {
                left.push_back(py(i));
                right.push_back(px(i));
            }
            weight = weight / factorial(static_cast<unsigned>(ki));
        }
        op.add(weight, std::move(left), std::move(right));
    }
    return op;
}

PolyDiffOp moyal_op(const SignaturePtr &sig, int k)
{
    if (k < 0)
        throw Error(ErrorCode::InvalidArgument, "star component index must be >= 0");
    struct Piece
    {
        Scalar c;
        Word left, right;
    };
    std::vector<Piece> pieces{{Scalar(1), {}, {}}};
    for (int step = 0; step < k; ++step)
    {
        std::vector<Piece> next;
        for (const auto &p : pieces)
            for (int i = 0; i < sig->n; ++i)
            {
                Piece a = p, b = p;
                a.left.push_back(px(i));
                a.right.push_back(py(i));
                b.c = -b.c;
                b.left.push_back(py(i));
                b.right.push_back(px(i));
                next.push_back(std::move(a));
                next.push_back(std::move(b));
            }
        pieces = std::move(next);
    }
    PolyDiffOp op(sig);
    const Scalar scale = factorial(static_cast<unsigned>(k)).inverse();
    for (auto &p : pieces)
        op.add(p.c * scale, std::move(p.left), std::move(p.right));
    return op;
}

GrElement poisson_std(const GrElement &f, const GrElement &g)
{
    f.check_same_signature(g);
    return poisson_std_op(f.signature_ptr())(f, g);
}

GrElement poisson_exp(const GrElement &f, const GrElement &g)
{
    f.check_same_signature(g);
    return poisson_exp_op(f.signature_ptr())(f, g);
}

GrElement lambda_bracket(const GrElement &f, const GrElement &g, const Scalar &lambda)
{
    f.check_same_signature(g);
    return lambda_op(f.signature_ptr(), lambda)(f, g);
}

GrElement symbol_star(const GrElement &f, const GrElement &g, int N)
{
    f.check_same_signature(g);
    if (N < 0)
        throw Error(ErrorCode::InvalidArgument, "truncation order must be >= 0");
    GrElement out(f.signature_ptr());
    Scalar hk = Scalar(1).truncated(N);
    const Scalar h = Scalar::hbar(N);
    for (int k = 0; k <= N; ++k)
    {
        GrElement term = symbol_star_op(f.signature_ptr(), k)(f, g);
        term *= hk;
        out += term;
        hk *= h;
    }
    return out;
}

// ---------------------------------------------------------------- multilinear maps

GrElement Multilinear::operator()(const std::vector<GrElement> &args) const
{
    if (static_cast<int>(args.size()) != arity)
        throw Error(ErrorCode::InvalidArgument, "cochain evaluated on the wrong number of arguments");
    return fn(args);
}

Multilinear Multilinear::from(const PolyDiffOp &op)
{
    return {2, [op](const std::vector<GrElement> &a) { return op(a[0], a[1]); }};
}

Multilinear Multilinear::from(std::function<GrElement(const GrElement &, const GrElement &)> f)
{
    return {2, [f = std::move(f)](const std::vector<GrElement> &a) { return f(a[0], a[1]); }};
}

Multilinear commutative_product()
{
    return {2, [](const std::vector<GrElement> &a) { return gr_mul(a[0], a[1]); }};
}

Multilinear operator+(const Multilinear &a, const Multilinear &b)
{
    if (a.arity != b.arity)
        throw Error(ErrorCode::InvalidArgument, "cannot add cochains of different arity");
    return {a.arity, [a, b](const std::vector<GrElement> &args) { return a(args) + b(args); }};
}

Multilinear operator*(const Scalar &c, const Multilinear &a)
{
    return {a.arity, [c, a](const std::vector<GrElement> &args) { return a(args) * c; }};
}

Multilinear compose(const Multilinear &m, const Multilinear &mp)
{
    const int p = m.arity;
    const int q = mp.arity;
    return {p + q - 1, [m, mp, p, q](const std::vector<GrElement> &a) {
                GrElement out(a.front().signature_ptr());
                for (int i = 0; i < p; ++i)
                {
                    std::vector<GrElement> inner(a.begin() + i, a.begin() + i + q);
                    std::vector<GrElement> outer(a.begin(), a.begin() + i);
                    outer.push_back(mp(inner));
                    outer.insert(outer.end(), a.begin() + i + q, a.end());
                    GrElement v = m(outer);
                    out += (i * (q - 1)) % 2 == 0 ? v : -v;
                }
                return out;
            }};
}

Multilinear gerstenhaber_bracket(const Multilinear &m, const Multilinear &mp)
{
    const Multilinear a = compose(m, mp);
    const Multilinear b = compose(mp, m);
    const bool plus = ((m.arity - 1) * (mp.arity - 1)) % 2 != 0;
    return a + Scalar(plus ? 1 : -1) * b;
}

Multilinear hochschild_coboundary(const Multilinear &m)
{
    const int k = m.arity;
    return {k + 1, [m, k](const std::vector<GrElement> &a) {
                std::vector<GrElement> args(a.begin() + 1, a.end());
                GrElement out = gr_mul(a[0], m(args));
                for (int i = 1; i <= k; ++i)
                {
                    std::vector<GrElement> merged(a.begin(), a.begin() + i - 1);
                    merged.push_back(gr_mul(a[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]));
                    merged.insert(merged.end(), a.begin() + i + 1, a.end());
                    GrElement v = m(merged);
                    out += i % 2 == 0 ? v : -v;
                }
                GrElement last = gr_mul(m(std::vector<GrElement>(a.begin(), a.end() - 1)), a.back());
                out += (k + 1) % 2 == 0 ? last : -last;
                return out;
            }};
}

AssocReport star_assoc_check(const std::vector<Multilinear> &ms, const std::vector<Triple> &triples)
{
    std::vector<Multilinear> all{commutative_product()};
    all.insert(all.end(), ms.begin(), ms.end());
    const int N = static_cast<int>(ms.size());
    AssocReport report;
    for (const auto &t : triples)
    {
        if (t.size() != 3)
            throw Error(ErrorCode::InvalidArgument, "associativity triples need three symbols");
        std::vector<GrElement> fg, gh;
        for (int j = 0; j <= N; ++j)
        {
            fg.push_back(all[static_cast<std::size_t>(j)](t[0], t[1]));
            gh.push_back(all[static_cast<std::size_t>(j)](t[1], t[2]));
        }
        std::vector<GrElement> defects;
        for (int k = 0; k <= N; ++k)
        {
            GrElement d(t[0].signature_ptr());
            for (int i = 0; i <= k; ++i)
            {
                const auto &mi = all[static_cast<std::size_t>(i)];
                d += mi(fg[static_cast<std::size_t>(k - i)], t[2]);
                d -= mi(t[0], gh[static_cast<std::size_t>(k - i)]);
            }
            if (!d.is_zero() && (!report.first_nonzero_order || k < *report.first_nonzero_order))
            {
                report.first_nonzero_order = k;
                report.residual = d;
            }
            defects.push_back(std::move(d));
        }
        report.defects.push_back(std::move(defects));
    }
    return report;
}

MCReport mc_check(const Multilinear &m1, const Multilinear &m2, const std::vector<Triple> &triples)
{
    const Multilinear residual =
        Scalar::rational(1, 2) * gerstenhaber_bracket(m1, m1) + gerstenhaber_bracket(commutative_product(), m2);
    const AssocReport assoc = star_assoc_check({m1, m2}, triples);
    MCReport report;
    for (std::size_t t = 0; t < triples.size(); ++t)
    {
        GrElement r = residual(triples[t]);
        const GrElement &d = assoc.defects[t][2];
        report.zero = report.zero && r.is_zero();
        report.agree = report.agree && r == d;
        report.residuals.push_back(std::move(r));
        report.defects.push_back(d);
    }
    return report;
}

// ---------------------------------------------------------------- rank-2 deformation

AntisymMatrix::AntisymMatrix(std::vector<std::vector<Scalar>> c) : m_c(std::move(c))
{
    for (const auto &row : m_c)
        if (row.size() != m_c.size())
            throw Error(ErrorCode::InvalidArgument, "the deformation matrix must be square");
    for (std::size_t j = 0; j < m_c.size(); ++j)
        for (std::size_t k = j; k < m_c.size(); ++k)
            if (!(m_c[j][k] + m_c[k][j]).is_zero())
                throw Error(ErrorCode::NotAntisymmetric, "c_" + std::to_string(j + 1) + std::to_string(k + 1) +
                                                             " != -c_" + std::to_string(k + 1) + std::to_string(j + 1));
}

Scalar AntisymMatrix::pair(const GroupElement &alpha, const GroupElement &beta) const
{
    if (alpha.rank() != rank() || beta.rank() != rank())
        throw Error(ErrorCode::InvalidArgument, "group elements and matrix have different ranks");
    Scalar s;
    for (std::size_t j = 0; j < rank(); ++j)
        for (std::size_t k = 0; k < rank(); ++k)
            if (alpha[j] != 0 && beta[k] != 0 && !m_c[j][k].is_zero())
                s += Scalar(static_cast<long>(alpha[j] * beta[k])) * m_c[j][k];
    return s;
}

Multilinear rank2_cochain(const SignaturePtr &sig, const AntisymMatrix &c)
{
    if (c.rank() != static_cast<std::size_t>(sig->rank))
        throw Error(ErrorCode::InvalidArgument, "the deformation matrix must be r x r");
    return Multilinear::from([sig, c](const GrElement &f, const GrElement &g) {
        GrElement out(sig);
        for (const auto &[m1, c1] : f.terms())
            for (const auto &[m2, c2] : g.terms())
            {
                const Scalar w = c.pair(m1.gamma(0), m2.gamma(0));
                if (w.is_zero())
                    continue;
                Monomial m = m1.times(m2);
                m.set_a(0, m.a(0) + 1);
                out.add_term(m, w * c1 * c2);
            }
        return out;
    });
}

Multilinear rank2_cochain2(const SignaturePtr &sig, const AntisymMatrix &c)
{
    if (c.rank() != static_cast<std::size_t>(sig->rank))
        throw Error(ErrorCode::InvalidArgument, "the deformation matrix must be r x r");
    return Multilinear::from([sig, c](const GrElement &f, const GrElement &g) {
        GrElement out(sig);
        for (const auto &[m1, c1] : f.terms())
            for (const auto &[m2, c2] : g.terms())
            {
                const Scalar w = c.pair(m1.gamma(0), m2.gamma(0));
                if (w.is_zero())
                    continue;
                Monomial m = m1.times(m2);
                m.set_a(0, m.a(0) + 2);
                out.add_term(m, w * w * Scalar::rational(1, 2) * c1 * c2);
            }
        return out;
    });
}

Rank2Product rank2_deform(const SignaturePtr &sig, const AntisymMatrix &c, const GroupElement &alpha,
                          const GroupElement &beta)
{
    const Multilinear m1 = rank2_cochain(sig, c);
    const GrElement fa = GrElement::power(sig, 0, alpha);
    const GrElement fb = GrElement::power(sig, 0, beta);
    const Scalar h = Scalar::hbar(1);
    Rank2Product r{gr_mul(fa, fb) + m1(fa, fb) * h, gr_mul(fb, fa) + m1(fb, fa) * h, GrElement(sig)};
    r.commutator = r.forward - r.backward;
    return r;
}

// ---------------------------------------------------------------- t-shift deformation

TShiftReport t_shift_deform(const SignaturePtr &sig, std::optional<int> N)
{
    if (!sig->hbar_mode())
        throw Error(ErrorCode::HbarModeOff, "the t-shift deformation needs hbar mode");
    AlgebraSignature deformed = *sig;
    deformed.hbar_order = N.value_or(*sig->hbar_order);
    deformed.e_rule = ERule::TShift;
    TShiftReport report;
    report.deformed = make_signature(std::move(deformed));
    for (int i = 0; i < sig->n; ++i)
    {
        Monomial e(sig->n, sig->rank);
        e.set_a(i, 1);
        Element rule = diff_function(report.deformed, i, e);
        Element first = hbar_coefficient(rule, 1);
        report.nontrivial = report.nontrivial || !first.is_zero();
        report.rules.push_back(std::move(rule));
        report.order_one.push_back(std::move(first));
    }
    return report;
}

Element hbar_coefficient(const Element &e, int k)
{
    Element out(e.signature_ptr());
    for (const auto &[m, c] : e.terms())
        out.add_term(m, Scalar(c.coeff(static_cast<std::size_t>(k))));
    return out;
}

GrElement hbar_coefficient(const GrElement &e, int k)
{
    GrElement out(e.signature_ptr());
    for (const auto &[m, c] : e.terms())
        out.add_term(m, Scalar(c.coeff(static_cast<std::size_t>(k))));
    return out;
}

} // namespace expweyl
