#include "expweyl/serialize.hpp"

#include <fstream>
#include <set>

#include "expweyl/errors.hpp"
#include "expweyl/text.hpp"

namespace expweyl
{

json to_json(const AlgebraSignature &sig)
{
    json j;
    j["n"] = sig.n;
    j["rank"] = sig.rank;
    j["p"] = sig.p;
    json t = json::array();
    for (const auto &ti : sig.t)
        t.push_back(to_json(ti));
    j["t"] = t;
    j["generator_names"] = sig.generator_names;
    j["hbar_order"] = sig.hbar_order ? json(*sig.hbar_order) : json(nullptr);
    j["e_rule"] = sig.e_rule == ERule::Classical ? "classical" : "tshift";
    return j;
}

namespace
{

template <typename T>
T field(const json &j, const char *key, T fallback)
{
    if (!j.contains(key) || j[key].is_null())
        return fallback;
    try
    {
        return j[key].get<T>();
    }
    catch (const json::exception &e)
    {
        throw Error(ErrorCode::InvalidConfig, std::string("field '") + key + "': " + e.what());
    }
}

void read_signature_fields(const json &j, AlgebraSignature &sig)
{
    sig.n = field(j, "n", 1);
    sig.rank = field(j, "rank", 1);
    if (sig.n < 1 || sig.rank < 1)
        throw Error(ErrorCode::InvalidConfig, "n and rank must be >= 1");
    sig.p = field(j, "p", std::vector<int>(static_cast<std::size_t>(sig.n), 1));
    const auto t = field(j, "t", std::vector<std::vector<std::int64_t>>());
    if (t.empty())
        sig.t.assign(static_cast<std::size_t>(sig.n), GroupElement(static_cast<std::size_t>(sig.rank)));
    else
        for (const auto &coords : t)
            sig.t.emplace_back(coords);
    sig.generator_names = field(j, "generator_names", std::vector<std::string>());
    if (j.contains("hbar_order") && !j["hbar_order"].is_null())
        sig.hbar_order = field(j, "hbar_order", 0);
    const auto rule = field(j, "e_rule", std::string("classical"));
    if (rule == "classical")
        sig.e_rule = ERule::Classical;
    else if (rule == "tshift")
        sig.e_rule = ERule::TShift;
    else
        throw Error(ErrorCode::InvalidConfig, "e_rule must be 'classical' or 'tshift'");
}

const std::set<std::string> kSignatureKeys{"n", "rank", "p", "t", "generator_names", "hbar_order", "e_rule"};

} // namespace

SignaturePtr signature_from_json(const json &j)
{
    if (!j.is_object())
        throw Error(ErrorCode::InvalidConfig, "a signature must be a JSON object");
    for (const auto &[k, v] : j.items())
        if (!kSignatureKeys.count(k))
            throw Error(ErrorCode::InvalidConfig, "unknown signature field '" + k + "'");
    AlgebraSignature sig;
    read_signature_fields(j, sig);
    return make_signature(std::move(sig));
}

json to_json(const GroupElement &g)
{
    return g.coords();
}

std::string serialize(const Scalar &s, const AlgebraSignature &sig)
{
    return s.serialize(sig.generator_names);
}

namespace
{

json monomial_record(const Monomial &m, const Scalar &c, const AlgebraSignature &sig, const char *dkey)
{
    json r;
    r["coeff"] = serialize(c, sig);
    json a = json::array(), beta = json::array(), gamma = json::array(), d = json::array();
    for (int i = 0; i < m.n(); ++i)
    {
        a.push_back(m.a(i));
        beta.push_back(m.beta(i).coords());
        gamma.push_back(m.gamma(i).coords());
        d.push_back(m.d(i));
    }
    r["a"] = a;
    r["beta"] = beta;
    r["gamma"] = gamma;
    r[dkey] = d;
    return r;
}

std::pair<Monomial, Scalar> read_record(const SignaturePtr &sig, const json &r, const char *dkey)
{
    try
    {
        Monomial m(sig->n, sig->rank);
        const auto a = r.at("a").get<std::vector<std::int64_t>>();
        const auto beta = r.at("beta").get<std::vector<std::vector<std::int64_t>>>();
        const auto gamma = r.at("gamma").get<std::vector<std::vector<std::int64_t>>>();
        const auto d = r.at(dkey).get<std::vector<std::int64_t>>();
        const auto n = static_cast<std::size_t>(sig->n);
        if (a.size() != n || beta.size() != n || gamma.size() != n || d.size() != n)
            throw Error(ErrorCode::SignatureMismatch, "record does not have one entry per variable");
        for (std::size_t i = 0; i < n; ++i)
        {
            if (beta[i].size() != static_cast<std::size_t>(sig->rank) || gamma[i].size() != static_cast<std::size_t>(sig->rank))
                throw Error(ErrorCode::SignatureMismatch, "group exponent has the wrong rank");
            const int v = static_cast<int>(i);
            m.set_a(v, a[i]);
            m.set_beta(v, GroupElement(beta[i]));
            m.set_gamma(v, GroupElement(gamma[i]));
            m.set_d(v, d[i]);
        }
        return {m, parse_scalar(sig, r.at("coeff").get<std::string>())};
    }
    catch (const json::exception &e)
    {
        throw Error(ErrorCode::SyntaxError, std::string("malformed element record: ") + e.what());
    }
}

} // namespace

json to_json(const Element &e)
{
    json out = json::array();
    for (const auto &[m, c] : e.terms())
        out.push_back(monomial_record(m, c, e.signature(), "d"));
    return out;
}

Element element_from_json(const SignaturePtr &sig, const json &j)
{
    if (!j.is_array())
        throw Error(ErrorCode::SyntaxError, "an element must be a JSON array of records");
    Element e(sig);
    for (const auto &r : j)
    {
        const auto [m, c] = read_record(sig, r, "d");
        e.add_term(m, c);
    }
    return e;
}

json to_json(const GrElement &u)
{
    json out = json::array();
    for (const auto &[m, c] : u.terms())
        out.push_back(monomial_record(m, c, u.signature(), "y"));
    return out;
}

GrElement symbol_from_json(const SignaturePtr &sig, const json &j)
{
    if (!j.is_array())
        throw Error(ErrorCode::SyntaxError, "a symbol must be a JSON array of records");
    GrElement u(sig);
    for (const auto &r : j)
    {
        const auto [m, c] = read_record(sig, r, "y");
        u.add_term(m, c);
    }
    return u;
}

SessionConfig config_from_json(const json &j)
{
    if (!j.is_object())
        throw Error(ErrorCode::InvalidConfig, "the configuration must be a JSON object");
    json sig = json::object();
    SessionConfig cfg;
    for (const auto &[k, v] : j.items())
    {
        if (kSignatureKeys.count(k))
            sig[k] = v;
        else if (k == "format")
        {
            const auto f = field(j, "format", std::string("text"));
            if (f == "text")
                cfg.format = OutputFormat::Text;
            else if (f == "structured")
                cfg.format = OutputFormat::Structured;
            else
                throw Error(ErrorCode::InvalidConfig, "format must be 'text' or 'structured'");
        }
        else if (k == "seed")
            cfg.seed = field<std::uint64_t>(j, "seed", 1);
        else
            throw Error(ErrorCode::InvalidConfig, "unknown configuration field '" + k + "'");
    }
    cfg.signature = signature_from_json(sig);
    return cfg;
}

SessionConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidConfig, "cannot read configuration file '" + path + "'");
    try
    {
        return config_from_json(json::parse(in));
    }
    catch (const json::parse_error &e)
    {
        throw Error(ErrorCode::InvalidConfig, std::string("configuration is not valid JSON: ") + e.what());
    }
}

} // namespace expweyl
