#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "expweyl/grading.hpp"

namespace expweyl
{

using json = nlohmann::ordered_json;

// {"n", "rank", "p", "t", "generator_names", "hbar_order", "e_rule"}.
json to_json(const AlgebraSignature &sig);
// Missing fields take the defaults n = 1, rank = 1, p_i = 1, t_i = 0.
// Throws InvalidConfig.
SignaturePtr signature_from_json(const json &j);

json to_json(const GroupElement &g);
// Scalars travel as "(num)/(den)" strings, hbar terms appended.
std::string serialize(const Scalar &s, const AlgebraSignature &sig);

// Array of {"coeff", "a", "beta", "gamma", "d"} records in term order.
json to_json(const Element &e);
Element element_from_json(const SignaturePtr &sig, const json &j);
// Same records with "y" in place of "d".
json to_json(const GrElement &u);
GrElement symbol_from_json(const SignaturePtr &sig, const json &j);

enum class OutputFormat
{
    Text,
    Structured,
};

struct SessionConfig
{
    SignaturePtr signature;
    OutputFormat format = OutputFormat::Text;
    std::uint64_t seed = 1;
};

// Accepts the signature fields plus "format" ("text" | "structured") and
// "seed". Unknown keys raise InvalidConfig.
SessionConfig config_from_json(const json &j);
SessionConfig load_config(const std::string &path);

} // namespace expweyl
