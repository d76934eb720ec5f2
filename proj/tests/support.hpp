#pragma once

#include <string>

#include "expweyl/text.hpp"

namespace expweyl::testing
{

inline SignaturePtr weyl(int n = 1)
{
    return make_signature(n, 1, 1, GroupElement(1));
}

// n = 1, rank 2, p = 2, t = g_1: every symbol kind is nontrivial.
inline SignaturePtr mixed()
{
    return make_signature(1, 2, 2, GroupElement::integer(2, 1));
}

inline Element el(const SignaturePtr &sig, const std::string &src)
{
    return parse_element(sig, src);
}

inline GrElement sym(const SignaturePtr &sig, const std::string &src)
{
    return parse_symbol(sig, src);
}

} // namespace expweyl::testing
