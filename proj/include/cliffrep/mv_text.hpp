#pragma once

#include <string>
#include <string_view>

#include "cliffrep/multivector.hpp"

namespace cliffrep {

// Grammar: terms such as `3/2*e1`, `-1*e12`, `e12*eps1`, `5` joined by + or -.
// `eN...` names positive generators, `epsN...` negative ones (numbered from 1).
// Indices are single digits when the count is at most 9, otherwise `_`-separated.
Multivector parse_multivector(std::string_view text, const Signature& sig);

std::string format_blade(const Signature& sig, BladeMask mask);
std::string format_multivector(const Multivector& a);

}  // namespace cliffrep
