#pragma once

#include <string>

#include "talex/scalar_traits.hpp"

namespace talex {

// Parses a coefficient-field specifier: "Q" (rationals), "Qi" (gaussian
// rationals), or "Fp:<prime>" (prime field).  The format is the inverse of
// InvolutiveField::spec().  Throws InputError naming the offending text.
InvolutiveField parse_field_spec(const std::string& spec);

} // namespace talex
