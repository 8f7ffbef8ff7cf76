#pragma once

#include <string>
#include <string_view>

#include "uqosp/superalg/element.hpp"

namespace uqosp {

/// "k_a^2 * k_a0^-1 * E(a) * E(d-2a)"; the empty monomial is "1".
std::string monomial_to_string(const Monomial& m);

/// Parses the text form produced by Element::to_string: sums of products of
/// scalars (q, s_a, s_b, integers), k_d, k_a, k_a0 (with integer powers) and
/// generators E(a), E(-a), E(d-2a), E(-d+2a).
Element parse_element(std::string_view text);

}  // namespace uqosp
