#pragma once

#include <string>
#include <string_view>

#include "homposet/finite_ring.hpp"

namespace homposet {

// Ring descriptions are colon-separated prefix terms. Each constructor has a
// fixed arity, so nesting needs no brackets:
//
//   zmod:N                 Z/N
//   gf:P:K                 field of order P^K
//   product:A:B            A x B
//   matrix:K:A             K x K matrices over the field A
//   quot:A:gens=g1,g2,...  A modulo the two-sided ideal generated by the gi
//
// Element indices in gens use the carrier encoding of A. Whitespace around
// tokens is ignored; the printer emits none.

/// Throws ParseError for malformed text or invalid constructor arguments,
/// CapExceeded when a table would exceed the caps.
RingPtr parse_description(std::string_view text, const Limits& limits = {});

/// Canonical form; parse_description(describe(R)) has the same tables as R
/// for every constructor-built ring. Raw tables print as raw:<label>.
std::string describe(const FiniteRing& ring);

}  // namespace homposet
