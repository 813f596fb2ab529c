#pragma once

// Text form of quadratic sequences.
//
//   sequence := term (('+' | '-') term)*
//   term     := [sign] [coeff ['*']] ('n^2' | 'n') | [sign] integer
//   coeff    := integer | integer '/2' | '(' [sign] integer ['/2'] ')'
//
// Whitespace is ignored. Each power of n appears at most once; a missing
// coefficient is 1. Halves are allowed on n^2 and n only, and both must be
// halves or neither.

#include "disclab/quad_seq.hpp"

#include <string>
#include <string_view>

namespace disclab::cli {

/// Throws disclab::Error with ErrorCode::parse.
QuadSeq parse_sequence(std::string_view text);

/// Canonical form without spaces: "3n^2+7n", "(1/2)n^2+(1/2)n",
/// "(3/2)n^2-(5/2)n+1". parse_sequence(render_sequence(q)) == q.
std::string render_sequence(const QuadSeq& q);

} // namespace disclab::cli
