#pragma once

// One-line text form of witnesses, readable back by `disclab verify`:
//
//   pair seq=3n^2+n m=8 i=0 j=5 bound=j<=9
//   counterexample seq=n^2+n p=2 n=4 kind=collision m=4 i=0 j=3
//   counterexample seq=5n^2+n p=5 n=26 kind=smaller r=109

#include "disclab/discriminator.hpp"
#include "disclab/witness/types.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace disclab::cli {

struct PairLine {
    QuadSeq seq;
    PairWitness witness;
};

using WitnessLine = std::variant<PairLine, witness::Counterexample>;

std::string render_line(const QuadSeq& q, const PairWitness& w);
std::string render_line(const witness::Counterexample& cx);

/// Throws disclab::Error with ErrorCode::parse.
WitnessLine parse_line(std::string_view line);

/// Re-verifies from scratch with the core checks.
bool verify_line(const WitnessLine& line);

} // namespace disclab::cli
