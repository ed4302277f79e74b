#pragma once

#include <string>

#include "sgmm/ideal.hpp"
#include "sgmm/semigroup.hpp"

namespace sgmm {

/// Parses "a,b,c", "<a,b,c>" or the angle-bracket form with U+27E8/27E9.
/// Throws ParseError / NonCoprime / EmptyGenerators.
NumericalSemigroup parse_semigroup(const std::string& text);

/// Compositional ideal specs:
///   unit | maximal | canonical | conductor | rk | rbar
///   gens:a,b,c         generated ideal (integers, possibly negative)
///   closure:a          integral closure of the principal ideal (a)
///   dual:<spec>
///   power:<spec>^n
///   product:<spec>*<spec>
///   sum:<spec>+<spec>
///   shift:<spec>@z
/// "conductor" is the conductor of R in R[K], "rk" the ring R[K] as an ideal,
/// "rbar" the normalization (all of N) as an ideal. Throws ParseError.
SemigroupIdeal parse_ideal_spec(const NumericalSemigroup& S, const std::string& text);

}  // namespace sgmm
