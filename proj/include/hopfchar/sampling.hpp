#pragma once

#include <random>

#include "hopfchar/charalg.hpp"

namespace hopfchar {

using Rng = std::mt19937_64;

/// Uniform p/q with p in [-max_num, max_num], q in [1, max_den].
Rational random_rational(Rng& rng, int max_num = 9, int max_den = 9);

/// Uniform p/q with |p/q| <= 1 (q in [1, max_den], p in [-q, q]).
Rational random_unit_rational(Rng& rng, int max_den = 9);

/// Random rational-valued functional on all basis elements of degree <= cutoff.
TruncatedFunctional random_functional(HopfPtr H, const Degree& cutoff, Rng& rng);

/// Random rational CK character: random values on trees, extended
/// multiplicatively to forests (value on the empty forest is 1).
TruncatedFunctional random_ck_character(HopfPtr ck, const Degree& cutoff, Rng& rng);

/// Random rational CK infinitesimal character: random values on single trees,
/// zero on the empty forest and on proper forests.
TruncatedFunctional random_ck_infinitesimal(HopfPtr ck, const Degree& cutoff, Rng& rng);

}  // namespace hopfchar
