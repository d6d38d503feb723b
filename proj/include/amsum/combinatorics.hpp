#pragma once

#include "amsum/rational.hpp"

namespace amsum {

/// Exact n!; n < 0 is a domain error. Small arguments come from a table
/// precomputed immutably on first use (bound configurable through the
/// AMSUM_FACT_CACHE environment variable), larger ones are computed directly,
/// so concurrent callers never share mutable state.
BigInt factorial(long n);

/// Upper bound (inclusive) of the precomputed factorial table.
long factorial_cache_bound();

/// Standard binomial coefficient; 0 outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// Binomial coefficient extended to negative upper argument:
///   g >= p >= 0        -> g! / ((g-p)! p!)
///   0 <= g < p         -> 0
///   g < 0, p >= 0      -> (-1)^p (p-g-1)! / (p! (-g-1)!)
///   p < 0              -> 0
BigInt extended_binomial(long g, long p);

/// Rising factorial (y)_p = y (y+1) ... (y+p-1); (y)_0 = 1.
Rational pochhammer(const Rational& y, long p);

}  // namespace amsum
