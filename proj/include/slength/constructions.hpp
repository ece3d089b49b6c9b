#pragma once

#include "slength/decomposition.hpp"

namespace slength {

// Constructive decompositions with proven length bounds.  Each returns a
// decomposition of the stated module; tests re-verify every output.

// Janet-style recursion slicing on the last variable: length is at most the
// product of (beta_k - alpha_k + 1) over all variables except the first.
// With pick_smallest_range the recursion slices the variable of smallest
// exponent range instead (ties to the largest index), which skips the
// largest factor of the product.  Requires a nonzero ideal.
StanleyDecomposition janet(const MonomialIdeal& ideal, bool pick_smallest_range = false);

// Complete intersections, degrees d_1 <= ... <= d_m: length is at most
// 1 + d_1 + d_1*d_2 + ... + d_1*...*d_{m-1} (and exactly 1 + d_1 for m = 2).
StanleyDecomposition ci_decomposition(const MonomialIdeal& ideal);

// The explicit list for (x1^d1, x2^d2, x3^d3) in exactly three variables:
// the full corner space plus three strip families, 1 + d1 + d2 + d3 spaces
// in all.  Not minimal in general.
StanleyDecomposition ci3_decomposition(const MonomialIdeal& ideal);

// S/(u) as deg(u) spaces.  Requires u != 1.
StanleyDecomposition principal_quotient(const Monomial& u);

// A variable-generated prime (x_{v1}, ..., x_{vm}) as m spaces, the i-th
// omitting the earlier generators' variables from Z.
StanleyDecomposition prime_decomposition(const MonomialIdeal& ideal);

struct FormulaResult {
  int value = 0;
  StanleyDecomposition witness;
};

// Exact slength for ideals in two variables: with generators in staircase
// order (a_i strictly decreasing, b_i strictly increasing), the value is
// min_i {a_i + b_i - a_m - b_1} + 1, witnessed by a corner space plus column
// and row strips.
FormulaResult formula_n2(const MonomialIdeal& ideal);

// Exact slength for two-generator ideals: min(deg u1, deg u2) - deg gcd + 1,
// witnessed by scaling the complete-intersection decomposition of (I : gcd).
FormulaResult formula_m2(const MonomialIdeal& ideal);

}  // namespace slength
