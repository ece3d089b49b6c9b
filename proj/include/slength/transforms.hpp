#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "slength/decomposition.hpp"

namespace slength {

// All transforms take a decomposition of one module and return a
// decomposition of a derived module, preserving or reducing length.  They
// trust their input; feeding an unverified decomposition yields an
// unverified result.

// u*D for the ideal u*I.  Requires a plain-ideal module.
StanleyDecomposition scale_decomposition(const StanleyDecomposition& d, const Monomial& u);

// Decomposition of (I : v) from one of I, one variable occurrence at a time:
// spaces with x | u keep Z and divide u by x; spaces with x free in Z keep
// everything; the rest are dropped.  Returns nullopt when v lies in I (the
// colon is the unit ideal and no decomposition is needed).  Length never
// grows.  Requires a plain-ideal module.
std::optional<StanleyDecomposition> colon_transform(const StanleyDecomposition& d,
                                                    const Monomial& v);

// Decomposition of I*S[x_{n+1}] in one more variable: pads monomials and
// adjoins the new variable to every Z.  Requires a plain-ideal module.
StanleyDecomposition extend_variable(const StanleyDecomposition& d);

// Inverse of extend_variable for decompositions whose module does not use
// the last variable: drops spaces whose monomial uses it and removes it from
// every Z.  Length never grows.
StanleyDecomposition restrict_variable(const StanleyDecomposition& d);

// Variable split bookkeeping for polarization: source variable j becomes the
// block x_{j,1}, ..., x_{j,g_j}, flattened in block order.
struct PolarizationMap {
  int source_vars = 0;
  std::vector<int> split;  // split[j-1] = g_j >= 1

  int target_vars() const;
  // Flat 1-based index of x_{j,k}, 1 <= k <= g_j.
  int slot(int j, int k) const;
};

// Full polarization by the product formula: an exponent a in variable j
// becomes x_{j,1}*...*x_{j,a}.
std::pair<MonomialIdeal, PolarizationMap> polarize(const MonomialIdeal& ideal);
std::pair<QuotientModule, PolarizationMap> polarize(const QuotientModule& q);

// One polarization step with respect to variable j: generators with x_j^2 |
// u trade one x_j for the fresh variable appended as the new last variable.
MonomialIdeal polarize_step(const MonomialIdeal& ideal, int j);
QuotientModule polarize_step(const QuotientModule& q, int j);

// The matching one-step transform on decompositions: length is preserved
// exactly, which is what makes slength(J/I) >= slength of the polarization.
StanleyDecomposition polarize_decomposition_step(const StanleyDecomposition& d, int j);

// Iterates polarize_decomposition_step until the module is squarefree, then
// permutes variables into the block layout of polarize(module).  The result
// is a decomposition of polarize(d.module) of the same length as d.
StanleyDecomposition polarize_decomposition(const StanleyDecomposition& d);

// sqrt(J)/sqrt(I); nullopt when the radicals collide (no quotient remains).
std::optional<QuotientModule> radical_module(const QuotientModule& q);

// Decomposition of sqrt(J)/sqrt(I) from one of J/I: keeps the spaces whose
// pinned exponents are multiples of the top exponent a, dividing the rest
// through by a (rounded up).  Length never grows.
StanleyDecomposition radical_decomposition(const StanleyDecomposition& d);

// Pairwise intersection of spaces; the result decomposes the intersection
// module and has at most len(a)*len(b) spaces.
StanleyDecomposition intersect_decompositions(const StanleyDecomposition& a,
                                              const StanleyDecomposition& b);

// I + J = I disjoint-union (J minus I): spaces of d_i plus the pairwise
// intersection of d_j with a decomposition of S/I.  The two-argument form
// derives S/I itself when I is principal and errors otherwise.
StanleyDecomposition sum_decompositions(const StanleyDecomposition& d_i,
                                        const StanleyDecomposition& d_j,
                                        const StanleyDecomposition& d_s_mod_i);
StanleyDecomposition sum_decompositions(const StanleyDecomposition& d_i,
                                        const StanleyDecomposition& d_j);

}  // namespace slength
