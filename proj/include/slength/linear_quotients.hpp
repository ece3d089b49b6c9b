#pragma once

#include <optional>
#include <vector>

#include "slength/decomposition.hpp"

namespace slength {

struct LinearOrderCheck {
  bool ok = false;
  // 1-based position of the first generator whose prefix colon is not
  // variable-generated; 0 when ok.
  int failing_index = 0;
};

// Does the given ordering of G(I) have linear quotients, i.e. is every
// prefix colon (u_1,...,u_{j-1}) : u_j generated by variables?  The ordering
// must be a permutation of the minimal generators.
LinearOrderCheck is_linear_order(const MonomialIdeal& ideal,
                                 const std::vector<Monomial>& ordering);

// Backtracking search for a linear-quotient order; returns the
// lexicographically first one under the canonical generator order, or
// nullopt.  Worst case m! branches, so inputs are capped at 12 generators.
std::optional<std::vector<Monomial>> find_linear_order(const MonomialIdeal& ideal);

// The length-m decomposition attached to a linear-quotient order:
// Z_j = variables not in the j-th prefix colon.  Errors (naming the failing
// prefix) when the order does not have linear quotients.
StanleyDecomposition decomposition_from_order(const MonomialIdeal& ideal,
                                              const std::vector<Monomial>& ordering);

// Checks every prefix ideal against its induced partial decomposition; this
// holds exactly when the order has linear quotients, which the tests
// exercise as a property.
bool prefix_decomposition_check(const MonomialIdeal& ideal,
                                const std::vector<Monomial>& ordering);

}  // namespace slength
