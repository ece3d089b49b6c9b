#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slength/decomposition.hpp"

namespace slength {

// The faces F of the ground set with x_F in J \ I, for a squarefree module.
// Minimum interval partitions of this family compute slength exactly.
struct RelativeComplex {
  int n = 0;
  std::vector<VarSet> faces;  // sorted by bitmask value
};

RelativeComplex relative_complex(const QuotientModule& q);

// Inclusion-maximal faces.  Errors on an empty complex.
std::vector<VarSet> facets(const RelativeComplex& complex);

// The finite window for arbitrary modules: caps g_j = 1 + beta_j over
// G(I) u G(J), and the lattice points c in [0, g] with x^c in J \ I.
// An admissible interval pins a coordinate or frees it up to the cap;
// partitions into admissible intervals induce verified decompositions.
struct CharacteristicGrid {
  std::vector<int> cap;
  std::vector<std::vector<int>> points;  // sorted lex
};

CharacteristicGrid characteristic_grid(const QuotientModule& q);

struct SolveBudget {
  int max_vars = 20;
  std::size_t max_faces = 5000;
  std::size_t max_grid_points = 40000;
};

struct SolveOptions {
  SolveBudget budget;
  int threads = 1;
  // Sequential search with stable candidate order; guarantees a reproducible
  // witness, not just a reproducible value.
  bool deterministic = true;
  // Branch on every valid interval top.  Switching this off restricts the
  // search to inclusion-maximal tops, which is faster but can overestimate:
  // on (x1^3, x1*x2^2, x2^4) the minimum needs a non-maximal interval at the
  // very first cell.  Only the exhaustive search certifies exact values.
  bool exhaustive_tops = true;
};

struct Bound {
  int value = 0;
  std::string method;
};

struct SlengthReport {
  Bound lower;
  Bound upper;
  bool exact = false;
  std::optional<StanleyDecomposition> witness;
  std::vector<std::string> notes;
  std::map<std::string, double> timings_ms;
};

// Exact slength of a squarefree module by branch-and-bound over interval
// partitions of the relative complex.  The returned report has lower ==
// upper and a witness.
SlengthReport exact_slength_squarefree(const QuotientModule& q, const SolveOptions& options = {});

// Minimum length over partitions whose interval tops all have at least s
// elements; nullopt when no such partition exists (s exceeds sdepth).
std::optional<SlengthReport> constrained_min_length(const QuotientModule& q, int s,
                                                    const SolveOptions& options = {});

struct SdepthResult {
  int sdepth = 0;
  StanleyDecomposition witness;
};

// Largest s for which constrained_min_length is feasible, with a witness
// realizing it.  Squarefree modules only.
SdepthResult sdepth_squarefree(const QuotientModule& q, const SolveOptions& options = {});

struct GridResult {
  int value = 0;
  StanleyDecomposition witness;
};

// Minimum number of admissible intervals partitioning the characteristic
// grid.  Always an upper bound for slength; exact for squarefree modules.
GridResult grid_minimum(const QuotientModule& q, const SolveOptions& options = {});

enum class OracleMode { kSquarefree, kGrid };

// Independent exhaustive minimum (memoized enumeration of all interval
// partitions, no shared search machinery).  Deliberately small: squarefree
// up to n = 4, grids up to 2 variables and exponents up to 5.
int oracle_slength(const QuotientModule& q, OracleMode mode);

// Assembles lower and upper bounds for slength(J/I):
//   lower: generator count for plain ideals; exact values on the
//          polarization and on the radical pair when they fit the budget;
//   upper: two-variable and two-generator formulas (exact), linear
//          quotients, Janet, complete-intersection recursion, and the grid
//          optimum when desk-sized.
// exact is set when the bounds meet; the witness realizes the upper bound.
SlengthReport slength_report(const QuotientModule& q, const SolveOptions& options = {});

struct ConjectureReport {
  int d1 = 0, d2 = 0, d3 = 0, n = 0;
  int exact_value = 0;
  int conjectured_value = 0;  // min(d1 + d1*d2, n) + 1
  bool matches = false;
};

// Exact slength of (x1..x_{d1}, x_{d1+1}..x_{d1+d2}, x_{d1+d2+1}..x_n)
// against the conjectured closed form.  Records the comparison; asserts
// nothing.  Requires 1 <= d1 <= d2 <= d3 and n >= d1 + d2 + d3.
ConjectureReport conjecture_experiment(int d1, int d2, int d3, int n,
                                       const SolveOptions& options = {});

}  // namespace slength
