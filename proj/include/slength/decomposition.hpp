#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slength/ideal.hpp"

namespace slength {

// One Stanley space u*K[Z]: the monomials u*w with supp(w) inside Z.
struct StanleySpace {
  Monomial u;
  VarSet z = 0;

  bool operator==(const StanleySpace&) const = default;
};

bool space_member(const StanleySpace& s, const Monomial& m);

std::string to_string(const StanleySpace& s);

// A claimed Stanley decomposition of a module: the spaces should partition
// the monomials of J \ I.  Nothing is checked on construction; verify()
// decides.
struct StanleyDecomposition {
  QuotientModule module;
  std::vector<StanleySpace> spaces;
};

// Sorts spaces by (u canonical order, then Z) for stable comparisons.
void canonicalize(StanleyDecomposition& d);

// Finite verification window: caps g with g_j >= 1 + the largest exponent of
// x_j over G(I), G(J) and the space monomials u_i.  Membership patterns are
// periodic past the caps, so checking the box [0, g] decides the whole ring;
// the +1 headroom is what distinguishes a free direction from a pinned one.
struct TruncationBox {
  std::vector<int> cap;

  long long point_count() const;
};

TruncationBox truncation_box(const StanleyDecomposition& d);

enum class VerifyFault { kNone, kUncovered, kDoublyCovered, kOutOfModule };

std::string to_string(VerifyFault f);

struct VerifyResult {
  bool ok = false;
  VerifyFault fault = VerifyFault::kNone;
  // Lex-smallest failing monomial when not ok.
  std::optional<Monomial> counterexample;

  explicit operator bool() const { return ok; }
};

VerifyResult verify(const StanleyDecomposition& d);
VerifyResult verify(const StanleyDecomposition& d, const TruncationBox& box);

struct Measure {
  int length = 0;
  int sdepth = 0;
};

// Space count and min |Z_i|.  Errors on an empty decomposition.
Measure measure(const StanleyDecomposition& d);

// For a squarefree module: drops spaces whose monomial is not squarefree and
// enlarges each surviving Z to include supp(u).  On a verified input the
// result verifies and is no longer.
StanleyDecomposition squarefree_normalize(const StanleyDecomposition& d);

}  // namespace slength
