#pragma once

#include <vector>

#include "slength/monomial.hpp"

namespace slength {

// A monomial ideal held in canonical form: the minimal generating set,
// sorted by (degree, lex).  The zero ideal has no generators; the unit ideal
// is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  // Minimalizes: drops generators divisible by another, dedupes, sorts.
  MonomialIdeal(int n, std::vector<Monomial> generators);

  static MonomialIdeal zero(int n);
  static MonomialIdeal unit(int n);

  int vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_squarefree() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(int n, std::vector<Monomial> generators);

bool contains(const MonomialIdeal& ideal, const Monomial& m);

// (I : v) = { m : v*m in I }.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v);

MonomialIdeal radical(const MonomialIdeal& ideal);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

// u*I, the ideal generated by u*g over g in G(I).
MonomialIdeal scale(const MonomialIdeal& ideal, const Monomial& u);

// Ordinary power I^k, k >= 1.
MonomialIdeal power(const MonomialIdeal& ideal, int k);

// Minimal primes of a squarefree ideal, each a variable set (the minimal
// transversals of the generator supports).  Requires nonzero, proper, and
// squarefree input.
std::vector<VarSet> minimal_primes(const MonomialIdeal& ideal);

// k-th symbolic power of a squarefree ideal: the intersection of P^k over
// the minimal primes P.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int k);

// alpha[j]: largest e with x_j^e dividing every generator (the minimum
// exponent of x_j over G); beta[j]: the maximum exponent.  1-based access
// via vectors of length n (index j-1).  Requires a nonzero ideal.
struct IdealStats {
  std::vector<int> alpha;
  std::vector<int> beta;
};

IdealStats stats(const MonomialIdeal& ideal);

// Generators pairwise coprime (a monomial complete intersection).
bool is_complete_intersection(const MonomialIdeal& ideal);

// The quotient J/I of monomial ideals with I contained in J and I != J, a
// K-vector space spanned by the monomials of J not in I.  The two stock
// shapes: a plain ideal is J/0; a cyclic quotient S/I is unit/I.
class QuotientModule {
 public:
  QuotientModule(MonomialIdeal j, MonomialIdeal i);

  static QuotientModule plain_ideal(MonomialIdeal i);
  static QuotientModule cyclic(MonomialIdeal i);

  const MonomialIdeal& upper() const { return j_; }
  const MonomialIdeal& lower() const { return i_; }
  int vars() const { return j_.vars(); }

  bool is_plain_ideal() const { return i_.is_zero(); }
  bool is_squarefree() const { return j_.is_squarefree() && i_.is_squarefree(); }

  // Membership in J \ I.
  bool member(const Monomial& m) const;

  bool operator==(const QuotientModule&) const = default;

 private:
  MonomialIdeal j_;
  MonomialIdeal i_;
};

}  // namespace slength
