#pragma once

// Shared generators and brute-force oracles for the test binaries.  The
// oracles recompute everything from monomial membership alone so the tests
// do not trust the code paths they check.

#include <algorithm>
#include <random>
#include <vector>

#include "slength/decomposition.hpp"
#include "slength/ideal.hpp"
#include "slength/monomial.hpp"

namespace slength::testing {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

inline Monomial random_monomial(Rng& rng, int n, int max_exp, bool nonunit = true) {
  for (;;) {
    std::vector<int> e(n);
    for (int& x : e) x = pick(rng, 0, max_exp);
    Monomial m(std::move(e));
    if (!nonunit || !m.is_one()) return m;
  }
}

inline MonomialIdeal random_ideal(Rng& rng, int n, int max_gens, int max_exp) {
  int count = pick(rng, 1, max_gens);
  std::vector<Monomial> gens;
  for (int i = 0; i < count; ++i) gens.push_back(random_monomial(rng, n, max_exp));
  return minimalize(n, std::move(gens));
}

inline MonomialIdeal random_squarefree_ideal(Rng& rng, int n, int max_gens) {
  return random_ideal(rng, n, max_gens, 1);
}

// A random squarefree pair I strictly inside J; I may be zero.
inline QuotientModule random_squarefree_module(Rng& rng, int n, int max_gens) {
  for (;;) {
    MonomialIdeal j = random_squarefree_ideal(rng, n, max_gens);
    if (pick(rng, 0, 2) == 0) return QuotientModule(j, MonomialIdeal::zero(n));
    std::vector<Monomial> lower;
    for (const Monomial& g : j.generators()) {
      std::vector<int> outside;
      for (int v = 1; v <= n; ++v)
        if (!varset_contains(g.support(), v)) outside.push_back(v);
      if (outside.empty()) continue;
      int v = outside[pick(rng, 0, static_cast<int>(outside.size()) - 1)];
      lower.push_back(product(g, Monomial::variable(v, n)));
    }
    MonomialIdeal i = minimalize(n, std::move(lower));
    i = MonomialIdeal(n, std::vector<Monomial>(i.generators().begin(),
                                               i.generators().begin() +
                                                   pick(rng, 0, i.generator_count())));
    if (i.is_zero()) i = MonomialIdeal::zero(n);
    if (!(i == j)) return QuotientModule(j, i);
  }
}

// All exponent vectors in the box [0, caps].
inline std::vector<Monomial> box_monomials(const std::vector<int>& caps) {
  std::vector<Monomial> out;
  std::vector<int> e(caps.size(), 0);
  for (;;) {
    out.push_back(Monomial(e));
    int j = static_cast<int>(caps.size()) - 1;
    while (j >= 0 && e[j] == caps[j]) e[j--] = 0;
    if (j < 0) return out;
    ++e[j];
  }
}

inline std::vector<int> verify_caps(const MonomialIdeal& a, int pad = 1) {
  std::vector<int> caps(a.vars(), pad);
  for (const Monomial& g : a.generators())
    for (int j = 1; j <= a.vars(); ++j)
      caps[j - 1] = std::max(caps[j - 1], g.exponent(j) + pad);
  return caps;
}

inline std::vector<int> join_caps(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::max(a[i], b[i]);
  return a;
}

// Membership straight from the definition: some generator divides m.
inline bool member_oracle(const MonomialIdeal& ideal, const Monomial& m) {
  for (const Monomial& g : ideal.generators())
    if (divides(g, m)) return true;
  return false;
}

// Splits one space of a verified decomposition into two equal pieces:
// u K[Z] is the disjoint union of u K[Z \ j] and u x_j K[Z] for any j in Z.
// Verification is preserved, so repeated splits produce messy but valid
// decompositions for property tests.
inline bool split_space(Rng& rng, StanleyDecomposition& d) {
  std::vector<int> candidates;
  for (std::size_t i = 0; i < d.spaces.size(); ++i)
    if (d.spaces[i].z != 0) candidates.push_back(static_cast<int>(i));
  if (candidates.empty()) return false;
  int i = candidates[pick(rng, 0, static_cast<int>(candidates.size()) - 1)];
  StanleySpace s = d.spaces[i];
  std::vector<int> zs = varset_elements(s.z);
  int j = zs[pick(rng, 0, static_cast<int>(zs.size()) - 1)];
  d.spaces[i] = {s.u, s.z & ~var_bit(j)};
  d.spaces.push_back({product(s.u, Monomial::variable(j, s.u.vars())), s.z});
  return true;
}

}  // namespace slength::testing
