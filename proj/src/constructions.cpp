#include "slength/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace slength {

namespace {

int var_degree(const Monomial& m, int j) { return m.exponent(j); }

// Slice recursion: decompose the ideal inside K[active], assuming every
// generator is supported on active.
void janet_rec(const MonomialIdeal& ideal, VarSet active, bool pick_smallest_range,
               std::vector<StanleySpace>& out) {
  const auto& gens = ideal.generators();
  if (varset_size(active) == 1) {
    // One active variable: the minimal generating set is a single power.
    out.push_back({gens[0], active});
    return;
  }
  std::vector<int> vars = varset_elements(active);
  int v = vars.back();
  if (pick_smallest_range) {
    int best_range = -1;
    for (int cand : vars) {
      int lo = var_degree(gens[0], cand), hi = lo;
      for (const Monomial& g : gens) {
        lo = std::min(lo, var_degree(g, cand));
        hi = std::max(hi, var_degree(g, cand));
      }
      if (best_range < 0 || hi - lo <= best_range) {
        best_range = hi - lo;
        v = cand;  // ties resolve to the largest index
      }
    }
  }
  int alpha = var_degree(gens[0], v), beta = alpha;
  for (const Monomial& g : gens) {
    alpha = std::min(alpha, var_degree(g, v));
    beta = std::max(beta, var_degree(g, v));
  }
  Monomial xv = Monomial::variable(v, ideal.vars());
  for (int j = alpha; j <= beta; ++j) {
    // I_j = (generators of slice degree <= j) : x_v^j, which strips x_v.
    std::vector<Monomial> slice;
    for (const Monomial& g : gens)
      if (var_degree(g, v) <= j)
        slice.push_back(exact_quotient(g, power(xv, var_degree(g, v))));
    MonomialIdeal ij(ideal.vars(), std::move(slice));
    std::vector<StanleySpace> inner;
    janet_rec(ij, active & ~var_bit(v), pick_smallest_range, inner);
    for (StanleySpace& s : inner) {
      s.u = product(power(xv, j), s.u);
      if (j == beta) s.z |= var_bit(v);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

StanleyDecomposition janet(const MonomialIdeal& ideal, bool pick_smallest_range) {
  if (ideal.is_zero()) throw std::domain_error("janet needs a nonzero ideal");
  StanleyDecomposition d{QuotientModule::plain_ideal(ideal), {}};
  janet_rec(ideal, full_varset(ideal.vars()), pick_smallest_range, d.spaces);
  return d;
}

namespace {

// Recursion peeling one variable occurrence off the smallest-degree
// generator; gens arrive sorted by (degree, lex) and stay sorted.
void ci_rec(std::vector<Monomial> gens, VarSet allowed, std::vector<StanleySpace>& out) {
  if (gens.size() == 1) {
    out.push_back({gens[0], allowed});
    return;
  }
  Monomial u = gens.front();
  int j = varset_elements(u.support()).back();
  std::vector<Monomial> rest(gens.begin() + 1, gens.end());
  if (u.degree() == 1) {
    // u = x_j: multiples of x_j in one space, the rest avoids x_j entirely.
    out.push_back({u, allowed});
    ci_rec(std::move(rest), allowed & ~var_bit(j), out);
    return;
  }
  // Split on divisibility by x_j: the x_j-free part drops u, the rest is
  // x_j times the colon, which only shortens u.
  ci_rec(rest, allowed & ~var_bit(j), out);
  Monomial xj = Monomial::variable(j, u.vars());
  gens[0] = exact_quotient(u, xj);
  std::vector<StanleySpace> scaled;
  ci_rec(std::move(gens), allowed, scaled);
  for (StanleySpace& s : scaled) {
    s.u = product(xj, s.u);
    out.push_back(std::move(s));
  }
}

}  // namespace

StanleyDecomposition ci_decomposition(const MonomialIdeal& ideal) {
  if (!is_complete_intersection(ideal))
    throw std::domain_error("generators are not pairwise coprime");
  StanleyDecomposition d{QuotientModule::plain_ideal(ideal), {}};
  ci_rec(ideal.generators(), full_varset(ideal.vars()), d.spaces);
  return d;
}

StanleyDecomposition ci3_decomposition(const MonomialIdeal& ideal) {
  if (ideal.vars() != 3 || ideal.generator_count() != 3)
    throw std::domain_error("expects three pure-power generators in three variables");
  int d1 = 0, d2 = 0, d3 = 0;
  for (const Monomial& g : ideal.generators()) {
    if (varset_size(g.support()) != 1)
      throw std::domain_error("expects three pure-power generators in three variables");
    if (g.exponent(1) > 0) d1 = g.exponent(1);
    if (g.exponent(2) > 0) d2 = g.exponent(2);
    if (g.exponent(3) > 0) d3 = g.exponent(3);
  }
  if (d1 == 0 || d2 == 0 || d3 == 0)
    throw std::domain_error("expects three pure-power generators in three variables");
  auto mono = [](int e1, int e2, int e3) { return Monomial(std::vector<int>{e1, e2, e3}); };
  StanleyDecomposition d{QuotientModule::plain_ideal(ideal), {}};
  d.spaces.push_back({mono(d1, d2, d3), full_varset(3)});
  for (int i = 0; i < d1; ++i)
    d.spaces.push_back({mono(i, d2, 0), var_bit(2) | var_bit(3)});
  for (int i = 0; i < d2; ++i)
    d.spaces.push_back({mono(0, i, d3), var_bit(1) | var_bit(3)});
  for (int i = 0; i < d3; ++i)
    d.spaces.push_back({mono(d1, 0, i), var_bit(1) | var_bit(2)});
  return d;
}

StanleyDecomposition principal_quotient(const Monomial& u) {
  if (u.is_one()) throw std::domain_error("S/(1) is the zero module");
  int n = u.vars();
  StanleyDecomposition d{
      QuotientModule::cyclic(MonomialIdeal(n, {u})), {}};
  std::vector<int> prefix(n, 0);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < u.exponent(k); ++i) {
      std::vector<int> e = prefix;
      e[k - 1] = i;
      d.spaces.push_back({Monomial(std::move(e)), full_varset(n) & ~var_bit(k)});
    }
    prefix[k - 1] = u.exponent(k);
  }
  return d;
}

StanleyDecomposition prime_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("expects a variable-generated ideal");
  for (const Monomial& g : ideal.generators())
    if (!g.is_variable()) throw std::domain_error("expects a variable-generated ideal");
  StanleyDecomposition d{QuotientModule::plain_ideal(ideal), {}};
  VarSet z = full_varset(ideal.vars());
  for (const Monomial& g : ideal.generators()) {
    d.spaces.push_back({g, z});
    z &= ~g.support();
  }
  return d;
}

FormulaResult formula_n2(const MonomialIdeal& ideal) {
  if (ideal.vars() != 2) throw std::domain_error("formula needs exactly two variables");
  if (ideal.is_zero()) throw std::domain_error("formula needs a nonzero ideal");
  // Staircase order: x1-exponents strictly decreasing, x2-exponents strictly
  // increasing (minimality forces both once sorted by the first).
  std::vector<Monomial> gens = ideal.generators();
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.exponent(1) > b.exponent(1);
  });
  int m = static_cast<int>(gens.size());
  int am = gens[m - 1].exponent(1);
  int b1 = gens[0].exponent(2);
  int best = 0;
  for (int i = 0; i < m; ++i) {
    int v = gens[i].exponent(1) + gens[i].exponent(2) - am - b1;
    if (i == 0 || v < best) best = v;
  }
  int pick = 0;
  while (gens[pick].exponent(1) + gens[pick].exponent(2) - am - b1 != best) ++pick;

  FormulaResult r{best + 1, {QuotientModule::plain_ideal(ideal), {}}};
  auto mono = [](int e1, int e2) { return Monomial(std::vector<int>{e1, e2}); };
  int ai = gens[pick].exponent(1), bi = gens[pick].exponent(2);
  r.witness.spaces.push_back({mono(ai, bi), full_varset(2)});
  // Columns left of the corner run upward from the staircase boundary,
  // rows below it run rightward.
  for (int l = am; l < ai; ++l) {
    int k = 0;
    for (const Monomial& g : gens)
      if (g.exponent(1) <= l) {
        k = g.exponent(2);
        break;
      }
    r.witness.spaces.push_back({mono(l, k), var_bit(2)});
  }
  for (int l = b1; l < bi; ++l) {
    int t = 0;
    for (int g = m - 1; g >= 0; --g)
      if (gens[g].exponent(2) <= l) {
        t = gens[g].exponent(1);
        break;
      }
    r.witness.spaces.push_back({mono(t, l), var_bit(1)});
  }
  return r;
}

FormulaResult formula_m2(const MonomialIdeal& ideal) {
  if (ideal.generator_count() != 2)
    throw std::domain_error("formula needs exactly two minimal generators");
  const Monomial& u1 = ideal.generators()[0];
  const Monomial& u2 = ideal.generators()[1];
  Monomial v = gcd(u1, u2);
  MonomialIdeal reduced(ideal.vars(), {exact_quotient(u1, v), exact_quotient(u2, v)});
  FormulaResult r{static_cast<int>(std::min(u1.degree(), u2.degree()) - v.degree()) + 1,
                  {QuotientModule::plain_ideal(ideal), {}}};
  StanleyDecomposition base = ci_decomposition(reduced);
  for (const StanleySpace& s : base.spaces)
    r.witness.spaces.push_back({product(v, s.u), s.z});
  return r;
}

}  // namespace slength
