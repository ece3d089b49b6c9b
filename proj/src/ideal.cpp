#include "slength/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace slength {

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
  if (n < 0 || n > kMaxVariables)
    throw std::invalid_argument("variable count out of range");
  for (const Monomial& g : generators)
    if (g.vars() != n)
      throw std::invalid_argument("generator ambient mismatch");
  // Keep a generator only if no other one divides it (ties broken so exact
  // duplicates keep a single copy).
  std::sort(generators.begin(), generators.end(), canonical_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const Monomial& g : generators) {
    bool redundant = false;
    for (const Monomial& kept : gens_)
      if (divides(kept, g)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(g);
  }
}

MonomialIdeal MonomialIdeal::zero(int n) { return MonomialIdeal(n, {}); }

MonomialIdeal MonomialIdeal::unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}); }

bool MonomialIdeal::is_squarefree() const {
  for (const Monomial& g : gens_)
    if (!g.is_squarefree()) return false;
  return true;
}

MonomialIdeal minimalize(int n, std::vector<Monomial> generators) {
  return MonomialIdeal(n, std::move(generators));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.vars() != ideal.vars())
    throw std::invalid_argument("ambient variable counts differ");
  for (const Monomial& g : ideal.generators())
    if (divides(g, m)) return true;
  return false;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) gens.push_back(colon_quotient(g, v));
  return MonomialIdeal(ideal.vars(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) gens.push_back(radical(g));
  return MonomialIdeal(ideal.vars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("ambient variable counts differ");
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("ambient variable counts differ");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal scale(const MonomialIdeal& ideal, const Monomial& u) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) gens.push_back(product(u, g));
  return MonomialIdeal(ideal.vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw std::invalid_argument("power requires k >= 1");
  std::vector<Monomial> gens = {Monomial::one(ideal.vars())};
  for (int step = 0; step < k; ++step) {
    std::vector<Monomial> next;
    next.reserve(gens.size() * ideal.generators().size());
    for (const Monomial& g : gens)
      for (const Monomial& h : ideal.generators()) next.push_back(product(g, h));
    gens = MonomialIdeal(ideal.vars(), std::move(next)).generators();
  }
  return MonomialIdeal(ideal.vars(), std::move(gens));
}

namespace {

// Minimal transversals of the generator supports by branching on the first
// edge not yet hit, then pruning non-minimal covers.
void transversals(const std::vector<VarSet>& edges, std::size_t next, VarSet chosen,
                  std::vector<VarSet>& out) {
  while (next < edges.size() && (edges[next] & chosen) != 0) ++next;
  if (next == edges.size()) {
    out.push_back(chosen);
    return;
  }
  for (int j : varset_elements(edges[next]))
    transversals(edges, next + 1, chosen | var_bit(j), out);
}

}  // namespace

std::vector<VarSet> minimal_primes(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::domain_error("minimal primes need a nonzero proper ideal");
  if (!ideal.is_squarefree())
    throw std::domain_error("minimal primes implemented for squarefree ideals");
  std::vector<VarSet> edges;
  edges.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) edges.push_back(g.support());
  std::vector<VarSet> covers;
  transversals(edges, 0, 0, covers);
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  std::vector<VarSet> minimal;
  for (VarSet c : covers) {
    bool keep = true;
    for (VarSet other : covers)
      if (other != c && varset_subset(other, c)) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(c);
  }
  return minimal;
}

namespace {

// Degree-k monomials supported on p: compositions of k over the elements.
void compositions(const std::vector<int>& vars, std::size_t i, int left,
                  std::vector<int>& e, std::vector<Monomial>& out) {
  if (i + 1 == vars.size()) {
    e[vars[i] - 1] = left;
    out.push_back(Monomial(e));
    e[vars[i] - 1] = 0;
    return;
  }
  for (int take = 0; take <= left; ++take) {
    e[vars[i] - 1] = take;
    compositions(vars, i + 1, left - take, e, out);
    e[vars[i] - 1] = 0;
  }
}

MonomialIdeal prime_power(int n, VarSet p, int k) {
  std::vector<int> vars = varset_elements(p);
  std::vector<int> e(n, 0);
  std::vector<Monomial> gens;
  compositions(vars, 0, k, e, gens);
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw std::invalid_argument("symbolic power requires k >= 1");
  std::vector<VarSet> primes = minimal_primes(ideal);
  MonomialIdeal result = MonomialIdeal::unit(ideal.vars());
  for (VarSet p : primes) result = intersect(result, prime_power(ideal.vars(), p, k));
  return result;
}

IdealStats stats(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("stats of the zero ideal");
  int n = ideal.vars();
  IdealStats s;
  s.alpha.assign(n, 0);
  s.beta.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    int lo = ideal.generators()[0].exponents()[j];
    int hi = lo;
    for (const Monomial& g : ideal.generators()) {
      lo = std::min(lo, g.exponents()[j]);
      hi = std::max(hi, g.exponents()[j]);
    }
    s.alpha[j] = lo;
    s.beta[j] = hi;
  }
  return s;
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return false;
  const auto& gens = ideal.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if ((gens[a].support() & gens[b].support()) != 0) return false;
  return true;
}

QuotientModule::QuotientModule(MonomialIdeal j, MonomialIdeal i)
    : j_(std::move(j)), i_(std::move(i)) {
  if (j_.vars() != i_.vars())
    throw std::invalid_argument("ambient variable counts differ");
  for (const Monomial& g : i_.generators())
    if (!contains(j_, g))
      throw std::invalid_argument("lower ideal is not contained in the upper ideal");
  if (i_ == j_) throw std::invalid_argument("quotient module is zero (I = J)");
}

QuotientModule QuotientModule::plain_ideal(MonomialIdeal i) {
  int n = i.vars();
  return QuotientModule(std::move(i), MonomialIdeal::zero(n));
}

QuotientModule QuotientModule::cyclic(MonomialIdeal i) {
  int n = i.vars();
  return QuotientModule(MonomialIdeal::unit(n), std::move(i));
}

bool QuotientModule::member(const Monomial& m) const {
  return contains(j_, m) && !contains(i_, m);
}

}  // namespace slength
