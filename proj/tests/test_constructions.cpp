#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "slength/constructions.hpp"
#include "slength/solver.hpp"
#include "slength/transforms.hpp"

using namespace slength;
using namespace slength::testing;

// product over all variables but the first of (beta_k - alpha_k + 1)
static long long slice_bound(const MonomialIdeal& i, bool skip_first) {
  IdealStats s = stats(i);
  long long prod = 1;
  for (int k = skip_first ? 1 : 0; k < i.vars(); ++k) prod *= s.beta[k] - s.alpha[k] + 1;
  return prod;
}

static long long phi(std::vector<long long> degrees) {
  std::sort(degrees.begin(), degrees.end());
  long long value = 1, run = 1;
  for (std::size_t k = 0; k + 1 < degrees.size(); ++k) {
    run *= degrees[k];
    value += run;
  }
  return value;
}

static MonomialIdeal random_ci(Rng& rng, int max_gens, int max_deg) {
  // pairwise disjoint supports inside four variables
  int m = pick(rng, 1, max_gens);
  std::vector<int> owner(4);
  for (int& o : owner) o = pick(rng, 0, m - 1);
  std::vector<std::vector<int>> exps(m, std::vector<int>(4, 0));
  for (int v = 0; v < 4; ++v) exps[owner[v]][v] = pick(rng, 0, max_deg);
  std::vector<Monomial> gens;
  for (auto& e : exps) {
    Monomial g{std::move(e)};
    if (!g.is_one()) gens.push_back(std::move(g));
  }
  if (gens.empty()) gens.push_back(Monomial::variable(1, 4));
  return MonomialIdeal(4, std::move(gens));
}

TEST_CASE("janet verifies and meets the slice product bound") {
  Rng rng(51);
  for (int t = 0; t < 200; ++t) {
    int n = pick(rng, 1, 4);
    MonomialIdeal i = random_ideal(rng, n, 4, 3);
    StanleyDecomposition d = janet(i);
    CHECK(verify(d).ok);
    CHECK(d.module == QuotientModule::plain_ideal(i));
    CHECK(static_cast<long long>(d.spaces.size()) <= slice_bound(i, true));

    StanleyDecomposition d2 = janet(i, true);
    CHECK(verify(d2).ok);
    CHECK(static_cast<long long>(d2.spaces.size()) <= slice_bound(i, false));
  }
}

TEST_CASE("janet on a principal ideal is a single space") {
  MonomialIdeal i(3, {mono({2, 1, 0})});
  StanleyDecomposition d = janet(i);
  CHECK(d.spaces.size() == 1);
  CHECK(verify(d).ok);
}

TEST_CASE("complete intersection recursion meets the degree-product bound") {
  Rng rng(52);
  for (int t = 0; t < 200; ++t) {
    MonomialIdeal i = random_ci(rng, 4, 3);
    StanleyDecomposition d = ci_decomposition(i);
    CHECK(verify(d).ok);
    CHECK(d.module == QuotientModule::plain_ideal(i));
    std::vector<long long> degrees;
    for (const Monomial& g : i.generators()) degrees.push_back(g.degree());
    CHECK(static_cast<long long>(d.spaces.size()) <= phi(degrees));
  }
  CHECK_THROWS(ci_decomposition(MonomialIdeal(2, {mono({2, 1}), mono({0, 2})})));
}

TEST_CASE("three pure powers decompose into 1 + d1 + d2 + d3 spaces") {
  Rng rng(53);
  for (int t = 0; t < 50; ++t) {
    int d1 = pick(rng, 1, 3), d2 = pick(rng, 1, 3), d3 = pick(rng, 1, 3);
    MonomialIdeal i(3, {mono({d1, 0, 0}), mono({0, d2, 0}), mono({0, 0, d3})});
    StanleyDecomposition d = ci3_decomposition(i);
    CHECK(verify(d).ok);
    CHECK(static_cast<int>(d.spaces.size()) == 1 + d1 + d2 + d3);
  }
  // for equal degrees d the specialized count 3d+1 beats the recursion 1+d+d^2
  MonomialIdeal cubes(3, {mono({3, 0, 0}), mono({0, 3, 0}), mono({0, 0, 3})});
  CHECK(ci3_decomposition(cubes).spaces.size() == 10);
  CHECK(ci_decomposition(cubes).spaces.size() >= 10);
  CHECK_THROWS(ci3_decomposition(MonomialIdeal(3, {mono({1, 1, 0}), mono({0, 0, 2})})));
}

TEST_CASE("principal quotient has exactly deg(u) spaces") {
  Rng rng(54);
  for (int t = 0; t < 50; ++t) {
    Monomial u = random_monomial(rng, pick(rng, 1, 4), 3);
    StanleyDecomposition d = principal_quotient(u);
    CHECK(verify(d).ok);
    CHECK(static_cast<long long>(d.spaces.size()) == u.degree());
    CHECK(d.module == QuotientModule::cyclic(MonomialIdeal(u.vars(), {u})));
  }
  CHECK_THROWS(principal_quotient(Monomial::one(2)));
}

TEST_CASE("prime decomposition length equals the number of variables generating") {
  Rng rng(55);
  for (int t = 0; t < 50; ++t) {
    int n = pick(rng, 1, 5);
    int k = pick(rng, 1, n);
    std::vector<Monomial> gens;
    for (int v = 1; v <= k; ++v) gens.push_back(Monomial::variable(v, n));
    MonomialIdeal p(n, std::move(gens));
    StanleyDecomposition d = prime_decomposition(p);
    CHECK(verify(d).ok);
    CHECK(static_cast<int>(d.spaces.size()) == k);
  }
  CHECK_THROWS(prime_decomposition(MonomialIdeal(2, {mono({1, 1})})));
}

TEST_CASE("two-variable formula equals the grid oracle") {
  Rng rng(56);
  for (int t = 0; t < 120; ++t) {
    MonomialIdeal i = random_ideal(rng, 2, 5, 5);
    FormulaResult f = formula_n2(i);
    CHECK(verify(f.witness).ok);
    CHECK(static_cast<int>(f.witness.spaces.size()) == f.value);
    CHECK(f.value == oracle_slength(QuotientModule::plain_ideal(i), OracleMode::kGrid));
  }
  CHECK_THROWS(formula_n2(MonomialIdeal(3, {mono({1, 0, 0})})));
}

TEST_CASE("two-generator formula equals the exact value of the polarization") {
  Rng rng(57);
  for (int t = 0; t < 80; ++t) {
    int n = pick(rng, 2, 5);
    MonomialIdeal i = random_ideal(rng, n, 2, 2);
    while (i.generator_count() != 2) i = random_ideal(rng, n, 2, 2);
    FormulaResult f = formula_m2(i);
    CHECK(verify(f.witness).ok);
    CHECK(static_cast<int>(f.witness.spaces.size()) == f.value);
    auto [p, map] = polarize(i);
    CHECK(f.value == exact_slength_squarefree(QuotientModule::plain_ideal(p)).upper.value);
  }
  CHECK_THROWS(formula_m2(MonomialIdeal(2, {mono({2, 0}), mono({1, 1}), mono({0, 2})})));
}

TEST_CASE("adjoining a fresh variable raises the exact value by one") {
  // slength((I', x_n)) = slength(I') + 1 on squarefree instances
  Rng rng(58);
  for (int t = 0; t < 40; ++t) {
    MonomialIdeal base = random_squarefree_ideal(rng, 3, 3);
    std::vector<Monomial> gens;
    for (const Monomial& g : base.generators()) {
      std::vector<int> e = g.exponents();
      e.push_back(0);
      gens.push_back(Monomial(std::move(e)));
    }
    gens.push_back(Monomial::variable(4, 4));
    MonomialIdeal bigger(4, std::move(gens));
    int lhs = exact_slength_squarefree(QuotientModule::plain_ideal(bigger)).upper.value;
    int rhs = exact_slength_squarefree(QuotientModule::plain_ideal(base)).upper.value;
    CHECK(lhs == rhs + 1);
  }
}
