#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "slength/errors.hpp"
#include "slength/solver.hpp"
#include "slength/transforms.hpp"

using namespace slength;
using namespace slength::testing;

static QuotientModule plain(MonomialIdeal i) {
  return QuotientModule::plain_ideal(std::move(i));
}

static MonomialIdeal maximal3() {
  return MonomialIdeal(3, {mono({1, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1})});
}

TEST_CASE("relative complex lists exactly the monomial supports in J minus I") {
  QuotientModule q(MonomialIdeal(3, {mono({1, 0, 0}), mono({0, 1, 1})}),
                   MonomialIdeal(3, {mono({1, 1, 0})}));
  RelativeComplex c = relative_complex(q);
  CHECK(c.n == 3);
  std::set<VarSet> faces(c.faces.begin(), c.faces.end());
  std::set<VarSet> expected;
  for (VarSet f = 0; f < 8; ++f) {
    std::vector<int> e(3, 0);
    for (int j = 1; j <= 3; ++j)
      if (varset_contains(f, j)) e[j - 1] = 1;
    if (q.member(Monomial(e))) expected.insert(f);
  }
  CHECK(faces == expected);
  CHECK_THROWS_AS(relative_complex(plain(MonomialIdeal(2, {mono({2, 0})}))), std::domain_error);
}

TEST_CASE("facets are the inclusion-maximal faces") {
  RelativeComplex c = relative_complex(plain(maximal3()));
  std::vector<VarSet> f = facets(c);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == full_varset(3));

  QuotientModule q(MonomialIdeal(3, {mono({1, 0, 0}), mono({0, 1, 0})}),
                   MonomialIdeal(3, {mono({1, 1, 1})}));
  std::vector<VarSet> g = facets(relative_complex(q));
  std::set<VarSet> got(g.begin(), g.end());
  CHECK(got == std::set<VarSet>{var_bit(1) | var_bit(2), var_bit(1) | var_bit(3),
                                var_bit(2) | var_bit(3)});
}

TEST_CASE("characteristic grid window and points") {
  MonomialIdeal i(2, {mono({3, 0}), mono({1, 1}), mono({0, 2})});
  CharacteristicGrid g = characteristic_grid(plain(i));
  CHECK(g.cap == std::vector<int>{4, 3});
  // points are the lattice vectors (a,b) in [0,4]x[0,3] with x1^a x2^b in I
  std::size_t expected = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 3; ++b)
      if (contains(i, mono({a, b}))) ++expected;
  CHECK(g.points.size() == expected);
  CHECK(std::is_sorted(g.points.begin(), g.points.end()));
}

TEST_CASE("exact squarefree solver on known values") {
  SlengthReport r = exact_slength_squarefree(plain(maximal3()));
  CHECK(r.exact);
  CHECK(r.lower.value == 3);
  CHECK(r.upper.value == 3);
  REQUIRE(r.witness.has_value());
  CHECK(verify(*r.witness).ok);
  CHECK(measure(*r.witness).length == 3);

  // a single squarefree generator
  SlengthReport r1 = exact_slength_squarefree(plain(MonomialIdeal(2, {mono({1, 1})})));
  CHECK(r1.upper.value == 1);
}

TEST_CASE("exact squarefree solver equals the independent oracle") {
  Rng rng(61);
  for (int t = 0; t < 150; ++t) {
    QuotientModule q = random_squarefree_module(rng, pick(rng, 2, 4), 4);
    SlengthReport r = exact_slength_squarefree(q);
    CHECK(r.exact);
    CHECK(r.upper.value == oracle_slength(q, OracleMode::kSquarefree));
    REQUIRE(r.witness.has_value());
    CHECK(verify(*r.witness).ok);
    CHECK(static_cast<int>(r.witness->spaces.size()) == r.upper.value);
  }
}

TEST_CASE("grid minimum equals the oracle on two variables") {
  Rng rng(62);
  for (int t = 0; t < 150; ++t) {
    MonomialIdeal j = random_ideal(rng, 2, 4, 4);
    QuotientModule q = plain(j);
    if (pick(rng, 0, 1)) {
      MonomialIdeal i = intersect(j, MonomialIdeal(2, {random_monomial(rng, 2, 4)}));
      if (!(i == j)) q = QuotientModule(j, i);
    }
    GridResult g = grid_minimum(q);
    CHECK(g.value == oracle_slength(q, OracleMode::kGrid));
    CHECK(verify(g.witness).ok);
    CHECK(static_cast<int>(g.witness.spaces.size()) == g.value);
  }
}

TEST_CASE("restricting to maximal tops can overestimate") {
  // the value 4 needs a non-maximal interval at the first uncovered cell
  MonomialIdeal i(2, {mono({3, 0}), mono({1, 2}), mono({0, 4})});
  SolveOptions maximal_only;
  maximal_only.exhaustive_tops = false;
  CHECK(grid_minimum(plain(i)).value == 4);
  CHECK(grid_minimum(plain(i), maximal_only).value == 5);

  // same failure mode in the boolean search: the polarization of
  // (x1^2*x2, x2^3*x3) has value 3, but maximal-only search finds 4
  auto [pol, map] = polarize(MonomialIdeal(3, {mono({2, 1, 0}), mono({0, 3, 1})}));
  CHECK(exact_slength_squarefree(plain(pol)).upper.value == 3);
  CHECK(exact_slength_squarefree(plain(pol), maximal_only).upper.value == 4);

  // the heuristic stays a sound upper bound
  Rng rng(63);
  for (int t = 0; t < 80; ++t) {
    MonomialIdeal j = random_ideal(rng, 2, 4, 4);
    CHECK(grid_minimum(plain(j), maximal_only).value >=
          oracle_slength(plain(j), OracleMode::kGrid));
  }
}

TEST_CASE("interval count bounds from the complex") {
  Rng rng(64);
  for (int t = 0; t < 100; ++t) {
    QuotientModule q = random_squarefree_module(rng, pick(rng, 2, 4), 4);
    RelativeComplex c = relative_complex(q);
    int exact = exact_slength_squarefree(q).upper.value;
    CHECK(exact <= static_cast<int>(c.faces.size()));
    CHECK(exact >= static_cast<int>(facets(c).size()));
    int sd = sdepth_squarefree(q).sdepth;
    int big_faces = 0;
    for (VarSet f : c.faces)
      if (varset_size(f) >= sd) ++big_faces;
    CHECK(exact <= big_faces);
  }
}

TEST_CASE("constrained length and sdepth on the maximal ideal") {
  QuotientModule q = plain(maximal3());
  auto unconstrained = constrained_min_length(q, 0);
  REQUIRE(unconstrained.has_value());
  CHECK(unconstrained->upper.value == 3);

  auto at2 = constrained_min_length(q, 2);
  REQUIRE(at2.has_value());
  CHECK(at2->upper.value == 4);
  REQUIRE(at2->witness.has_value());
  CHECK(verify(*at2->witness).ok);
  CHECK(measure(*at2->witness).sdepth >= 2);

  CHECK(!constrained_min_length(q, 3).has_value());

  SdepthResult sd = sdepth_squarefree(q);
  CHECK(sd.sdepth == 2);
  CHECK(verify(sd.witness).ok);
  CHECK(measure(sd.witness).sdepth == 2);
}

TEST_CASE("sdepth witness is always optimal") {
  Rng rng(65);
  for (int t = 0; t < 60; ++t) {
    QuotientModule q = random_squarefree_module(rng, 4, 3);
    SdepthResult sd = sdepth_squarefree(q);
    CHECK(verify(sd.witness).ok);
    CHECK(measure(sd.witness).sdepth == sd.sdepth);
    CHECK(!constrained_min_length(q, sd.sdepth + 1).has_value());
  }
}

TEST_CASE("symbolic power monotonicity on exactly solved pairs") {
  Rng rng(66);
  int applied = 0;
  for (int t = 0; t < 60 && applied < 25; ++t) {
    MonomialIdeal j = random_squarefree_ideal(rng, 3, 3);
    MonomialIdeal j2 = symbolic_power(j, 2);
    SlengthReport r1 = slength_report(plain(j));
    SlengthReport r2 = slength_report(plain(j2));
    if (!r1.exact || !r2.exact) continue;
    ++applied;
    CHECK(r1.upper.value <= r2.upper.value);
  }
  CHECK(applied >= 10);
}

TEST_CASE("report bounds are consistent on random ideals") {
  Rng rng(67);
  for (int t = 0; t < 300; ++t) {
    int n = pick(rng, 1, 3);
    MonomialIdeal j = random_ideal(rng, n, 4, 3);
    SlengthReport r = slength_report(plain(j));
    CHECK(r.lower.value <= r.upper.value);
    CHECK(r.lower.value >= j.generator_count());
    CHECK(r.exact == (r.lower.value == r.upper.value));
    REQUIRE(r.witness.has_value());
    CHECK(verify(*r.witness).ok);
    CHECK(static_cast<int>(r.witness->spaces.size()) == r.upper.value);
  }
}

TEST_CASE("report survives a complete intersection that skips the closed forms") {
  // three pure powers: not squarefree, three generators, three variables
  MonomialIdeal j(3, {mono({2, 0, 0}), mono({0, 2, 0}), mono({0, 0, 2})});
  SlengthReport r = slength_report(plain(j));
  CHECK(r.lower.value <= r.upper.value);
  CHECK(r.lower.value >= 3);
  CHECK(r.upper.value <= 7);
  REQUIRE(r.witness.has_value());
  CHECK(verify(*r.witness).ok);
  CHECK(static_cast<int>(r.witness->spaces.size()) == r.upper.value);
}

TEST_CASE("report settles the maximal ideal in many variables") {
  int n = 25;
  std::vector<Monomial> gens;
  for (int v = 1; v <= n; ++v) {
    std::vector<int> e(n, 0);
    e[v - 1] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  SlengthReport r = slength_report(plain(MonomialIdeal(n, std::move(gens))));
  CHECK(r.exact);
  CHECK(r.lower.value == 25);
  CHECK(r.upper.value == 25);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->spaces.size() == 25);
}

TEST_CASE("report is exact on quotients it can polarize within budget") {
  Rng rng(68);
  for (int t = 0; t < 60; ++t) {
    MonomialIdeal j = random_ideal(rng, 2, 3, 3);
    MonomialIdeal i = intersect(j, MonomialIdeal(2, {random_monomial(rng, 2, 3)}));
    if (i == j) continue;
    SlengthReport r = slength_report(QuotientModule(j, i));
    CHECK(r.lower.value <= r.upper.value);
    if (r.exact) {
      CHECK(r.upper.value == oracle_slength(QuotientModule(j, i), OracleMode::kGrid));
    }
  }
}

TEST_CASE("deterministic runs reproduce the witness") {
  Rng rng(69);
  for (int t = 0; t < 30; ++t) {
    QuotientModule q = random_squarefree_module(rng, 4, 3);
    SolveOptions opt;
    opt.deterministic = true;
    StanleyDecomposition a = exact_slength_squarefree(q, opt).witness.value();
    StanleyDecomposition b = exact_slength_squarefree(q, opt).witness.value();
    CHECK(a.spaces == b.spaces);
  }
}

TEST_CASE("threaded search returns the same value") {
  Rng rng(70);
  for (int t = 0; t < 30; ++t) {
    QuotientModule q = random_squarefree_module(rng, 4, 4);
    SolveOptions par;
    par.deterministic = false;
    par.threads = 4;
    CHECK(exact_slength_squarefree(q, par).upper.value ==
          exact_slength_squarefree(q).upper.value);
  }
}

TEST_CASE("budgets refuse oversized inputs") {
  std::vector<Monomial> gens;
  for (int v = 1; v <= 21; ++v) gens.push_back(Monomial::variable(v, 21));
  CHECK_THROWS_AS(relative_complex(plain(MonomialIdeal(21, std::move(gens)))), SizeLimitError);

  SolveOptions tiny;
  tiny.budget.max_grid_points = 3;
  CHECK_THROWS_AS(grid_minimum(plain(maximal3()), tiny), SizeLimitError);

  SolveOptions tiny2;
  tiny2.budget.max_faces = 2;
  CHECK_THROWS_AS(exact_slength_squarefree(plain(maximal3()), tiny2), SizeLimitError);

  CHECK_THROWS_AS(oracle_slength(plain(MonomialIdeal(2, {mono({9, 0}), mono({0, 9})})),
                                 OracleMode::kGrid),
                  SizeLimitError);
}

TEST_CASE("oracle sanity") {
  CHECK(oracle_slength(plain(maximal3()), OracleMode::kSquarefree) == 3);
  MonomialIdeal twovar(2, {mono({3, 0}), mono({1, 1}), mono({0, 2})});
  CHECK(oracle_slength(plain(twovar), OracleMode::kGrid) == 3);
}

TEST_CASE("conjecture experiment on the recorded case") {
  ConjectureReport r = conjecture_experiment(1, 1, 1, 3);
  CHECK(r.exact_value == 3);
  CHECK(r.conjectured_value == 3);
  CHECK(r.matches);

  ConjectureReport r2 = conjecture_experiment(1, 1, 2, 4);
  CHECK(r2.conjectured_value == std::min(1 + 1 * 1, 4) + 1);
  CHECK(r2.exact_value >= 3);  // three generators force at least three spaces
  CHECK_THROWS(conjecture_experiment(2, 1, 1, 4));
  CHECK_THROWS(conjecture_experiment(1, 1, 1, 2));
}
