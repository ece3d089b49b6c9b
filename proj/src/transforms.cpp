#include "slength/transforms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "slength/constructions.hpp"
#include "slength/errors.hpp"

namespace slength {

namespace {

void require_plain_ideal(const StanleyDecomposition& d, const char* op) {
  if (!d.module.is_plain_ideal())
    throw std::domain_error(std::string(op) + " expects a plain ideal module");
}

}  // namespace

StanleyDecomposition scale_decomposition(const StanleyDecomposition& d, const Monomial& u) {
  require_plain_ideal(d, "scale");
  StanleyDecomposition out{
      QuotientModule::plain_ideal(scale(d.module.upper(), u)), {}};
  out.spaces.reserve(d.spaces.size());
  for (const StanleySpace& s : d.spaces) out.spaces.push_back({product(u, s.u), s.z});
  return out;
}

std::optional<StanleyDecomposition> colon_transform(const StanleyDecomposition& d,
                                                    const Monomial& v) {
  require_plain_ideal(d, "colon");
  if (contains(d.module.upper(), v)) return std::nullopt;
  std::vector<StanleySpace> spaces = d.spaces;
  for (int j = 1; j <= v.vars(); ++j) {
    Monomial xj = Monomial::variable(j, v.vars());
    for (int step = 0; step < v.exponent(j); ++step) {
      std::vector<StanleySpace> next;
      next.reserve(spaces.size());
      for (const StanleySpace& s : spaces) {
        if (s.u.exponent(j) > 0)
          next.push_back({exact_quotient(s.u, xj), s.z});
        else if (varset_contains(s.z, j))
          next.push_back(s);
      }
      spaces = std::move(next);
    }
  }
  return StanleyDecomposition{
      QuotientModule::plain_ideal(colon(d.module.upper(), v)), std::move(spaces)};
}

namespace {

Monomial pad(const Monomial& m, int extra = 1) {
  std::vector<int> e = m.exponents();
  e.resize(e.size() + extra, 0);
  return Monomial(std::move(e));
}

Monomial truncate_last(const Monomial& m) {
  std::vector<int> e = m.exponents();
  e.pop_back();
  return Monomial(std::move(e));
}

MonomialIdeal map_ideal(const MonomialIdeal& ideal, int target_vars,
                        const std::function<Monomial(const Monomial&)>& f) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) gens.push_back(f(g));
  return MonomialIdeal(target_vars, std::move(gens));
}

}  // namespace

StanleyDecomposition extend_variable(const StanleyDecomposition& d) {
  require_plain_ideal(d, "extend");
  int n = d.module.vars();
  if (n + 1 > kMaxVariables) throw SizeLimitError("variable limit (64) exceeded");
  MonomialIdeal extended =
      map_ideal(d.module.upper(), n + 1, [](const Monomial& g) { return pad(g); });
  StanleyDecomposition out{QuotientModule::plain_ideal(extended), {}};
  for (const StanleySpace& s : d.spaces)
    out.spaces.push_back({pad(s.u), s.z | var_bit(n + 1)});
  return out;
}

StanleyDecomposition restrict_variable(const StanleyDecomposition& d) {
  require_plain_ideal(d, "restrict");
  int n = d.module.vars();
  if (n == 0) throw std::domain_error("no variable to restrict away");
  for (const Monomial& g : d.module.upper().generators())
    if (g.exponent(n) != 0)
      throw std::domain_error("the ideal uses the last variable");
  MonomialIdeal restricted = map_ideal(d.module.upper(), n - 1, truncate_last);
  StanleyDecomposition out{QuotientModule::plain_ideal(restricted), {}};
  for (const StanleySpace& s : d.spaces) {
    if (s.u.exponent(n) != 0) continue;
    out.spaces.push_back({truncate_last(s.u), s.z & full_varset(n - 1)});
  }
  return out;
}

int PolarizationMap::target_vars() const {
  return std::accumulate(split.begin(), split.end(), 0);
}

int PolarizationMap::slot(int j, int k) const {
  if (j < 1 || j > source_vars || k < 1 || k > split[j - 1])
    throw std::invalid_argument("polarization slot out of range");
  int base = 0;
  for (int l = 0; l < j - 1; ++l) base += split[l];
  return base + k;
}

namespace {

PolarizationMap make_map(int n, const std::vector<const MonomialIdeal*>& ideals) {
  PolarizationMap map;
  map.source_vars = n;
  map.split.assign(n, 1);
  for (const MonomialIdeal* ideal : ideals)
    for (const Monomial& g : ideal->generators())
      for (int j = 1; j <= n; ++j)
        map.split[j - 1] = std::max(map.split[j - 1], g.exponent(j));
  if (map.target_vars() > kMaxVariables)
    throw SizeLimitError("polarization needs more than 64 variables");
  return map;
}

Monomial polarize_monomial(const Monomial& m, const PolarizationMap& map) {
  std::vector<int> e(map.target_vars(), 0);
  for (int j = 1; j <= map.source_vars; ++j)
    for (int k = 1; k <= m.exponent(j); ++k) e[map.slot(j, k) - 1] = 1;
  return Monomial(std::move(e));
}

}  // namespace

std::pair<MonomialIdeal, PolarizationMap> polarize(const MonomialIdeal& ideal) {
  PolarizationMap map = make_map(ideal.vars(), {&ideal});
  MonomialIdeal target = map_ideal(ideal, map.target_vars(),
                                   [&](const Monomial& g) { return polarize_monomial(g, map); });
  return {std::move(target), std::move(map)};
}

std::pair<QuotientModule, PolarizationMap> polarize(const QuotientModule& q) {
  PolarizationMap map = make_map(q.vars(), {&q.upper(), &q.lower()});
  auto f = [&](const Monomial& g) { return polarize_monomial(g, map); };
  return {QuotientModule(map_ideal(q.upper(), map.target_vars(), f),
                         map_ideal(q.lower(), map.target_vars(), f)),
          std::move(map)};
}

namespace {

// One step with respect to x_j: trade one x_j for the fresh last variable in
// everything divisible by x_j^2.
Monomial step_monomial(const Monomial& m, int j) {
  std::vector<int> e = m.exponents();
  e.push_back(0);
  if (e[j - 1] >= 2) {
    e[j - 1] -= 1;
    e.back() = 1;
  }
  return Monomial(std::move(e));
}

}  // namespace

MonomialIdeal polarize_step(const MonomialIdeal& ideal, int j) {
  if (j < 1 || j > ideal.vars()) throw std::invalid_argument("variable index out of range");
  if (ideal.vars() + 1 > kMaxVariables) throw SizeLimitError("variable limit (64) exceeded");
  return map_ideal(ideal, ideal.vars() + 1,
                   [&](const Monomial& g) { return step_monomial(g, j); });
}

QuotientModule polarize_step(const QuotientModule& q, int j) {
  return QuotientModule(polarize_step(q.upper(), j), polarize_step(q.lower(), j));
}

StanleyDecomposition polarize_decomposition_step(const StanleyDecomposition& d, int j) {
  int n = d.module.vars();
  int y = n + 1;
  StanleyDecomposition out{polarize_step(d.module, j), {}};
  out.spaces.reserve(d.spaces.size());
  for (const StanleySpace& s : d.spaces) {
    VarSet z = s.z;
    if (varset_contains(z, j) || s.u.exponent(j) != 1)
      z |= var_bit(y);
    else
      z |= var_bit(j);  // pinned at exactly one occurrence: the copy frees x_j
    out.spaces.push_back({step_monomial(s.u, j), z});
  }
  return out;
}

namespace {

int module_exponent_max(const QuotientModule& q, int j) {
  int top = 0;
  for (const Monomial& g : q.upper().generators()) top = std::max(top, g.exponent(j));
  for (const Monomial& g : q.lower().generators()) top = std::max(top, g.exponent(j));
  return top;
}

Monomial permute(const Monomial& m, const std::vector<int>& position) {
  std::vector<int> e(m.vars());
  for (int j = 1; j <= m.vars(); ++j) e[position[j - 1] - 1] = m.exponent(j);
  return Monomial(std::move(e));
}

VarSet permute(VarSet z, const std::vector<int>& position) {
  VarSet out = 0;
  for (int j = 1; j <= static_cast<int>(position.size()); ++j)
    if (varset_contains(z, j)) out |= var_bit(position[j - 1]);
  return out;
}

}  // namespace

StanleyDecomposition polarize_decomposition(const StanleyDecomposition& d) {
  int n = d.module.vars();
  // origin[i] = (source variable, copy number) of current variable i+1.
  std::vector<std::pair<int, int>> origin;
  origin.reserve(n);
  for (int j = 1; j <= n; ++j) origin.emplace_back(j, 1);
  StanleyDecomposition cur = d;
  for (int j = 1; j <= n; ++j) {
    int copies = 1;
    while (module_exponent_max(cur.module, j) >= 2) {
      cur = polarize_decomposition_step(cur, j);
      origin.emplace_back(j, ++copies);
    }
  }
  // Permute the accumulated variables into the block layout of polarize().
  int total = static_cast<int>(origin.size());
  std::vector<int> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return origin[a] < origin[b]; });
  std::vector<int> position(total);
  for (int t = 0; t < total; ++t) position[order[t]] = t + 1;
  auto f = [&](const Monomial& g) { return permute(g, position); };
  StanleyDecomposition out{
      QuotientModule(map_ideal(cur.module.upper(), total, f),
                     map_ideal(cur.module.lower(), total, f)),
      {}};
  for (const StanleySpace& s : cur.spaces)
    out.spaces.push_back({permute(s.u, position), permute(s.z, position)});
  return out;
}

std::optional<QuotientModule> radical_module(const QuotientModule& q) {
  MonomialIdeal rj = radical(q.upper());
  MonomialIdeal ri = radical(q.lower());
  if (rj == ri) return std::nullopt;
  return QuotientModule(std::move(rj), std::move(ri));
}

StanleyDecomposition radical_decomposition(const StanleyDecomposition& d) {
  std::optional<QuotientModule> target = radical_module(d.module);
  if (!target) throw std::domain_error("the radical quotient is zero");
  int n = d.module.vars();
  int a = 1;
  for (int j = 1; j <= n; ++j) a = std::max(a, module_exponent_max(d.module, j));
  StanleyDecomposition out{*target, {}};
  for (const StanleySpace& s : d.spaces) {
    bool keep = true;
    for (int j = 1; j <= n && keep; ++j)
      if (!varset_contains(s.z, j) && s.u.exponent(j) % a != 0) keep = false;
    if (!keep) continue;
    std::vector<int> e(n);
    for (int j = 1; j <= n; ++j) e[j - 1] = (s.u.exponent(j) + a - 1) / a;
    out.spaces.push_back({Monomial(std::move(e)), s.z});
  }
  return out;
}

namespace {

std::vector<StanleySpace> pairwise_intersections(const std::vector<StanleySpace>& a,
                                                 const std::vector<StanleySpace>& b) {
  std::vector<StanleySpace> out;
  for (const StanleySpace& s : a)
    for (const StanleySpace& t : b) {
      Monomial w = lcm(s.u, t.u);
      if (!varset_subset(exact_quotient(w, s.u).support(), s.z)) continue;
      if (!varset_subset(exact_quotient(w, t.u).support(), t.z)) continue;
      out.push_back({w, s.z & t.z});
    }
  return out;
}

}  // namespace

StanleyDecomposition intersect_decompositions(const StanleyDecomposition& a,
                                              const StanleyDecomposition& b) {
  if (a.module.vars() != b.module.vars())
    throw std::invalid_argument("ambient variable counts differ");
  MonomialIdeal j = intersect(a.module.upper(), b.module.upper());
  MonomialIdeal i = intersect(sum(a.module.lower(), b.module.lower()), j);
  return StanleyDecomposition{QuotientModule(std::move(j), std::move(i)),
                              pairwise_intersections(a.spaces, b.spaces)};
}

StanleyDecomposition sum_decompositions(const StanleyDecomposition& d_i,
                                        const StanleyDecomposition& d_j,
                                        const StanleyDecomposition& d_s_mod_i) {
  require_plain_ideal(d_i, "sum");
  require_plain_ideal(d_j, "sum");
  if (d_s_mod_i.module != QuotientModule::cyclic(d_i.module.upper()))
    throw std::invalid_argument("third argument must decompose S/I for the first ideal");
  StanleyDecomposition out{
      QuotientModule::plain_ideal(sum(d_i.module.upper(), d_j.module.upper())),
      d_i.spaces};
  std::vector<StanleySpace> rest = pairwise_intersections(d_j.spaces, d_s_mod_i.spaces);
  out.spaces.insert(out.spaces.end(), rest.begin(), rest.end());
  return out;
}

StanleyDecomposition sum_decompositions(const StanleyDecomposition& d_i,
                                        const StanleyDecomposition& d_j) {
  require_plain_ideal(d_i, "sum");
  const MonomialIdeal& i = d_i.module.upper();
  if (i.is_unit()) return d_i;
  if (i.generator_count() != 1)
    throw std::invalid_argument(
        "sum needs a decomposition of S/I unless the first ideal is principal");
  return sum_decompositions(d_i, d_j, principal_quotient(i.generators()[0]));
}

}  // namespace slength
