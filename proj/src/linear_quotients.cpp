#include "slength/linear_quotients.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "slength/errors.hpp"
#include "slength/ideal.hpp"

namespace slength {

namespace {

void require_permutation(const MonomialIdeal& ideal, const std::vector<Monomial>& ordering) {
  std::vector<Monomial> a = ideal.generators();
  std::vector<Monomial> b = ordering;
  auto by_exponents = [](const Monomial& x, const Monomial& y) {
    return x.exponents() < y.exponents();
  };
  std::sort(a.begin(), a.end(), by_exponents);
  std::sort(b.begin(), b.end(), by_exponents);
  if (a != b)
    throw std::invalid_argument("ordering is not a permutation of the minimal generators");
}

// The prefix colon (u_1,...,u_k) : u is generated by the monomials u_i/gcd,
// so it is variable-generated iff every minimal generator of that colon is a
// variable.  Returns the variable support of the colon when it is, nullopt
// otherwise.
std::optional<VarSet> variable_colon(const std::vector<Monomial>& prefix, const Monomial& u) {
  int n = u.vars();
  std::vector<Monomial> quotients;
  quotients.reserve(prefix.size());
  for (const Monomial& p : prefix) quotients.push_back(colon_quotient(p, u));
  MonomialIdeal c(n, std::move(quotients));
  VarSet support = 0;
  for (const Monomial& g : c.generators()) {
    if (!g.is_variable()) return std::nullopt;
    support |= g.support();
  }
  return support;
}

}  // namespace

LinearOrderCheck is_linear_order(const MonomialIdeal& ideal,
                                 const std::vector<Monomial>& ordering) {
  require_permutation(ideal, ordering);
  std::vector<Monomial> prefix;
  for (std::size_t j = 1; j < ordering.size(); ++j) {
    prefix.assign(ordering.begin(), ordering.begin() + j);
    if (!variable_colon(prefix, ordering[j]))
      return {false, static_cast<int>(j) + 1};
  }
  return {true, 0};
}

namespace {

bool extend_order(const std::vector<Monomial>& gens, std::vector<bool>& used,
                  std::vector<Monomial>& order) {
  if (order.size() == gens.size()) return true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (used[i]) continue;
    if (!order.empty() && !variable_colon(order, gens[i])) continue;
    used[i] = true;
    order.push_back(gens[i]);
    if (extend_order(gens, used, order)) return true;
    order.pop_back();
    used[i] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Monomial>> find_linear_order(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::domain_error("linear quotients need a nonzero proper ideal");
  if (ideal.generator_count() > 12)
    throw SizeLimitError("linear-order search capped at 12 generators");
  const std::vector<Monomial>& gens = ideal.generators();
  std::vector<bool> used(gens.size(), false);
  std::vector<Monomial> order;
  order.reserve(gens.size());
  if (extend_order(gens, used, order)) return order;
  return std::nullopt;
}

StanleyDecomposition decomposition_from_order(const MonomialIdeal& ideal,
                                              const std::vector<Monomial>& ordering) {
  require_permutation(ideal, ordering);
  int n = ideal.vars();
  StanleyDecomposition out{QuotientModule::plain_ideal(ideal), {}};
  std::vector<Monomial> prefix;
  for (std::size_t j = 0; j < ordering.size(); ++j) {
    VarSet blocked = 0;
    if (j > 0) {
      std::optional<VarSet> support = variable_colon(prefix, ordering[j]);
      if (!support) {
        std::ostringstream msg;
        msg << "prefix colon at position " << j + 1 << " is not variable-generated";
        throw std::invalid_argument(msg.str());
      }
      blocked = *support;
    }
    out.spaces.push_back({ordering[j], full_varset(n) & ~blocked});
    prefix.push_back(ordering[j]);
  }
  return out;
}

bool prefix_decomposition_check(const MonomialIdeal& ideal,
                                const std::vector<Monomial>& ordering) {
  require_permutation(ideal, ordering);
  int n = ideal.vars();
  std::vector<Monomial> prefix;
  std::vector<StanleySpace> spaces;
  for (std::size_t j = 0; j < ordering.size(); ++j) {
    // Z_j = the variables not lying in the prefix colon, so only generators
    // that are themselves variables block anything.
    VarSet blocked = 0;
    if (j > 0) {
      std::vector<Monomial> quotients;
      for (const Monomial& p : prefix) quotients.push_back(colon_quotient(p, ordering[j]));
      MonomialIdeal c(n, std::move(quotients));
      for (const Monomial& g : c.generators())
        if (g.is_variable()) blocked |= g.support();
    }
    spaces.push_back({ordering[j], full_varset(n) & ~blocked});
    prefix.push_back(ordering[j]);
    StanleyDecomposition d{
        QuotientModule::plain_ideal(MonomialIdeal(n, prefix)), spaces};
    if (!verify(d).ok) return false;
  }
  return true;
}

}  // namespace slength
