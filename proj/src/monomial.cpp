#include "slength/monomial.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace slength {

namespace {

int checked_add(int a, int b) {
  if (a > std::numeric_limits<int>::max() - b)
    throw std::overflow_error("monomial exponent overflow");
  return a + b;
}

int checked_mul(int a, int k) {
  if (a != 0 && k > std::numeric_limits<int>::max() / a)
    throw std::overflow_error("monomial exponent overflow");
  return a * k;
}

}  // namespace

std::vector<int> varset_elements(VarSet z) {
  std::vector<int> out;
  for (int j = 1; z != 0; ++j, z >>= 1)
    if (z & 1) out.push_back(j);
  return out;
}

std::string varset_to_string(VarSet z) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int j : varset_elements(z)) {
    if (!first) os << ',';
    os << 'x' << j;
    first = false;
  }
  os << '}';
  return os.str();
}

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  if (static_cast<int>(e_.size()) > kMaxVariables)
    throw std::invalid_argument("too many variables (limit 64)");
  for (int v : e_)
    if (v < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::one(int n) { return Monomial(std::vector<int>(n, 0)); }

Monomial Monomial::variable(int j, int n) {
  if (j < 1 || j > n) throw std::invalid_argument("variable index out of range");
  std::vector<int> e(n, 0);
  e[j - 1] = 1;
  return Monomial(std::move(e));
}

long long Monomial::degree() const {
  long long d = 0;
  for (int v : e_) d += v;
  return d;
}

VarSet Monomial::support() const {
  VarSet z = 0;
  for (int j = 1; j <= vars(); ++j)
    if (e_[j - 1] > 0) z |= var_bit(j);
  return z;
}

bool Monomial::is_one() const { return support() == 0; }

bool Monomial::is_variable() const { return degree() == 1; }

bool Monomial::is_squarefree() const {
  for (int v : e_)
    if (v > 1) return false;
  return true;
}

namespace {

void check_same_vars(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("ambient variable counts differ");
}

}  // namespace

bool divides(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  for (int j = 0; j < a.vars(); ++j)
    if (a.exponents()[j] > b.exponents()[j]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  std::vector<int> e(a.vars());
  for (int j = 0; j < a.vars(); ++j)
    e[j] = std::max(a.exponents()[j], b.exponents()[j]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  std::vector<int> e(a.vars());
  for (int j = 0; j < a.vars(); ++j)
    e[j] = std::min(a.exponents()[j], b.exponents()[j]);
  return Monomial(std::move(e));
}

Monomial product(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  std::vector<int> e(a.vars());
  for (int j = 0; j < a.vars(); ++j)
    e[j] = checked_add(a.exponents()[j], b.exponents()[j]);
  return Monomial(std::move(e));
}

Monomial power(const Monomial& a, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  std::vector<int> e(a.vars());
  for (int j = 0; j < a.vars(); ++j) e[j] = checked_mul(a.exponents()[j], k);
  return Monomial(std::move(e));
}

Monomial exact_quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw std::invalid_argument("quotient is not a monomial");
  std::vector<int> e(a.vars());
  for (int j = 0; j < a.vars(); ++j) e[j] = a.exponents()[j] - b.exponents()[j];
  return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& a, const Monomial& b) {
  return exact_quotient(a, gcd(a, b));
}

Monomial radical(const Monomial& a) {
  std::vector<int> e(a.vars());
  for (int j = 0; j < a.vars(); ++j) e[j] = a.exponents()[j] > 0 ? 1 : 0;
  return Monomial(std::move(e));
}

bool lex_less(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  return a.exponents() < b.exponents();
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  // Degree first, then descending exponent vectors, so x1 sorts before x2
  // and staircases list left to right.
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return b.exponents() < a.exponents();
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int j = 1; j <= m.vars(); ++j) {
    int e = m.exponent(j);
    if (e == 0) continue;
    if (!first) os << '*';
    os << 'x' << j;
    if (e > 1) os << '^' << e;
    first = false;
  }
  return os.str();
}

}  // namespace slength
