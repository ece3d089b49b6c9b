#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace slength {

// Subsets of the ring variables as bit masks; variable j (1-based) sits in
// bit j-1.  Everything downstream assumes at most 64 variables.
using VarSet = std::uint64_t;

inline constexpr int kMaxVariables = 64;

constexpr VarSet var_bit(int j) { return VarSet{1} << (j - 1); }

constexpr VarSet full_varset(int n) {
  return n >= kMaxVariables ? ~VarSet{0} : (VarSet{1} << n) - 1;
}

constexpr bool varset_contains(VarSet z, int j) { return (z & var_bit(j)) != 0; }

constexpr bool varset_subset(VarSet a, VarSet b) { return (a & ~b) == 0; }

inline int varset_size(VarSet z) { return std::popcount(z); }

// Ascending 1-based variable indices of z.
std::vector<int> varset_elements(VarSet z);

std::string varset_to_string(VarSet z);

// A monomial is its exponent vector; the ambient variable count is the
// vector length.  Exponents are non-negative machine ints and the arithmetic
// that can grow them (product, power) is overflow-checked.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int n);
  static Monomial variable(int j, int n);

  int vars() const { return static_cast<int>(e_.size()); }
  int exponent(int j) const { return e_[j - 1]; }  // 1-based
  const std::vector<int>& exponents() const { return e_; }

  long long degree() const;
  VarSet support() const;
  bool is_one() const;
  bool is_variable() const;
  bool is_squarefree() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> e_;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);
Monomial power(const Monomial& a, int k);

// a / b, requiring b | a.
Monomial exact_quotient(const Monomial& a, const Monomial& b);

// a / gcd(a, b): the generator contributed by a to a colon by b.
Monomial colon_quotient(const Monomial& a, const Monomial& b);

// Drop exponents to at most one.
Monomial radical(const Monomial& a);

// Coordinatewise lexicographic order from x1.
bool lex_less(const Monomial& a, const Monomial& b);

// Canonical generator order: total degree, then descending exponent
// vectors (so x1 lists before x2 and staircases read left to right).
bool canonical_less(const Monomial& a, const Monomial& b);

// Renders as "x1^2*x3"; the unit monomial renders as "1".
std::string to_string(const Monomial& m);

}  // namespace slength
