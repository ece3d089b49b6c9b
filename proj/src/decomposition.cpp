#include "slength/decomposition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace slength {

bool space_member(const StanleySpace& s, const Monomial& m) {
  if (m.vars() != s.u.vars())
    throw std::invalid_argument("ambient variable counts differ");
  for (int j = 1; j <= m.vars(); ++j) {
    int e = m.exponent(j);
    int base = s.u.exponent(j);
    if (varset_contains(s.z, j) ? e < base : e != base) return false;
  }
  return true;
}

std::string to_string(const StanleySpace& s) {
  std::ostringstream os;
  os << to_string(s.u) << " K" << varset_to_string(s.z);
  return os.str();
}

void canonicalize(StanleyDecomposition& d) {
  std::sort(d.spaces.begin(), d.spaces.end(),
            [](const StanleySpace& a, const StanleySpace& b) {
              if (a.u != b.u) return canonical_less(a.u, b.u);
              return a.z < b.z;
            });
}

long long TruncationBox::point_count() const {
  long long total = 1;
  for (int g : cap) total *= g + 1;
  return total;
}

TruncationBox truncation_box(const StanleyDecomposition& d) {
  int n = d.module.vars();
  std::vector<int> top(n, 0);
  auto absorb = [&](const Monomial& m) {
    for (int j = 0; j < n; ++j) top[j] = std::max(top[j], m.exponents()[j]);
  };
  for (const Monomial& g : d.module.upper().generators()) absorb(g);
  for (const Monomial& g : d.module.lower().generators()) absorb(g);
  for (const StanleySpace& s : d.spaces) absorb(s.u);
  for (int j = 0; j < n; ++j) top[j] += 1;
  return TruncationBox{std::move(top)};
}

std::string to_string(VerifyFault f) {
  switch (f) {
    case VerifyFault::kNone: return "none";
    case VerifyFault::kUncovered: return "uncovered";
    case VerifyFault::kDoublyCovered: return "doubly-covered";
    case VerifyFault::kOutOfModule: return "out-of-module";
  }
  return "none";
}

VerifyResult verify(const StanleyDecomposition& d) {
  return verify(d, truncation_box(d));
}

VerifyResult verify(const StanleyDecomposition& d, const TruncationBox& box) {
  int n = d.module.vars();
  if (static_cast<int>(box.cap.size()) != n)
    throw std::invalid_argument("truncation box ambient mismatch");
  for (const StanleySpace& s : d.spaces) {
    if (s.u.vars() != n)
      throw std::invalid_argument("space ambient mismatch");
    if (!varset_subset(s.z, full_varset(n)))
      throw std::invalid_argument("space uses variables beyond the ambient ring");
  }
  // Walk the box in lex order so the first failure is the lex-smallest one.
  std::vector<int> e(n, 0);
  while (true) {
    Monomial m{e};
    int covered = 0;
    for (const StanleySpace& s : d.spaces)
      if (space_member(s, m)) ++covered;
    bool in_module = d.module.member(m);
    if (in_module && covered == 0)
      return {false, VerifyFault::kUncovered, m};
    if (in_module && covered > 1)
      return {false, VerifyFault::kDoublyCovered, m};
    if (!in_module && covered > 0)
      return {false, VerifyFault::kOutOfModule, m};
    int j = n - 1;
    while (j >= 0 && e[j] == box.cap[j]) e[j--] = 0;
    if (j < 0) break;
    ++e[j];
  }
  return {true, VerifyFault::kNone, std::nullopt};
}

Measure measure(const StanleyDecomposition& d) {
  if (d.spaces.empty()) throw std::domain_error("measure of an empty decomposition");
  Measure m;
  m.length = static_cast<int>(d.spaces.size());
  m.sdepth = varset_size(d.spaces[0].z);
  for (const StanleySpace& s : d.spaces)
    m.sdepth = std::min(m.sdepth, varset_size(s.z));
  return m;
}

StanleyDecomposition squarefree_normalize(const StanleyDecomposition& d) {
  if (!d.module.is_squarefree())
    throw std::domain_error("squarefree normalization needs a squarefree module");
  StanleyDecomposition out{d.module, {}};
  for (const StanleySpace& s : d.spaces) {
    if (!s.u.is_squarefree()) continue;
    out.spaces.push_back({s.u, s.z | s.u.support()});
  }
  return out;
}

}  // namespace slength
