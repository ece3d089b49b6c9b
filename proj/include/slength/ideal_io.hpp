#pragma once

#include <string>
#include <vector>

#include "slength/ideal.hpp"

namespace slength {

// Input grammar, whitespace-insensitive:
//   n=<int>; J = <monomials>; [ I = <monomials>; ]
// where <monomials> is a comma-separated list and each monomial is factors
// x<idx>[^<exp>] joined by '*' (the literal 1 is the unit monomial).
// Omitting I yields the plain ideal J/0.
struct ParsedModule {
  QuotientModule module;
  // e.g. redundant generators that minimalization removed.
  std::vector<std::string> warnings;
};

ParsedModule parse_module(const std::string& text);

Monomial parse_monomial(const std::string& text, int n);

// Canonical text form of the module in the input grammar.
std::string render_module(const QuotientModule& q);

// Stable 64-bit FNV-1a hash of the canonical rendering, as lowercase hex.
std::string input_hash(const QuotientModule& q);
std::string input_hash(const std::string& canonical_text);

}  // namespace slength
