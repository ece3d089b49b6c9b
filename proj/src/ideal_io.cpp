#include "slength/ideal_io.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

#include "slength/errors.hpp"

namespace slength {

namespace {

// Cursor over the input that tracks line/column for error messages.
class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  char take() {
    char c = peek();
    if (pos_ < text_.size()) {
      ++pos_;
      ++col_;
    }
    return c;
  }

  void expect(char c) {
    if (peek() != c) {
      std::ostringstream msg;
      msg << "expected '" << c << "'";
      fail(msg.str());
    }
    take();
  }

  // Accepts a single keyword character case-insensitively.
  bool accept_ci(char c) {
    if (std::tolower(static_cast<unsigned char>(peek())) !=
        std::tolower(static_cast<unsigned char>(c)))
      return false;
    take();
    return true;
  }

  int integer(const char* what) {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::ostringstream msg;
      msg << "expected " << what;
      fail(msg.str());
    }
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000) fail("number out of range");
      ++pos_;
      ++col_;
    }
    return static_cast<int>(value);
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, line_, col_); }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

Monomial scan_monomial(Scanner& s, int n) {
  std::vector<int> e(n, 0);
  if (s.peek() == '1') {
    s.take();
    return Monomial(std::move(e));
  }
  bool first = true;
  while (true) {
    if (!first) s.expect('*');
    if (!s.accept_ci('x')) s.fail("expected a factor x<idx>");
    int idx = s.integer("a variable index");
    if (idx < 1 || idx > n) {
      std::ostringstream msg;
      msg << "variable index " << idx << " outside 1.." << n;
      s.fail(msg.str());
    }
    int exp = 1;
    if (s.peek() == '^') {
      s.take();
      exp = s.integer("an exponent");
      if (exp < 1) s.fail("exponents must be positive");
    }
    e[idx - 1] += exp;
    first = false;
    if (s.peek() != '*') break;
  }
  return Monomial(std::move(e));
}

std::vector<Monomial> scan_list(Scanner& s, int n) {
  std::vector<Monomial> out;
  out.push_back(scan_monomial(s, n));
  while (s.peek() == ',') {
    s.take();
    out.push_back(scan_monomial(s, n));
  }
  return out;
}

void note_dropped(const std::vector<Monomial>& raw, const MonomialIdeal& kept,
                  const char* name, std::vector<std::string>& warnings) {
  for (const Monomial& m : raw) {
    bool minimal = false;
    for (const Monomial& g : kept.generators())
      if (g == m) minimal = true;
    if (!minimal) {
      std::ostringstream msg;
      msg << "redundant generator " << to_string(m) << " dropped from " << name;
      warnings.push_back(msg.str());
    }
  }
}

}  // namespace

ParsedModule parse_module(const std::string& text) {
  Scanner s(text);
  if (!s.accept_ci('n')) s.fail("expected 'n='");
  s.expect('=');
  int n = s.integer("the variable count");
  if (n < 1) s.fail("need at least one variable");
  if (n > kMaxVariables) s.fail("at most 64 variables are supported");
  s.expect(';');

  if (!s.accept_ci('j')) s.fail("expected 'J ='");
  s.expect('=');
  std::vector<Monomial> j_gens = scan_list(s, n);
  s.expect(';');

  std::vector<Monomial> i_gens;
  bool has_i = false;
  if (!s.done()) {
    if (!s.accept_ci('i')) s.fail("expected 'I =' or end of input");
    s.expect('=');
    i_gens = scan_list(s, n);
    s.expect(';');
    has_i = true;
    if (!s.done()) s.fail("trailing input");
  }

  std::vector<std::string> warnings;
  MonomialIdeal j(n, j_gens);
  note_dropped(j_gens, j, "J", warnings);
  MonomialIdeal i = MonomialIdeal::zero(n);
  if (has_i) {
    i = MonomialIdeal(n, i_gens);
    note_dropped(i_gens, i, "I", warnings);
  }
  return {QuotientModule(std::move(j), std::move(i)), std::move(warnings)};
}

Monomial parse_monomial(const std::string& text, int n) {
  Scanner s(text);
  Monomial m = scan_monomial(s, n);
  if (!s.done()) s.fail("trailing input");
  return m;
}

std::string render_module(const QuotientModule& q) {
  std::ostringstream out;
  out << "n=" << q.vars() << "; J = ";
  const std::vector<Monomial>& j = q.upper().generators();
  if (j.empty()) {
    out << "0";  // never produced by the parser, but renderable
  } else {
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k) out << ", ";
      out << to_string(j[k]);
    }
  }
  out << ";";
  if (!q.lower().is_zero()) {
    out << " I = ";
    const std::vector<Monomial>& i = q.lower().generators();
    for (std::size_t k = 0; k < i.size(); ++k) {
      if (k) out << ", ";
      out << to_string(i[k]);
    }
    out << ";";
  }
  return out.str();
}

std::string input_hash(const std::string& canonical_text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical_text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xf);
  return out.str();
}

std::string input_hash(const QuotientModule& q) { return input_hash(render_module(q)); }

}  // namespace slength
