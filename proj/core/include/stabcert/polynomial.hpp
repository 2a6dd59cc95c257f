#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "stabcert/rational.hpp"

namespace stabcert::sos {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

// Graded lexicographic order, fixed globally for closure indexing and
// certificate serialization.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rat, GradedLexLess>;

  explicit Polynomial(unsigned nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(unsigned nvars, const Rat& c);
  static Polynomial variable(unsigned nvars, unsigned index);  // x_{index}
  static Polynomial monomial(unsigned nvars, Exponents e, const Rat& c);

  unsigned nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;  // 0 for the zero polynomial
  Rat coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rat& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rat& c) const;
  Polynomial pow(unsigned e) const;

  Rat eval(std::span<const Rat> point) const;
  double eval_double(std::span<const double> point) const;

  // Substitute variable `index` by `repl` (same variable space).
  Polynomial substitute(unsigned index, const Polynomial& repl) const;

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator<(const Polynomial& o) const;  // canonical order for dedup

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  unsigned nvars_;
  TermMap terms_;
};

}  // namespace stabcert::sos
