#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabcert/polynomial.hpp"

namespace stabcert::sos {

struct ConstraintSet {
  unsigned nvars = 0;
  std::vector<Polynomial> equalities;    // p = 0
  std::vector<Polynomial> inequalities;  // q >= 0 (constant 1 implicit)
};

// Degree-d closures, deduplicated, in canonical order. closure_g includes the
// constant polynomial 1.
std::vector<Polynomial> closure_e(const ConstraintSet& a, unsigned d,
                                  std::size_t cap = 500000);
std::vector<Polynomial> closure_g(const ConstraintSet& a, unsigned d,
                                  std::size_t cap = 500000);

std::vector<Exponents> monomials_up_to(unsigned nvars, unsigned d);

// Explicit witness for A |-_d h >= 0: rational multiples of equality-closure
// elements plus sum-of-squares multipliers on inequality-closure elements.
struct SosCertificate {
  unsigned degree = 0;
  std::vector<std::pair<std::size_t, Rat>> equality_terms;
  std::vector<std::pair<std::size_t, std::vector<Polynomial>>> inequality_terms;
};

struct VerifyResult {
  bool valid = false;
  Polynomial residual;  // zero iff valid (when structure checks pass)
  std::string reason;
};

VerifyResult verify_certificate(const Polynomial& h, const ConstraintSet& a,
                                const SosCertificate& cert);
// Special case h = -1: a degree-d refutation of A.
VerifyResult verify_refutation(const ConstraintSet& a, const SosCertificate& cert);

// Assemble the certified polynomial sum exactly.
Polynomial assemble_certificate(const ConstraintSet& a, const SosCertificate& cert);

// ---- Certificate library (constructive appendix facts) ----

struct LibraryEntry {
  Polynomial h;
  ConstraintSet constraints;
  SosCertificate certificate;
  std::string description;
};

// bounded_power_upper:  1 - y^k >= 0 under -1 <= y <= 1 (k >= 1)
// bounded_power_lower:  1 + y^k >= 0 under -1 <= y <= 1 (odd k)
// square_minus_fourth:  y^2 - y^4 >= 0 under -1 <= y <= 1
// even_power_dominated: y^4 - y^{2k} >= 0 under -1 <= y <= 1 (k >= 2)
// mixed_power (m,n>=2): y^4 + z^4 - y^m z^n >= 0 under the box
// odd_mixed  (odd n>=3): y^4 + z^4 - y z^n >= 0 under the box
// product_bound:        z - x y style bound via z(1-x) + x(z-y)
LibraryEntry lib_bounded_power_upper(unsigned k);
LibraryEntry lib_bounded_power_lower(unsigned k);
LibraryEntry lib_square_minus_fourth();
LibraryEntry lib_even_power_dominated(unsigned k);
LibraryEntry lib_mixed_power(unsigned m, unsigned n);
LibraryEntry lib_odd_mixed(unsigned n);
LibraryEntry lib_product_bound();
// Substitution rule: p(sum lambda_i Z_i) >= 0 under 0 <= Z_i <= 1 from a
// certificate for p on [0,1]; lambdas nonnegative rationals summing to 1.
LibraryEntry lib_substitution_scaled_power(unsigned k,
                                           const std::vector<Rat>& lambdas);

std::vector<LibraryEntry> certificate_library_all();

// Composition rules: from certs for p >= 0 and q >= 0 over the same
// constraint set, emit certs for p + q >= 0 (max degree) and p * q >= 0
// (degree sum). The product uses pairwise products of squares and closure
// products; both results verify exactly.
LibraryEntry compose_sum(const LibraryEntry& a, const LibraryEntry& b);
LibraryEntry compose_product(const LibraryEntry& a, const LibraryEntry& b);

// ---- Pseudo-expectations ----

struct PseudoExpectation {
  unsigned nvars = 0;
  unsigned degree = 0;
  Polynomial::TermMap moments;  // monomial -> E~ value, E~(1) = 1

  Rat apply(const Polynomial& p) const;  // throws on missing moments
};

struct PeCheckReport {
  bool equalities_ok = false;
  bool cone_ok = false;
  double worst_equality = 0.0;
  double min_eigenvalue = 0.0;
  bool ok = false;
  std::string detail;
};

// Equality conditions within 1e-10; cone condition via localized moment
// matrices M[u,v] = E~(u v h), min eigenvalue >= -1e-8 (1 + trace), cyclic
// Jacobi eigensolver.
PeCheckReport check_pseudo_expectation(const PseudoExpectation& pe,
                                       const ConstraintSet& a);

// Moment table of the uniform measure on {-1,1}^n restricted to monomials of
// degree <= d (test and witness support).
PseudoExpectation cube_uniform_moments(unsigned nvars, unsigned degree);
// Point mass at a rational point.
PseudoExpectation point_mass_moments(std::span<const Rat> point, unsigned degree);

}  // namespace stabcert::sos
