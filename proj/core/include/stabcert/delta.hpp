#pragma once

#include <cstdint>
#include <optional>

#include "stabcert/boolean_function.hpp"
#include "stabcert/fourier.hpp"

namespace stabcert::delta {

using cube::BooleanFunction;
using cube::FourierExpansion;

// Delta_n via the defining recursion on the last coordinate:
// Delta_1(f) = E|f - Ef|^3, Delta_n(f) = E_{X_n} Delta_{n-1}(f_{X_n}) +
// Delta_1(E[f_{X_n}|X_n]). Exact rational.
Rat delta_recursive(const BooleanFunction& f);

// Same value through the restricted-coefficient identity:
// Delta_n(f) = sum_i E_{X on {i+1..n}} |fhat_X(i)|^3.
Rat delta_fourier(const BooleanFunction& f);

// Upper bound sum_i E|f(X) - f(X^{-i})|^3 >= Delta_n(f).
Rat flip_bound(const BooleanFunction& f);

struct DeltaReport {
  Rat delta_recursive;
  Rat delta_fourier;
  Rat flip_bound;
  Rat max_influence;
  std::optional<double> hyper_bound;  // present when sigma supplied
};

DeltaReport delta_report(const BooleanFunction& f,
                         const std::optional<Rat>& sigma = std::nullopt);

// fhat_x(U) two independent ways: by restricting and transforming, and by the
// subset-sum identity fhat_x(U) = sum_{T in S} chi_T(x) fhat(T u U).
// Throws if the two disagree (they cannot).
Rat restriction_coefficient(const BooleanFunction& f, std::uint32_t s_mask,
                            std::uint32_t x_assignment, std::uint32_t u_mask);

struct SquaredRestrictionStats {
  Rat second_moment;          // E_{X on S} |fhat_X(U)|^2
  Rat subset_sum;             // sum_{T in S} fhat^2(T u U), must equal above
  bool influence_bound_ok;    // second_moment <= Inf_i(f) for the given i in U
};

SquaredRestrictionStats squared_restriction_stats(const BooleanFunction& f,
                                                  std::uint32_t u_mask,
                                                  std::uint32_t s_mask,
                                                  unsigned i);

// sum_i E_{X on S_i} |fhat_X(i)|^2 == Var(f), exactly.
bool variance_identity(const BooleanFunction& f);

// T_sigma commutes with restriction up to sigma^{|U|}, as polynomials in the
// restricted variables; exact comparison of both expansions.
bool noise_restriction_commute(const BooleanFunction& f, const Rat& sigma,
                               std::uint32_t s_mask, std::uint32_t u_mask);

struct HyperBoundReport {
  Rat lhs;      // Delta_n(T_sigma f)
  double rhs;   // (max_i Inf_i(f))^{(1-sigma^2)/(2 sigma^2)}
  bool ok;
};

// Claim hypothesis: 1 + sigma^{-2} <= 3, i.e. sigma^2 >= 1/2; f in [-1,1].
HyperBoundReport delta_hyper_bound(const BooleanFunction& f, const Rat& sigma);

}  // namespace stabcert::delta
