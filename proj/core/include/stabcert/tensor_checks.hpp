#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "stabcert/boolean_function.hpp"
#include "stabcert/gaussian_j.hpp"

namespace stabcert::tensor {

using cube::BooleanFunction;

struct InequalityReport {
  double lhs = 0.0;
  double rhs_main = 0.0;
  double error_term = 0.0;
  double constant_used = 0.0;
  bool ok = false;
  std::string witness;
};

// Grid sup over [eps,1-eps]^2 of the four third partials of J_rho, times a
// 1.01 safety factor. The computable stand-in for the Taylor constant.
double base_case_constant(double rho, double eps, unsigned grid = 200);

struct PairAtom {
  double x, y, weight;
};

// E J(X,Y) <= J(EX,EY) + C (E|X-EX|^3 + E|Y-EY|^3) for a finite pair
// distribution with values in [eps,1-eps] and correlation in [0,rho];
// C = base_case_constant * 8/6 (Taylor remainder bookkeeping).
InequalityReport check_base_case(const std::vector<PairAtom>& atoms, double rho,
                                 double eps);

// E J(f(X),g(Y)) over exhaustive rho-correlated pairs vs
// J(Ef,Eg) + C (Delta_n(f) + Delta_n(g)).
InequalityReport check_tensorization(const BooleanFunction& f,
                                     const BooleanFunction& g, const Rat& rho,
                                     double eps);

struct MistReport {
  double s_rho = 0.0;       // one-sided E f(x) f(y)
  double j_value = 0.0;     // J_rho(Ef, Ef)
  double tau = 0.0;         // max Fourier-weight influence
  double gap = 0.0;         // s_rho - j_value
  double error_term = 0.0;  // C loglog(1/tau)/log(1/tau), 0 when tau = 0
  double constant_used = 0.0;
  bool ok = false;
};

// Majority-is-stablest style check with a configurable, non-certified C(rho).
MistReport check_mist(const BooleanFunction& f, const Rat& rho,
                      double c_rho = 0.1);

using GridFunction = std::function<double(const std::array<double, 3>&)>;

struct BorellReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double stderr_lhs = 0.0;
  double block_lhs = 0.0;  // finite-m cube-approximation estimate
  bool ok = false;
};

// Monte-Carlo check of E J(f1(G1), f2(G2)) <= J(E f1, E f2) for rho-correlated
// Gaussian vectors, plus the finite-m block-sum approximation.
BorellReport borell_block_check(const GridFunction& f1, const GridFunction& f2,
                                double rho, unsigned d, unsigned m,
                                std::size_t trials, std::uint64_t seed);

}  // namespace stabcert::tensor
