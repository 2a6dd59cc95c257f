#pragma once

#include <array>

#include "stabcert/rational.hpp"

namespace stabcert::gauss {

// Standard normal CDF/PDF/inverse CDF. Phi is built on an in-repo erfc
// (series for small arguments, Laplace continued fraction for the tail).
double std_normal_cdf(double z);
double std_normal_pdf(double z);
double std_normal_inv_cdf(double p);
double erfc_own(double z);

struct JGrad {
  double dx, dy;
};

struct JHessian {
  double dxx, dxy, dyy;
};

struct JThird {
  double dxxx, dxxy, dxyy, dyyy;
};

// J_rho(x, y) = P[X <= Phi^{-1}(x), Y <= Phi^{-1}(y)] for a standard bivariate
// normal pair with correlation rho, evaluated in CDF coordinates.
class JEvaluator {
 public:
  explicit JEvaluator(double rho, double quad_tolerance = 1e-12,
                      double tail_cutoff = 8.5);

  double rho() const { return rho_; }
  double quad_tolerance() const { return quad_tol_; }

  double value(double x, double y) const;
  JGrad grad(double x, double y) const;
  JHessian hessian(double x, double y) const;
  JThird third(double x, double y) const;
  // dJ/drho; equals the bivariate normal density at (Phi^{-1}x, Phi^{-1}y).
  // |dJ/drho| <= (1-rho^2)^{-3/2} always holds and is asserted.
  double drho(double x, double y) const;

 private:
  void check_domain(double x, double y) const;
  double rho_, quad_tol_, cutoff_, root_;  // root_ = sqrt(1-rho^2)
};

enum class Definiteness { kPSD, kNSD, kPSDAndNSD, kIndefinite };

struct HessianLikeMatrix {
  double a, b, d;  // [[a, b], [b, d]]
  double rho, sigma, x, y;
};

HessianLikeMatrix m_matrix(double rho, double sigma, double x, double y);
Definiteness m_definiteness(const HessianLikeMatrix& m, double tol_scale = 1e-9);
const char* definiteness_name(Definiteness d);

// Sheppard: limiting two-sided majority stability 1 - arccos(rho)/pi.
double sheppard_two_sided(double rho);

}  // namespace stabcert::gauss
