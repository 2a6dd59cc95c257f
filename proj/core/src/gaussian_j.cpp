#include "stabcert/gaussian_j.hpp"

#include <cmath>

namespace stabcert::gauss {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt2Pi = 2.5066282746310005024;
constexpr double kInvSqrtPi = 0.56418958354775628695;

// erf via the everywhere-positive series erf(z) = (2/sqrt(pi)) e^{-z^2}
// sum_k 2^k z^{2k+1} / (1*3*...*(2k+1)); no cancellation.
double erf_series(double z) {
  double z2 = z * z;
  double term = z;
  double sum = z;
  for (int k = 1; k < 200; ++k) {
    term *= 2.0 * z2 / (2.0 * k + 1.0);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return 2.0 * kInvSqrtPi * std::exp(-z2) * sum;
}

// Laplace continued fraction for erfc(z), z >= 3 (modified Lentz).
double erfc_cf(double z) {
  const double tiny = 1e-300;
  double b = z;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int k = 1; k < 300; ++k) {
    double a = 0.5 * k;  // partial numerators k/2; all partial denominators z
    d = b + a * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = c * d;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-17) break;
  }
  return kInvSqrtPi * std::exp(-z * z) * h;
}

}  // namespace

double erfc_own(double z) {
  if (z < 0.0) return 2.0 - erfc_own(-z);
  if (z < 3.0) return 1.0 - erf_series(z);
  if (z > 27.0) return 0.0;  // below double underflow for erfc
  return erfc_cf(z);
}

double std_normal_cdf(double z) { return 0.5 * erfc_own(-z / kSqrt2); }

double std_normal_pdf(double z) { return std::exp(-0.5 * z * z) / kSqrt2Pi; }

double std_normal_inv_cdf(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("inverse cdf needs p in (0,1)");
  // Rational initial approximation (Acklam), then two Newton steps against
  // the implementation's own Phi.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425, phigh = 1 - plow;
  double x;
  if (p < plow) {
    double q = std::sqrt(-2 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  } else if (p <= phigh) {
    double q = p - 0.5, r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  } else {
    double q = std::sqrt(-2 * std::log(1 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  for (int it = 0; it < 2; ++it) {
    double e = std_normal_cdf(x) - p;
    double dens = std_normal_pdf(x);
    if (dens <= 0.0) break;
    x -= e / dens;
  }
  return x;
}

JEvaluator::JEvaluator(double rho, double quad_tolerance, double tail_cutoff)
    : rho_(rho), quad_tol_(quad_tolerance), cutoff_(tail_cutoff) {
  if (!(std::fabs(rho) < 1.0 - 1e-9))
    throw DomainError("|rho| >= 1-1e-9 not supported");
  if (!(quad_tol_ > 0.0)) throw DomainError("quad tolerance must be positive");
  root_ = std::sqrt(1.0 - rho_ * rho_);
}

void JEvaluator::check_domain(double x, double y) const {
  if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0))
    throw DomainError("J arguments must lie strictly inside (0,1)");
}

namespace {

struct Integrand {
  double rho, root, t;
  double operator()(double sp) const {
    return std_normal_pdf(sp) * std_normal_cdf((t - rho * sp) / root);
  }
};

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr int kGL = 15;
const double kGLx[kGL] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
    -0.7244177313601701, -0.5709721726085388, -0.3941513470775634,
    -0.2011940939974345, 0.0,                 0.2011940939974345,
    0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
const double kGLw[kGL] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
    0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
    0.1984314853271116, 0.2025782419255613, 0.1984314853271116,
    0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

double gl15(const Integrand& f, double a, double b) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < kGL; ++i) s += kGLw[i] * f(mid + half * kGLx[i]);
  return s * half;
}

double adaptive(const Integrand& f, double a, double b, double whole, double tol,
                int depth) {
  double mid = 0.5 * (a + b);
  double left = gl15(f, a, mid);
  double right = gl15(f, mid, b);
  double err = std::fabs(left + right - whole);
  if (err < tol || depth >= 28) return left + right;
  return adaptive(f, a, mid, left, tol * 0.5, depth + 1) +
         adaptive(f, mid, b, right, tol * 0.5, depth + 1);
}

}  // namespace

double JEvaluator::value(double x, double y) const {
  check_domain(x, y);
  double s = std_normal_inv_cdf(x);
  double t = std_normal_inv_cdf(y);
  double lo = -cutoff_;
  if (s <= lo) return 0.0;
  Integrand f{rho_, root_, t};
  // Initial split into a few panels keeps the adaptive recursion shallow.
  const int panels = 8;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    double a = lo + (s - lo) * i / panels;
    double b = lo + (s - lo) * (i + 1) / panels;
    total += adaptive(f, a, b, gl15(f, a, b), quad_tol_ / panels, 0);
  }
  return total;
}

JGrad JEvaluator::grad(double x, double y) const {
  check_domain(x, y);
  double s = std_normal_inv_cdf(x);
  double t = std_normal_inv_cdf(y);
  return {std_normal_cdf((t - rho_ * s) / root_),
          std_normal_cdf((s - rho_ * t) / root_)};
}

JHessian JEvaluator::hessian(double x, double y) const {
  check_domain(x, y);
  double s = std_normal_inv_cdf(x);
  double t = std_normal_inv_cdf(y);
  double u = (t - rho_ * s) / root_;
  double v = (s - rho_ * t) / root_;
  double dxx = std_normal_pdf(u) * (-rho_ / root_) / std_normal_pdf(s);
  double dyy = std_normal_pdf(v) * (-rho_ / root_) / std_normal_pdf(t);
  double dxy = std_normal_pdf(u) * (1.0 / root_) / std_normal_pdf(t);
  return {dxx, dxy, dyy};
}

JThird JEvaluator::third(double x, double y) const {
  check_domain(x, y);
  double s = std_normal_inv_cdf(x);
  double t = std_normal_inv_cdf(y);
  double r2 = 1.0 - rho_ * rho_;
  double pref = kSqrt2Pi * rho_ / (r2 * std::sqrt(r2));
  auto e = [&](double num) { return std::exp(-num / (2.0 * r2)); };
  double dxxx = pref * ((2 * rho_ * rho_ - 1) * s - rho_ * t) *
                e(t * t - 2 * rho_ * s * t + (3 * rho_ * rho_ - 2) * s * s);
  double dyyy = pref * ((2 * rho_ * rho_ - 1) * t - rho_ * s) *
                e(s * s - 2 * rho_ * s * t + (3 * rho_ * rho_ - 2) * t * t);
  double dxxy = pref * (t - rho_ * s) *
                e(rho_ * rho_ * t * t - 2 * rho_ * s * t +
                  (2 * rho_ * rho_ - 1) * s * s);
  double dxyy = pref * (s - rho_ * t) *
                e(rho_ * rho_ * s * s - 2 * rho_ * s * t +
                  (2 * rho_ * rho_ - 1) * t * t);
  return {dxxx, dxxy, dxyy, dyyy};
}

double JEvaluator::drho(double x, double y) const {
  check_domain(x, y);
  double s = std_normal_inv_cdf(x);
  double t = std_normal_inv_cdf(y);
  double r2 = 1.0 - rho_ * rho_;
  double dens = std::exp(-(s * s - 2 * rho_ * s * t + t * t) / (2.0 * r2)) /
                (2.0 * M_PI * std::sqrt(r2));
  double bound = std::pow(r2, -1.5);
  if (std::fabs(dens) > bound)
    throw DomainError("dJ/drho bound violated");  // cannot happen analytically
  return dens;
}

HessianLikeMatrix m_matrix(double rho, double sigma, double x, double y) {
  JEvaluator ev(rho);
  JHessian h = ev.hessian(x, y);
  return {h.dxx, sigma * h.dxy, h.dyy, rho, sigma, x, y};
}

Definiteness m_definiteness(const HessianLikeMatrix& m, double tol_scale) {
  double norm = std::sqrt(m.a * m.a + 2 * m.b * m.b + m.d * m.d);
  double tol = tol_scale * (norm + 1e-300);
  double tr = m.a + m.d;
  double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - (m.a * m.d - m.b * m.b)));
  double lo = 0.5 * tr - disc;
  double hi = 0.5 * tr + disc;
  bool psd = lo >= -tol;
  bool nsd = hi <= tol;
  if (psd && nsd) return Definiteness::kPSDAndNSD;
  if (psd) return Definiteness::kPSD;
  if (nsd) return Definiteness::kNSD;
  return Definiteness::kIndefinite;
}

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::kPSD: return "PSD";
    case Definiteness::kNSD: return "NSD";
    case Definiteness::kPSDAndNSD: return "PSD&NSD";
    default: return "indefinite";
  }
}

double sheppard_two_sided(double rho) {
  if (!(std::fabs(rho) <= 1.0)) throw DomainError("|rho| must be <= 1");
  return 1.0 - std::acos(rho) / M_PI;
}

}  // namespace stabcert::gauss
