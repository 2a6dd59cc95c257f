#include "stabcert/tensor_checks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include "stabcert/delta.hpp"
#include "stabcert/fourier.hpp"

namespace stabcert::tensor {

using gauss::JEvaluator;

double base_case_constant(double rho, double eps, unsigned grid) {
  JEvaluator ev(rho);
  double sup = 0.0;
  for (unsigned i = 0; i <= grid; ++i) {
    double x = eps + (1 - 2 * eps) * i / grid;
    for (unsigned j = 0; j <= grid; ++j) {
      double y = eps + (1 - 2 * eps) * j / grid;
      gauss::JThird t = ev.third(x, y);
      sup = std::max({sup, std::fabs(t.dxxx), std::fabs(t.dxxy),
                      std::fabs(t.dxyy), std::fabs(t.dyyy)});
    }
  }
  return sup * 1.01;
}

InequalityReport check_base_case(const std::vector<PairAtom>& atoms, double rho,
                                 double eps) {
  InequalityReport rep;
  double w_total = 0.0, ex = 0.0, ey = 0.0;
  for (const auto& a : atoms) {
    if (a.x < eps - 1e-15 || a.x > 1 - eps + 1e-15 || a.y < eps - 1e-15 ||
        a.y > 1 - eps + 1e-15)
      throw DomainError("atom outside [eps,1-eps]^2");
    if (a.weight < 0) throw DomainError("negative atom weight");
    w_total += a.weight;
    ex += a.weight * a.x;
    ey += a.weight * a.y;
  }
  if (std::fabs(w_total - 1.0) > 1e-12) throw DomainError("weights must sum to 1");
  double vx = 0.0, vy = 0.0, cov = 0.0, m3x = 0.0, m3y = 0.0;
  for (const auto& a : atoms) {
    double dx = a.x - ex, dy = a.y - ey;
    vx += a.weight * dx * dx;
    vy += a.weight * dy * dy;
    cov += a.weight * dx * dy;
    m3x += a.weight * std::fabs(dx) * dx * dx;
    m3y += a.weight * std::fabs(dy) * dy * dy;
  }
  double corr = (vx > 0 && vy > 0) ? cov / std::sqrt(vx * vy) : 0.0;
  if (corr < -1e-12 || corr > rho + 1e-12)
    throw DomainError("sample correlation outside [0, rho]");

  JEvaluator ev(rho);
  double lhs = 0.0;
  for (const auto& a : atoms) lhs += a.weight * ev.value(a.x, a.y);
  double c_used = base_case_constant(rho, eps) * (8.0 / 6.0);
  rep.lhs = lhs;
  rep.rhs_main = ev.value(ex, ey);
  rep.error_term = c_used * (m3x + m3y);
  rep.constant_used = c_used;
  rep.ok = rep.lhs <= rep.rhs_main + rep.error_term + 1e-9;
  if (!rep.ok) {
    std::ostringstream os;
    os << "EX=" << ex << " EY=" << ey << " corr=" << corr;
    rep.witness = os.str();
  }
  return rep;
}

namespace {

// Exhaustive E J(f(X), g(Y)) for rho-correlated cube pairs, with a value-pair
// memo (structured functions take few distinct values).
double correlated_j_expectation(const BooleanFunction& f, const BooleanFunction& g,
                                const Rat& rho, JEvaluator& ev) {
  const unsigned n = f.n();
  Rat agree = (1 + rho) / 4, disagree = (1 - rho) / 4;
  std::map<std::pair<double, double>, double> memo;
  double total = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      unsigned d = static_cast<unsigned>(std::popcount(x ^ y));
      Rat w = rat_pow(agree, n - d) * rat_pow(disagree, d);
      std::pair<double, double> key{to_double(f[x]), to_double(g[y])};
      auto it = memo.find(key);
      double jv;
      if (it == memo.end()) {
        jv = ev.value(key.first, key.second);
        memo.emplace(key, jv);
      } else {
        jv = it->second;
      }
      total += to_double(w) * jv;
    }
  }
  return total;
}

}  // namespace

InequalityReport check_tensorization(const BooleanFunction& f,
                                     const BooleanFunction& g, const Rat& rho,
                                     double eps) {
  if (f.n() != g.n()) throw DomainError("dimension mismatch");
  if (f.n() > 8) throw ResourceError("exhaustive tensorization check needs n <= 8");
  for (const Rat& v : f.values())
    if (to_double(v) < eps - 1e-15 || to_double(v) > 1 - eps + 1e-15)
      throw DomainError("f range outside [eps,1-eps]");
  for (const Rat& v : g.values())
    if (to_double(v) < eps - 1e-15 || to_double(v) > 1 - eps + 1e-15)
      throw DomainError("g range outside [eps,1-eps]");
  double rho_d = to_double(rho);
  if (!(rho_d > 0 && rho_d < 1)) throw DomainError("rho must lie in (0,1)");

  JEvaluator ev(rho_d);
  InequalityReport rep;
  rep.lhs = correlated_j_expectation(f, g, rho, ev);
  rep.rhs_main = ev.value(to_double(f.mean()), to_double(g.mean()));
  double c_used = base_case_constant(rho_d, eps) * (8.0 / 6.0);
  double deltas =
      to_double(delta::delta_recursive(f)) + to_double(delta::delta_recursive(g));
  rep.error_term = c_used * deltas;
  rep.constant_used = c_used;
  rep.ok = rep.lhs <= rep.rhs_main + rep.error_term + 1e-9;
  if (!rep.ok) {
    std::ostringstream os;
    os << "lhs=" << rep.lhs << " rhs=" << rep.rhs_main + rep.error_term;
    rep.witness = os.str();
  }
  return rep;
}

MistReport check_mist(const BooleanFunction& f, const Rat& rho, double c_rho) {
  double rho_d = to_double(rho);
  if (!(rho_d > 0 && rho_d < 1)) throw DomainError("rho must lie in (0,1)");
  if (f.range_tag() != cube::RangeTag::kUnitInterval)
    throw DomainError("mist check requires f in [0,1]");
  cube::FourierExpansion fe = cube::fourier_transform(f);
  MistReport rep;
  rep.s_rho = to_double(cube::stability_bilinear(fe, fe, rho));
  double ef = to_double(f.mean());
  JEvaluator ev(rho_d);
  if (ef <= 0.0 || ef >= 1.0) {
    // Boundary mean: J(0,0)=0, J(1,1)=1 by continuity.
    rep.j_value = (ef <= 0.0) ? 0.0 : 1.0;
  } else {
    rep.j_value = ev.value(ef, ef);
  }
  rep.tau = to_double(cube::max_influence(fe));
  rep.gap = rep.s_rho - rep.j_value;
  rep.constant_used = c_rho;
  if (rep.tau <= 0.0) {
    rep.error_term = 0.0;
    rep.ok = rep.s_rho <= rep.j_value + 1e-9;
  } else {
    double li = std::log(1.0 / rep.tau);
    rep.error_term = li > 1.0 ? c_rho * std::log(li) / li : c_rho;
    rep.ok = rep.s_rho <= rep.j_value + rep.error_term + 1e-9;
  }
  return rep;
}

BorellReport borell_block_check(const GridFunction& f1, const GridFunction& f2,
                                double rho, unsigned d, unsigned m,
                                std::size_t trials, std::uint64_t seed) {
  if (d < 1 || d > 3) throw DomainError("d must be in {1,2,3}");
  JEvaluator ev(rho);
  CounterRng rng(seed);
  double root = std::sqrt(1 - rho * rho);

  double sum_j = 0.0, sum_j2 = 0.0, sum_f1 = 0.0, sum_f2 = 0.0;
  double block_sum_j = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::array<double, 3> g1{0, 0, 0}, g2{0, 0, 0};
    for (unsigned j = 0; j < d; ++j) {
      double a = rng.next_gaussian();
      double b = rho * a + root * rng.next_gaussian();
      g1[j] = a;
      g2[j] = b;
    }
    double v1 = f1(g1), v2 = f2(g2);
    double jv = ev.value(v1, v2);
    sum_j += jv;
    sum_j2 += jv * jv;
    sum_f1 += v1;
    sum_f2 += v2;

    if (m > 0) {
      std::array<double, 3> h1{0, 0, 0}, h2{0, 0, 0};
      for (unsigned j = 0; j < d; ++j) {
        long sx = 0, sy = 0;
        for (unsigned r = 0; r < m; ++r) {
          int x = (rng.next() & 1) ? 1 : -1;
          int y = (rng.next_unit() < (1 + rho) / 2) ? x : -x;
          sx += x;
          sy += y;
        }
        h1[j] = sx / std::sqrt(static_cast<double>(m));
        h2[j] = sy / std::sqrt(static_cast<double>(m));
      }
      block_sum_j += ev.value(f1(h1), f2(h2));
    }
  }
  BorellReport rep;
  double n = static_cast<double>(trials);
  rep.lhs = sum_j / n;
  rep.stderr_lhs = std::sqrt(std::max(0.0, sum_j2 / n - rep.lhs * rep.lhs) / n);
  rep.rhs = ev.value(std::clamp(sum_f1 / n, 1e-12, 1 - 1e-12),
                     std::clamp(sum_f2 / n, 1e-12, 1 - 1e-12));
  rep.block_lhs = m > 0 ? block_sum_j / n : 0.0;
  rep.ok = rep.lhs <= rep.rhs + 3 * rep.stderr_lhs;
  return rep;
}

}  // namespace stabcert::tensor
