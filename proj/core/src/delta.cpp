#include "stabcert/delta.hpp"

#include <bit>
#include <cmath>
#include <span>

namespace stabcert::delta {

namespace {

struct DeltaMean {
  Rat delta;
  Rat mean;
};

DeltaMean delta_span(std::span<const Rat> t) {
  if (t.size() == 2) {
    Rat d = t[0] - t[1];
    return {abs_cubed(d) / 8, (t[0] + t[1]) / 2};
  }
  auto half = t.size() / 2;
  DeltaMean left = delta_span(t.subspan(0, half));   // X_n = +1 (top bit 0)
  DeltaMean right = delta_span(t.subspan(half));     // X_n = -1
  Rat d = left.mean - right.mean;
  return {(left.delta + right.delta) / 2 + abs_cubed(d) / 8,
          (left.mean + right.mean) / 2};
}

}  // namespace

Rat delta_recursive(const BooleanFunction& f) {
  return delta_span(std::span<const Rat>(f.values())).delta;
}

Rat delta_fourier(const BooleanFunction& f) {
  const unsigned n = f.n();
  const auto& v = f.values();
  Rat total = 0;
  for (unsigned i = 1; i <= n; ++i) {
    const std::size_t block = std::size_t{1} << i;
    const std::size_t half = block >> 1;  // entries with x_i = +1 come first
    Rat acc = 0;
    for (std::size_t base = 0; base < v.size(); base += block) {
      Rat diff = 0;
      for (std::size_t off = 0; off < half; ++off)
        diff += v[base + off] - v[base + half + off];
      // fhat_X({i}) = diff / 2^i
      Rat coeff = diff / Rat(static_cast<unsigned long>(block));
      acc += abs_cubed(coeff);
    }
    // average over the 2^{n-i} restrictions
    total += acc / Rat(static_cast<unsigned long>(v.size() / block));
  }
  return total;
}

Rat flip_bound(const BooleanFunction& f) {
  const auto& v = f.values();
  Rat total = 0;
  for (unsigned i = 0; i < f.n(); ++i) {
    std::size_t bit = std::size_t{1} << i;
    Rat acc = 0;
    for (std::size_t x = 0; x < v.size(); ++x) acc += abs_cubed(v[x] - v[x ^ bit]);
    total += acc / Rat(static_cast<unsigned long>(v.size()));
  }
  return total;
}

DeltaReport delta_report(const BooleanFunction& f, const std::optional<Rat>& sigma) {
  DeltaReport rep;
  rep.delta_recursive = delta_recursive(f);
  rep.delta_fourier = delta_fourier(f);
  rep.flip_bound = flip_bound(f);
  FourierExpansion fe = cube::fourier_transform(f);
  rep.max_influence = cube::max_influence(fe);
  if (sigma) {
    rep.hyper_bound = delta_hyper_bound(f, *sigma).rhs;
  }
  return rep;
}

Rat restriction_coefficient(const BooleanFunction& f, std::uint32_t s_mask,
                            std::uint32_t x_assignment, std::uint32_t u_mask) {
  if (s_mask & u_mask) throw DomainError("S and U must be disjoint");
  FourierExpansion fe = cube::fourier_transform(f);
  // Identity route: sum over T in S of chi_T(x) fhat(T u U).
  Rat by_identity = 0;
  for (std::uint32_t t = s_mask;; t = (t - 1) & s_mask) {
    int sign = std::popcount(t & x_assignment) % 2 == 0 ? 1 : -1;
    by_identity += sign * fe[t | u_mask];
    if (t == 0) break;
  }
  // Direct route: restrict, transform, read the relabeled U coefficient.
  BooleanFunction fx = cube::restrict_function(f, s_mask, x_assignment);
  FourierExpansion fxe = cube::fourier_transform(fx);
  std::uint32_t u_relabeled = 0;
  unsigned new_bit = 0;
  for (unsigned j = 0; j < f.n(); ++j) {
    if ((s_mask >> j) & 1u) continue;
    if ((u_mask >> j) & 1u) u_relabeled |= (1u << new_bit);
    ++new_bit;
  }
  Rat direct = fxe[u_relabeled];
  if (direct != by_identity)
    throw DomainError("restriction coefficient identity violated");
  return direct;
}

SquaredRestrictionStats squared_restriction_stats(const BooleanFunction& f,
                                                  std::uint32_t u_mask,
                                                  std::uint32_t s_mask,
                                                  unsigned i) {
  if (s_mask & u_mask) throw DomainError("S and U must be disjoint");
  if (i < 1 || i > f.n() || !((u_mask >> (i - 1)) & 1u))
    throw DomainError("influence bound needs i in U");
  FourierExpansion fe = cube::fourier_transform(f);
  Rat subset_sum = 0;
  for (std::uint32_t t = s_mask;; t = (t - 1) & s_mask) {
    Rat c = fe[t | u_mask];
    subset_sum += c * c;
    if (t == 0) break;
  }
  // Direct second moment by enumerating restrictions.
  std::uint32_t u_relabeled = 0;
  unsigned new_bit = 0;
  for (unsigned j = 0; j < f.n(); ++j) {
    if ((s_mask >> j) & 1u) continue;
    if ((u_mask >> j) & 1u) u_relabeled |= (1u << new_bit);
    ++new_bit;
  }
  Rat second = 0;
  std::uint32_t count = 0;
  for (std::uint32_t x = s_mask;; x = (x - 1) & s_mask) {
    BooleanFunction fx = cube::restrict_function(f, s_mask, x);
    FourierExpansion fxe = cube::fourier_transform(fx);
    Rat c = fxe[u_relabeled];
    second += c * c;
    ++count;
    if (x == 0) break;
  }
  second /= Rat(static_cast<unsigned long>(count));
  bool bound_ok = second <= cube::influence(fe, i);
  return {second, subset_sum, bound_ok};
}

bool variance_identity(const BooleanFunction& f) {
  const unsigned n = f.n();
  const auto& v = f.values();
  Rat chain = 0;
  for (unsigned i = 1; i <= n; ++i) {
    const std::size_t block = std::size_t{1} << i;
    const std::size_t half = block >> 1;
    Rat acc = 0;
    for (std::size_t base = 0; base < v.size(); base += block) {
      Rat diff = 0;
      for (std::size_t off = 0; off < half; ++off)
        diff += v[base + off] - v[base + half + off];
      Rat coeff = diff / Rat(static_cast<unsigned long>(block));
      acc += coeff * coeff;
    }
    chain += acc / Rat(static_cast<unsigned long>(v.size() / block));
  }
  return chain == f.variance();
}

bool noise_restriction_commute(const BooleanFunction& f, const Rat& sigma,
                               std::uint32_t s_mask, std::uint32_t u_mask) {
  if (s_mask & u_mask) throw DomainError("S and U must be disjoint");
  const unsigned n = f.n();
  FourierExpansion fe = cube::fourier_transform(f);
  FourierExpansion tsf = cube::noise_operator(fe, sigma);
  BooleanFunction g = cube::inverse_transform(tsf, cube::RangeTag::kUnrestricted);

  std::uint32_t u_relabeled = 0;
  unsigned new_bit = 0;
  for (unsigned j = 0; j < n; ++j) {
    if ((s_mask >> j) & 1u) continue;
    if ((u_mask >> j) & 1u) u_relabeled |= (1u << new_bit);
    ++new_bit;
  }

  // Left side: expand x -> (T_sigma f)_x^(U) as a function over cube(S) via
  // direct restriction transforms, then convert the value table to chi_T
  // coefficients.
  std::vector<unsigned> s_bits;
  for (unsigned j = 0; j < n; ++j)
    if ((s_mask >> j) & 1u) s_bits.push_back(j);
  const std::size_t s_size = std::size_t{1} << s_bits.size();
  std::vector<Rat> lhs_values(s_size);
  for (std::size_t xi = 0; xi < s_size; ++xi) {
    std::uint32_t assignment = 0;
    for (std::size_t b = 0; b < s_bits.size(); ++b)
      if ((xi >> b) & 1u) assignment |= (1u << s_bits[b]);
    BooleanFunction gx = cube::restrict_function(g, s_mask, assignment);
    FourierExpansion gxe = cube::fourier_transform(gx);
    lhs_values[xi] = gxe[u_relabeled];
  }
  cube::walsh_hadamard(lhs_values);
  Rat inv(1, static_cast<unsigned long>(s_size));
  inv.canonicalize();
  for (Rat& c : lhs_values) c *= inv;

  // Right side: sigma^{|U|} T_sigma(fhat_x(U)); coefficient on chi_T equals
  // sigma^{|U|+|T|} fhat(T u U).
  unsigned u_card = static_cast<unsigned>(std::popcount(u_mask));
  for (std::size_t ti = 0; ti < s_size; ++ti) {
    std::uint32_t t_mask = 0;
    for (std::size_t b = 0; b < s_bits.size(); ++b)
      if ((ti >> b) & 1u) t_mask |= (1u << s_bits[b]);
    unsigned t_card = static_cast<unsigned>(std::popcount(t_mask));
    Rat rhs = rat_pow(sigma, u_card + t_card) * fe[t_mask | u_mask];
    if (lhs_values[ti] != rhs) return false;
  }
  return true;
}

HyperBoundReport delta_hyper_bound(const BooleanFunction& f, const Rat& sigma) {
  if (2 * sigma * sigma < 1)
    throw DomainError("hypothesis requires sigma^2 >= 1/2");
  for (const Rat& v : f.values())
    if (v < -1 || v > 1) throw DomainError("values must lie in [-1,1]");
  FourierExpansion fe = cube::fourier_transform(f);
  FourierExpansion noisy = cube::noise_operator(fe, sigma);
  BooleanFunction tf = cube::inverse_transform(noisy, cube::RangeTag::kUnrestricted);
  HyperBoundReport rep;
  rep.lhs = delta_fourier(tf);
  double s2 = to_double(sigma) * to_double(sigma);
  double tau = to_double(cube::max_influence(fe));
  double expo = (1.0 - s2) / (2.0 * s2);
  rep.rhs = (tau <= 0.0) ? (expo == 0.0 ? 1.0 : 0.0) : std::pow(tau, expo);
  rep.ok = to_double(rep.lhs) <= rep.rhs + 1e-12;
  return rep;
}

}  // namespace stabcert::delta
