#include "stabcert/fourier.hpp"

#include <bit>

namespace stabcert::cube {

FourierExpansion::FourierExpansion(unsigned n, std::vector<Rat> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != (std::size_t{1} << n_))
    throw DomainError("coefficient table must have length 2^n");
}

void walsh_hadamard(std::vector<Rat>& a) {
  const std::size_t size = a.size();
  for (std::size_t len = 1; len < size; len <<= 1) {
    for (std::size_t base = 0; base < size; base += len << 1) {
      for (std::size_t off = 0; off < len; ++off) {
        Rat u = a[base + off];
        Rat v = a[base + len + off];
        a[base + off] = u + v;
        a[base + len + off] = u - v;
      }
    }
  }
}

FourierExpansion fourier_transform(const BooleanFunction& f, unsigned max_n) {
  if (f.n() > max_n) throw ResourceError("transform dimension cap exceeded");
  std::vector<Rat> a = f.values();
  walsh_hadamard(a);
  Rat inv(1, static_cast<unsigned long>(f.size()));
  inv.canonicalize();
  for (Rat& c : a) c *= inv;
  return FourierExpansion(f.n(), std::move(a));
}

BooleanFunction inverse_transform(const FourierExpansion& fe, RangeTag tag) {
  std::vector<Rat> a = fe.coeffs();
  walsh_hadamard(a);
  return BooleanFunction(fe.n(), std::move(a), tag);
}

Rat influence(const FourierExpansion& fe, unsigned i) {
  if (i < 1 || i > fe.n()) throw DomainError("coordinate out of range");
  std::uint32_t bit = 1u << (i - 1);
  Rat s = 0;
  for (std::uint32_t mask = 0; mask < fe.size(); ++mask)
    if (mask & bit) s += fe[mask] * fe[mask];
  return s;
}

Rat low_degree_influence(const FourierExpansion& fe, unsigned i, unsigned d) {
  if (i < 1 || i > fe.n()) throw DomainError("coordinate out of range");
  if (d > fe.n()) throw DomainError("degree out of range");
  std::uint32_t bit = 1u << (i - 1);
  Rat s = 0;
  for (std::uint32_t mask = 0; mask < fe.size(); ++mask)
    if ((mask & bit) && std::popcount(mask) <= static_cast<int>(d))
      s += fe[mask] * fe[mask];
  return s;
}

Rat max_influence(const FourierExpansion& fe) {
  Rat best = 0;
  for (unsigned i = 1; i <= fe.n(); ++i) best = std::max(best, influence(fe, i));
  return best;
}

Rat flip_influence(const BooleanFunction& f, unsigned i) {
  if (i < 1 || i > f.n()) throw DomainError("coordinate out of range");
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] != 0 && f[x] != 1)
      throw DomainError("flip influence requires {0,1}-valued function");
  std::size_t bit = std::size_t{1} << (i - 1);
  unsigned long flips = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] != f[x ^ bit]) ++flips;
  Rat r(flips, static_cast<unsigned long>(f.size()));
  r.canonicalize();
  return r;
}

FourierExpansion noise_operator(const FourierExpansion& fe, const Rat& sigma) {
  std::vector<Rat> out(fe.size());
  for (std::uint32_t mask = 0; mask < fe.size(); ++mask)
    out[mask] = fe[mask] * rat_pow(sigma, std::popcount(mask));
  return FourierExpansion(fe.n(), std::move(out));
}

Rat stability_bilinear(const FourierExpansion& fe, const FourierExpansion& ge,
                       const Rat& rho) {
  if (fe.n() != ge.n()) throw DomainError("dimension mismatch");
  std::vector<Rat> rho_pow(fe.n() + 1);
  rho_pow[0] = 1;
  for (unsigned k = 1; k <= fe.n(); ++k) rho_pow[k] = rho_pow[k - 1] * rho;
  Rat s = 0;
  for (std::uint32_t mask = 0; mask < fe.size(); ++mask)
    s += rho_pow[std::popcount(mask)] * fe[mask] * ge[mask];
  return s;
}

Rat stab_two_sided(const FourierExpansion& fe, const Rat& rho, RangeTag tag) {
  if (tag != RangeTag::kUnitInterval)
    throw DomainError("two-sided stability requires unit_interval range");
  Rat ef = fe[0];
  return 1 - 2 * ef + 2 * stability_bilinear(fe, fe, rho);
}

Rat stab_two_sided(const BooleanFunction& f, const Rat& rho) {
  FourierExpansion fe = fourier_transform(f);
  return stab_two_sided(fe, rho, f.range_tag());
}

Rat stability_exhaustive(const BooleanFunction& f, const BooleanFunction& g,
                         const Rat& rho) {
  if (f.n() != g.n()) throw DomainError("dimension mismatch");
  const unsigned n = f.n();
  Rat agree = (1 + rho) / 4, disagree = (1 - rho) / 4;
  Rat total = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      std::size_t diff = x ^ y;
      unsigned d = static_cast<unsigned>(std::popcount(diff));
      Rat w = rat_pow(agree, n - d) * rat_pow(disagree, d);
      total += w * f[x] * g[y];
    }
  }
  return total;
}

Rat parseval_lhs(const FourierExpansion& fe) {
  Rat s = 0;
  for (const Rat& c : fe.coeffs()) s += c * c;
  return s;
}

Rat mean_square(const BooleanFunction& f) {
  Rat s = 0;
  for (const Rat& v : f.values()) s += v * v;
  return s / Rat(static_cast<unsigned long>(f.size()));
}

}  // namespace stabcert::cube
