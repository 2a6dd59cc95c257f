#include "stabcert/boolean_function.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace stabcert::cube {

BooleanFunction::BooleanFunction(unsigned n, std::vector<Rat> values, RangeTag tag)
    : n_(n), tag_(tag), values_(std::move(values)) {
  if (n_ < 1) throw DomainError("dimension must be >= 1");
  if (values_.size() != (std::size_t{1} << n_))
    throw DomainError("value table must have length 2^n");
  if (tag_ == RangeTag::kUnitInterval) {
    for (const Rat& v : values_)
      if (v < 0 || v > 1) throw DomainError("value outside [0,1]");
  } else if (tag_ == RangeTag::kSignedUnit) {
    for (const Rat& v : values_)
      if (v < -1 || v > 1) throw DomainError("value outside [-1,1]");
  }
}

Rat BooleanFunction::mean() const {
  Rat s = 0;
  for (const Rat& v : values_) s += v;
  return s / Rat(static_cast<unsigned long>(values_.size()));
}

Rat BooleanFunction::variance() const {
  Rat m = mean();
  Rat s = 0;
  for (const Rat& v : values_) {
    Rat d = v - m;
    s += d * d;
  }
  return s / Rat(static_cast<unsigned long>(values_.size()));
}

BooleanFunction BooleanFunction::complement() const {
  if (tag_ != RangeTag::kUnitInterval)
    throw DomainError("complement requires unit_interval range");
  std::vector<Rat> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = 1 - values_[i];
  return BooleanFunction(n_, std::move(out), tag_);
}

BooleanFunction majority(unsigned n) {
  if (n % 2 == 0) throw DomainError("majority requires odd n");
  std::vector<Rat> v(std::size_t{1} << n);
  for (std::size_t i = 0; i < v.size(); ++i) {
    // bit set means -1; majority of +1s when popcount < n/2.
    unsigned minus = static_cast<unsigned>(std::popcount(i));
    v[i] = (2 * minus < n) ? 1 : 0;
  }
  return BooleanFunction(n, std::move(v), RangeTag::kUnitInterval);
}

BooleanFunction dictator(unsigned n, unsigned i) {
  if (i < 1 || i > n) throw DomainError("dictator coordinate out of range");
  std::vector<Rat> v(std::size_t{1} << n);
  for (std::size_t x = 0; x < v.size(); ++x)
    v[x] = coord_sign(static_cast<std::uint32_t>(x), i - 1) > 0 ? 1 : 0;
  return BooleanFunction(n, std::move(v), RangeTag::kUnitInterval);
}

BooleanFunction parity(unsigned n, std::uint32_t subset_mask) {
  if (subset_mask >> n) throw DomainError("parity subset out of range");
  std::vector<Rat> v(std::size_t{1} << n);
  for (std::size_t x = 0; x < v.size(); ++x) {
    unsigned flips = static_cast<unsigned>(std::popcount(x & subset_mask));
    v[x] = (flips % 2 == 0) ? 1 : -1;
  }
  return BooleanFunction(n, std::move(v), RangeTag::kSignedUnit);
}

BooleanFunction constant(unsigned n, const Rat& c) {
  std::vector<Rat> v(std::size_t{1} << n, c);
  RangeTag tag = (c >= 0 && c <= 1) ? RangeTag::kUnitInterval
                                    : RangeTag::kUnrestricted;
  return BooleanFunction(n, std::move(v), tag);
}

BooleanFunction random_dyadic(unsigned n, unsigned denominator_bits,
                              std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<Rat> v(std::size_t{1} << n);
  for (auto& x : v) x = rng.next_dyadic(denominator_bits);
  return BooleanFunction(n, std::move(v), RangeTag::kUnitInterval);
}

BooleanFunction restrict_function(const BooleanFunction& f,
                                  std::uint32_t subset_mask,
                                  std::uint32_t assignment_mask) {
  unsigned n = f.n();
  if (subset_mask >> n) throw DomainError("restriction subset out of range");
  if (assignment_mask & ~subset_mask)
    throw DomainError("assignment outside restricted subset");
  unsigned k = static_cast<unsigned>(std::popcount(subset_mask));
  if (k >= n) throw DomainError("restriction must leave at least one coordinate");
  unsigned m = n - k;
  // Free coordinates of f, ascending.
  std::vector<unsigned> free_bits;
  for (unsigned j = 0; j < n; ++j)
    if (!((subset_mask >> j) & 1u)) free_bits.push_back(j);
  std::vector<Rat> out(std::size_t{1} << m);
  for (std::size_t y = 0; y < out.size(); ++y) {
    std::uint32_t idx = assignment_mask;
    for (unsigned b = 0; b < m; ++b)
      if ((y >> b) & 1u) idx |= (1u << free_bits[b]);
    out[y] = f[idx];
  }
  return BooleanFunction(m, std::move(out), f.range_tag());
}

BooleanFunction smooth(const BooleanFunction& f, const Rat& eps, const Rat& eta) {
  if (f.range_tag() != RangeTag::kUnitInterval)
    throw DomainError("smooth requires unit_interval range");
  if (eps < 0 || eps >= 1) throw DomainError("eps outside [0,1)");
  if (eta < 0 || eta >= 1) throw DomainError("eta outside [0,1)");
  const std::size_t size = f.size();
  std::vector<Rat> table(size);
  Rat half_eps = eps / 2;
  for (std::size_t i = 0; i < size; ++i) {
    table[i] = (1 - eps) * f[i] + half_eps;
    if (table[i] < half_eps || table[i] > 1 - half_eps)
      throw DomainError("affine step escaped [eps/2, 1-eps/2]");
  }
  if (eta != 0) {
    // T_{1-eta} via butterfly on coefficients would need a transform; instead
    // average directly per coordinate: T_sigma = prod_j (id + sigma flip_j)/...
    // One coordinate at a time: (T f)(x) = E_{y_j ~ sigma x_j} f. For a single
    // coordinate, (Tf)(x) = (1+sigma)/2 f(x) + (1-sigma)/2 f(x^flip).
    Rat sigma = 1 - eta;
    Rat wp = (1 + sigma) / 2, wm = (1 - sigma) / 2;
    for (unsigned j = 0; j < f.n(); ++j) {
      std::size_t bit = std::size_t{1} << j;
      std::vector<Rat> next(size);
      for (std::size_t i = 0; i < size; ++i)
        next[i] = wp * table[i] + wm * table[i ^ bit];
      table.swap(next);
    }
  }
  for (const Rat& v : table) {
    if (v < half_eps || v > 1 - half_eps)
      throw DomainError("noise step escaped [eps/2, 1-eps/2]");
  }
  return BooleanFunction(f.n(), std::move(table), RangeTag::kUnitInterval);
}

double majority_stability_dp(unsigned n, double rho, unsigned max_n) {
  if (n % 2 == 0) throw DomainError("majority requires odd n");
  if (n > max_n) throw ResourceError("majority_stability_dp dimension cap");
  if (!(std::fabs(rho) < 1.0)) throw DomainError("|rho| must be < 1");
  const double wpp = (1.0 + rho) / 4.0;  // (x_i, y_i) = (+,+) or (-,-)
  const double wpm = (1.0 - rho) / 4.0;
  // joint[a][b] = P[#(x=+1) = a, #(y=+1) = b] after processing i bits.
  std::vector<std::vector<double>> joint(n + 1, std::vector<double>(n + 1, 0.0));
  joint[0][0] = 1.0;
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<std::vector<double>> next(n + 1, std::vector<double>(n + 1, 0.0));
    for (unsigned a = 0; a < i; ++a) {
      for (unsigned b = 0; b < i; ++b) {
        double p = joint[a][b];
        if (p == 0.0) continue;
        next[a + 1][b + 1] += p * wpp;
        next[a][b] += p * wpp;
        next[a + 1][b] += p * wpm;
        next[a][b + 1] += p * wpm;
      }
    }
    joint.swap(next);
  }
  // Maj = 1 iff #(+1) > n/2; two-sided stability = P[Maj(x) = Maj(y)].
  const unsigned threshold = n / 2;  // strict majority needs count >= threshold+1
  double agree = 0.0;
  for (unsigned a = 0; a <= n; ++a)
    for (unsigned b = 0; b <= n; ++b)
      if ((a > threshold) == (b > threshold)) agree += joint[a][b];
  return agree;
}

}  // namespace stabcert::cube
