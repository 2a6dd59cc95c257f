#pragma once

#include <cstdint>
#include <vector>

#include "stabcert/rational.hpp"

namespace stabcert::cube {

// Point index convention, fixed globally: bit j of the index encodes
// coordinate x_{j+1}, with bit 0 -> x = +1 and bit 1 -> x = -1.
inline int coord_sign(std::uint32_t index, unsigned coord_zero_based) {
  return (index >> coord_zero_based) & 1u ? -1 : +1;
}

enum class RangeTag { kUnitInterval, kSignedUnit, kUnrestricted };

inline constexpr unsigned kDefaultMaxTransformN = 22;

// Real-valued function on {-1,1}^n stored as a dense table of 2^n exact
// rationals in the fixed index order.
class BooleanFunction {
 public:
  BooleanFunction(unsigned n, std::vector<Rat> values,
                  RangeTag tag = RangeTag::kUnrestricted);

  unsigned n() const { return n_; }
  RangeTag range_tag() const { return tag_; }
  std::size_t size() const { return values_.size(); }
  const Rat& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rat>& values() const { return values_; }

  Rat mean() const;
  Rat variance() const;

  BooleanFunction complement() const;  // 1 - f (unit_interval only)

 private:
  unsigned n_;
  RangeTag tag_;
  std::vector<Rat> values_;
};

// Constructors.
BooleanFunction majority(unsigned n);              // 0/1 valued, odd n only
BooleanFunction dictator(unsigned n, unsigned i);  // (1+x_i)/2
BooleanFunction parity(unsigned n, std::uint32_t subset_mask);  // chi_S, +-1
BooleanFunction constant(unsigned n, const Rat& c);
BooleanFunction random_dyadic(unsigned n, unsigned denominator_bits,
                              std::uint64_t seed);

// Restriction f_x: fixes the coordinates in subset_mask to the signs given by
// assignment_mask (bit set = -1), producing a function of the remaining
// coordinates in ascending order.
BooleanFunction restrict_function(const BooleanFunction& f,
                                  std::uint32_t subset_mask,
                                  std::uint32_t assignment_mask);

// g = T_{1-eta}((1-eps) f + eps/2); requires unit_interval range.
// Guarantees eps/2 <= g <= 1 - eps/2.
BooleanFunction smooth(const BooleanFunction& f, const Rat& eps, const Rat& eta);

// Two-sided noise stability of the 0/1 majority on n (odd) inputs, computed by
// dynamic programming over the joint distribution of the two coordinate sums;
// avoids the 2^n table.
double majority_stability_dp(unsigned n, double rho, unsigned max_n = 10000);

}  // namespace stabcert::cube
