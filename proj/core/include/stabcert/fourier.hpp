#pragma once

#include <cstdint>
#include <vector>

#include "stabcert/boolean_function.hpp"
#include "stabcert/rational.hpp"

namespace stabcert::cube {

// Dense Fourier coefficient table indexed by subset bitmask S.
class FourierExpansion {
 public:
  FourierExpansion(unsigned n, std::vector<Rat> coeffs);

  unsigned n() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  const Rat& operator[](std::uint32_t s) const { return coeffs_[s]; }
  Rat& operator[](std::uint32_t s) { return coeffs_[s]; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

 private:
  unsigned n_;
  std::vector<Rat> coeffs_;
};

FourierExpansion fourier_transform(const BooleanFunction& f,
                                   unsigned max_n = kDefaultMaxTransformN);
BooleanFunction inverse_transform(const FourierExpansion& fe,
                                  RangeTag tag = RangeTag::kUnrestricted);

// In-place Walsh-Hadamard butterfly (unnormalized): out[S] = sum_x a[x] chi_S(x).
void walsh_hadamard(std::vector<Rat>& a);

// Fourier-weight influence: sum over S containing i of fhat(S)^2.
Rat influence(const FourierExpansion& fe, unsigned i);
Rat low_degree_influence(const FourierExpansion& fe, unsigned i, unsigned d);
Rat max_influence(const FourierExpansion& fe);

// Flip-probability influence P[f(x) != f(x^{+-i})] for {0,1}-valued f.
// Differs from the Fourier-weight influence by a factor of 4 on such f.
Rat flip_influence(const BooleanFunction& f, unsigned i);

FourierExpansion noise_operator(const FourierExpansion& fe, const Rat& sigma);

// Sum over S of rho^{|S|} fhat(S) ghat(S) = E f(x) g(y) for rho-correlated pairs.
Rat stability_bilinear(const FourierExpansion& fe, const FourierExpansion& ge,
                       const Rat& rho);

// Stab_rho(f) = E[f f + (1-f)(1-f)] = 1 - 2 E f + 2 S_rho(f); unit_interval only.
Rat stab_two_sided(const FourierExpansion& fe, const Rat& rho, RangeTag tag);
Rat stab_two_sided(const BooleanFunction& f, const Rat& rho);

// E f(x) g(y) by exhaustive weighted double sum over all (x, y) pairs with
// per-bit weights (1 +- rho)/4. Test oracle; exponential in n.
Rat stability_exhaustive(const BooleanFunction& f, const BooleanFunction& g,
                         const Rat& rho);

Rat parseval_lhs(const FourierExpansion& fe);  // sum of squared coefficients
Rat mean_square(const BooleanFunction& f);     // E[f^2]

}  // namespace stabcert::cube
