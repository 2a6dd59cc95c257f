#pragma once

#include <vector>

#include "stabcert/rational.hpp"

namespace stabcert::tensor {

// Joint probability table over two finite alphabets; entries nonnegative
// rationals with total mass exactly 1.
class CorrelatedMeasure {
 public:
  CorrelatedMeasure(std::size_t n1, std::size_t n2, std::vector<Rat> joint);

  std::size_t rows() const { return n1_; }
  std::size_t cols() const { return n2_; }
  const Rat& at(std::size_t a, std::size_t b) const { return joint_[a * n2_ + b]; }

  std::vector<Rat> row_marginal() const;
  std::vector<Rat> col_marginal() const;

 private:
  std::size_t n1_, n2_;
  std::vector<Rat> joint_;
};

// Maximal (Renyi) correlation: the second singular value of the
// marginal-normalized joint matrix Q[a,b] = mu(a,b)/sqrt(mu1(a) mu2(b)).
double renyi_correlation(const CorrelatedMeasure& mu);

// The resample construction: with probability rho copy, else draw fresh.
CorrelatedMeasure resample_measure(const std::vector<Rat>& nu, const Rat& rho);

// Binary pair with E x = E y = 0 and E xy = rho.
CorrelatedMeasure binary_pair(const Rat& rho);

}  // namespace stabcert::tensor
