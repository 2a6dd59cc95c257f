#include "stabcert/correlated.hpp"

#include <cmath>

#include "stabcert/linalg.hpp"

namespace stabcert::tensor {

CorrelatedMeasure::CorrelatedMeasure(std::size_t n1, std::size_t n2,
                                     std::vector<Rat> joint)
    : n1_(n1), n2_(n2), joint_(std::move(joint)) {
  if (joint_.size() != n1_ * n2_) throw DomainError("joint table size mismatch");
  Rat total = 0;
  for (const Rat& p : joint_) {
    if (p < 0) throw DomainError("negative probability");
    total += p;
  }
  if (total != 1) throw DomainError("joint table must sum to 1");
}

std::vector<Rat> CorrelatedMeasure::row_marginal() const {
  std::vector<Rat> m(n1_, Rat(0));
  for (std::size_t a = 0; a < n1_; ++a)
    for (std::size_t b = 0; b < n2_; ++b) m[a] += at(a, b);
  return m;
}

std::vector<Rat> CorrelatedMeasure::col_marginal() const {
  std::vector<Rat> m(n2_, Rat(0));
  for (std::size_t a = 0; a < n1_; ++a)
    for (std::size_t b = 0; b < n2_; ++b) m[b] += at(a, b);
  return m;
}

double renyi_correlation(const CorrelatedMeasure& mu) {
  auto p = mu.row_marginal();
  auto q = mu.col_marginal();
  for (const Rat& r : p)
    if (r == 0) throw DomainError("zero-mass marginal row");
  for (const Rat& r : q)
    if (r == 0) throw DomainError("zero-mass marginal column");
  const std::size_t n1 = mu.rows(), n2 = mu.cols();
  Mat qmat(n1, n2);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b)
      qmat(a, b) = to_double(mu.at(a, b)) /
                   std::sqrt(to_double(p[a]) * to_double(q[b]));
  // Second singular value via eigenvalues of Q^T Q.
  Mat gram = qmat.transposed() * qmat;
  std::vector<double> ev;
  Mat vecs;
  jacobi_eigen(gram, ev, vecs);
  if (ev.size() < 2) return 0.0;
  double lam = ev[ev.size() - 2];
  return lam > 0 ? std::sqrt(lam) : 0.0;
}

CorrelatedMeasure resample_measure(const std::vector<Rat>& nu, const Rat& rho) {
  const std::size_t k = nu.size();
  std::vector<Rat> joint(k * k, Rat(0));
  for (std::size_t a = 0; a < k; ++a) {
    joint[a * k + a] += rho * nu[a];
    for (std::size_t b = 0; b < k; ++b) joint[a * k + b] += (1 - rho) * nu[a] * nu[b];
  }
  return CorrelatedMeasure(k, k, std::move(joint));
}

CorrelatedMeasure binary_pair(const Rat& rho) {
  Rat agree = (1 + rho) / 4, disagree = (1 - rho) / 4;
  return CorrelatedMeasure(2, 2, {agree, disagree, disagree, agree});
}

}  // namespace stabcert::tensor
