#pragma once

#include <cstddef>
#include <vector>

namespace stabcert {

// Dense row-major square/rectangular matrix of doubles. Small sizes only.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

  Mat transposed() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(double s) const;
  void symmetrize();
  double frob_norm() const;
  double trace() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

// Cholesky factorization A = L L^T for symmetric A. Returns false if A is not
// positive definite (within pivot tolerance).
bool cholesky(const Mat& a, Mat& lower, double pivot_tol = 0.0);

// Solve A x = b with A symmetric positive definite (via Cholesky).
bool spd_solve(const Mat& a, const std::vector<double>& b, std::vector<double>& x);

// Solve A x = b by Gaussian elimination with partial pivoting. Returns false
// when A is singular to working precision.
bool lu_solve(Mat a, std::vector<double> b, std::vector<double>& x);

// Inverse of SPD matrix from its Cholesky factor.
Mat spd_inverse(const Mat& a, bool* ok = nullptr);

// Cyclic Jacobi eigendecomposition of a symmetric matrix.
// On return eigvals is ascending and eigvecs columns are the eigenvectors.
void jacobi_eigen(const Mat& a, std::vector<double>& eigvals, Mat& eigvecs,
                  int max_sweeps = 64, double tol = 1e-13);

double min_eigenvalue_sym(const Mat& a);

}  // namespace stabcert
