#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

namespace specwres {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline constexpr double kAbsTol = 1e-10;

/// Tolerance scaled by the larger max-norm of the two operands.
inline bool approx_equal(cplx a, cplx b, double tol = kAbsTol) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

inline bool approx_equal(const Mat& a, const Mat& b, double tol = kAbsTol) {
  double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  return (a - b).cwiseAbs().maxCoeff() <= tol * scale;
}

inline Mat anticomm(const Mat& a, const Mat& b) { return a * b + b * a; }
inline Mat comm(const Mat& a, const Mat& b) { return a * b - b * a; }

/// Tr(AB) without forming the product.
inline cplx trace_prod(const Mat& a, const Mat& b) {
  return (a.transpose().cwiseProduct(b)).sum();
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double normal() { return dist_(eng_); }
  cplx cnormal() { return {dist_(eng_), dist_(eng_)}; }

  Mat matrix(int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = cnormal();
    return m;
  }

  Mat hermitian(int dim) {
    Mat m = matrix(dim, dim);
    return 0.5 * (m + m.adjoint());
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> dist_{0.0, 1.0};
};

}  // namespace specwres
