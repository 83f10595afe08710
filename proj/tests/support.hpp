#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "quadrange/linalg.hpp"

namespace qtest {

using quadrange::Complex;
using quadrange::DenseMatrix;

// Test-side generator. Deliberately separate from the library RNG so the
// oracle's sampler is not validated with itself.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
  Complex cnormal() { return {normal(), normal()}; }
  Complex unit() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }
  std::size_t dim(std::size_t max) {
    return 1 + std::uniform_int_distribution<std::size_t>(0, max - 1)(eng_);
  }
  bool coin(double p = 0.5) { return uniform() < p; }

  DenseMatrix matrix(std::size_t rows, std::size_t cols) {
    std::vector<Complex> e(rows * cols);
    for (auto& z : e) z = cnormal();
    return DenseMatrix(rows, cols, std::move(e));
  }

  DenseMatrix hermitian(std::size_t n) {
    auto m = matrix(n, n);
    return Complex(0.5) * (m + m.adjoint());
  }

  // Eigenvectors of a random Hermitian matrix form a unitary.
  DenseMatrix unitary(std::size_t n) { return quadrange::hermitian_eigen(hermitian(n)).vectors; }

 private:
  std::mt19937_64 eng_;
};

inline double unitary_defect(const DenseMatrix& u) {
  return quadrange::max_abs_diff(u.adjoint() * u, DenseMatrix::identity(u.cols()));
}

}  // namespace qtest
