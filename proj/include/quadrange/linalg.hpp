#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "quadrange/error.hpp"

namespace quadrange {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Numeric knobs shared by every module.
struct ToleranceConfig {
  double eq_tol = 1e-9;    // relative tolerance for scalar equality predicates
  double geom_tol = 1e-9;  // boundary band for membership tests
  double eig_tol = 1e-12;  // Jacobi off-diagonal convergence threshold
  int max_sweeps = 64;

  /// Throws Error(InvalidInput) unless all tolerances are positive and
  /// max_sweeps >= 1.
  void validate() const;
};

/// |x - y| <= tol * max(1, |x|, |y|)
bool approx_equal(double x, double y, double tol);
bool approx_equal(Complex x, Complex y, double tol);

/// Dense row-major complex matrix. Entries are checked for NaN/Inf on
/// construction, so every instance that exists is finite.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static DenseMatrix zeros(std::size_t rows, std::size_t cols);
  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const Complex> diag);
  static DenseMatrix diagonal(std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<Complex>& entries() const noexcept { return entries_; }

  Complex operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Unchecked write access. Callers must not store non-finite values.
  Complex& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  DenseMatrix adjoint() const;
  DenseMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t row0, std::size_t col0, const DenseMatrix& b);

  double max_abs() const;
  double frobenius() const;
  bool is_zero() const;

  friend DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y);
  friend DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y);
  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);
  friend DenseMatrix operator*(Complex s, const DenseMatrix& x);
  friend Vector operator*(const DenseMatrix& x, std::span<const Complex> v);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

/// Largest absolute entry of x - y; shapes must agree.
double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y);

// Vector helpers. inner(x, y) = sum x_i conj(y_i), i.e. <x, y>.
Complex inner(std::span<const Complex> x, std::span<const Complex> y);
double norm2(std::span<const Complex> x);
Vector scaled(std::span<const Complex> x, Complex s);
Vector column(const DenseMatrix& m, std::size_t j);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j pairs with values[j]
};

/// Cyclic-by-row complex Jacobi. Throws NotHermitian when
/// ||M - M*||_max > eq_tol * (1 + ||M||_max), NoConvergence when the sweep
/// cap is hit before the off-diagonal mass drops below eig_tol * ||M||_F.
EigenDecomposition hermitian_eigen(const DenseMatrix& m, const ToleranceConfig& cfg = {});

/// Largest singular value, via the top eigenvalue of M*M. Exactly 0 for the
/// zero matrix.
double operator_norm(const DenseMatrix& m, const ToleranceConfig& cfg = {});

/// Top singular triple: M v = sigma u with unit u, v. When sigma == 0 the
/// vectors are the first basis vectors.
struct SingularTriple {
  double sigma;
  Vector left;
  Vector right;
};
SingularTriple top_singular(const DenseMatrix& m, const ToleranceConfig& cfg = {});

}  // namespace quadrange
