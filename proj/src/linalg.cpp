#include "quadrange/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace quadrange {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::UnsupportedModel: return "UnsupportedModel";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::SingularResolvent: return "SingularResolvent";
  }
  return "Unknown";
}

void ToleranceConfig::validate() const {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(eq_tol) || !positive(geom_tol) || !positive(eig_tol)) {
    throw Error(ErrorKind::InvalidInput, "tolerances must be finite and > 0");
  }
  if (max_sweeps < 1) {
    throw Error(ErrorKind::InvalidInput, "max_sweeps must be >= 1");
  }
}

bool approx_equal(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

bool approx_equal(Complex x, Complex y, double tol) {
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_entries(const std::vector<Complex>& e) {
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!finite(e[k])) {
      throw Error(ErrorKind::InvalidInput,
                  "matrix entry " + std::to_string(k) + " is not finite");
    }
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorKind::InvalidInput, "matrix dimensions must be >= 1");
  }
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::InvalidInput,
                "matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                    std::to_string(rows_ * cols_));
  }
  check_entries(entries_);
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorKind::InvalidInput, "matrix dimensions must be >= 1");
  }
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::InvalidInput, "ragged matrix rows");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  check_entries(entries_);
}

DenseMatrix DenseMatrix::zeros(std::size_t rows, std::size_t cols) {
  return DenseMatrix(rows, cols, std::vector<Complex>(rows * cols));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  auto m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const Complex> diag) {
  std::vector<Complex> e(diag.size() * diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) e[i * diag.size() + i] = diag[i];
  return DenseMatrix(diag.size(), diag.size(), std::move(e));
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> diag) {
  std::vector<Complex> d(diag.begin(), diag.end());
  return diagonal(std::span<const Complex>(d));
}

DenseMatrix DenseMatrix::adjoint() const {
  std::vector<Complex> e(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = std::conj(entries_[i * cols_ + j]);
  return DenseMatrix(cols_, rows_, std::move(e));
}

DenseMatrix DenseMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                               std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) {
    throw Error(ErrorKind::InvalidInput, "block out of range");
  }
  std::vector<Complex> e;
  e.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) e.push_back((*this)(row0 + i, col0 + j));
  return DenseMatrix(rows, cols, std::move(e));
}

void DenseMatrix::set_block(std::size_t row0, std::size_t col0, const DenseMatrix& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) {
    throw Error(ErrorKind::InvalidInput, "block out of range");
  }
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) at(row0 + i, col0 + j) = b(i, j);
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double DenseMatrix::frobenius() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

bool DenseMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Complex z) { return z == Complex{}; });
}

DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) {
    throw Error(ErrorKind::InvalidInput, "shape mismatch in matrix sum");
  }
  auto e = x.entries_;
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += y.entries_[k];
  return DenseMatrix(x.rows_, x.cols_, std::move(e));
}

DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y) {
  return x + Complex(-1.0) * y;
}

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.cols_ != y.rows_) throw Error(ErrorKind::InvalidInput, "shape mismatch in matrix product");
  std::vector<Complex> e(x.rows_ * y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Complex xik = x(i, k);
      if (xik == Complex{}) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) e[i * y.cols_ + j] += xik * y(k, j);
    }
  return DenseMatrix(x.rows_, y.cols_, std::move(e));
}

DenseMatrix operator*(Complex s, const DenseMatrix& x) {
  auto e = x.entries_;
  for (auto& z : e) z *= s;
  return DenseMatrix(x.rows_, x.cols_, std::move(e));
}

Vector operator*(const DenseMatrix& x, std::span<const Complex> v) {
  if (v.size() != x.cols_) throw Error(ErrorKind::InvalidInput, "shape mismatch in matvec");
  Vector out(x.rows_);
  for (std::size_t i = 0; i < x.rows_; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < x.cols_; ++j) acc += x(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(ErrorKind::InvalidInput, "shape mismatch in comparison");
  }
  double m = 0.0;
  for (std::size_t k = 0; k < x.entries().size(); ++k)
    m = std::max(m, std::abs(x.entries()[k] - y.entries()[k]));
  return m;
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  Complex acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

double norm2(std::span<const Complex> x) {
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z);
  return std::sqrt(s);
}

Vector scaled(std::span<const Complex> x, Complex s) {
  Vector out(x.begin(), x.end());
  for (auto& z : out) z *= s;
  return out;
}

Vector column(const DenseMatrix& m, std::size_t j) {
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m(i, j);
  return out;
}

namespace {

double off_diagonal(const std::vector<Complex>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a[i * n + j]);
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition hermitian_eigen(const DenseMatrix& m, const ToleranceConfig& cfg) {
  cfg.validate();
  if (!m.is_square()) throw Error(ErrorKind::NotHermitian, "matrix is not square");
  const std::size_t n = m.rows();
  const double scale = m.max_abs();
  if (max_abs_diff(m, m.adjoint()) > cfg.eq_tol * (1.0 + scale)) {
    throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within eq_tol");
  }

  // Work on the Hermitian part so tiny input asymmetry cannot accumulate.
  std::vector<Complex> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (m(i, j) + std::conj(m(j, i)));
  std::vector<Complex> v(n * n);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double fro = m.frobenius();
  const double target = cfg.eig_tol * fro;
  bool converged = off_diagonal(a, n) <= target;

  for (int sweep = 0; sweep < cfg.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a[p * n + q];
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        const Complex phase = apq / mag;

        // Real symmetric rotation on [[app, mag], [mag, aqq]], then undo the
        // phase: G = diag(1, conj(phase)) * [[c, s], [-s, c]].
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex g00 = c, g01 = s;
        const Complex g10 = -s * std::conj(phase), g11 = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = akp * g00 + akq * g10;
          a[k * n + q] = akp * g01 + akq * g11;
          const Complex vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = vkp * g00 + vkq * g10;
          v[k * n + q] = vkp * g01 + vkq * g11;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = std::conj(g00) * apk + std::conj(g10) * aqk;
          a[q * n + k] = std::conj(g01) * apk + std::conj(g11) * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        a[p * n + p] = a[p * n + p].real();
        a[q * n + q] = a[q * n + q].real();
      }
    }
    converged = off_diagonal(a, n) <= target;
  }
  if (!converged) {
    throw Error(ErrorKind::NoConvergence,
                "Jacobi eigensolver did not converge in " + std::to_string(cfg.max_sweeps) +
                    " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * n + i].real() < a[j * n + j].real();
  });

  EigenDecomposition out{std::vector<double>(n), DenseMatrix::zeros(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = a[src * n + src].real();
    for (std::size_t i = 0; i < n; ++i) out.vectors.at(i, k) = v[i * n + src];
  }
  return out;
}

SingularTriple top_singular(const DenseMatrix& m, const ToleranceConfig& cfg) {
  if (m.is_zero()) {
    Vector u(m.rows()), v(m.cols());
    u[0] = 1.0;
    v[0] = 1.0;
    return {0.0, std::move(u), std::move(v)};
  }
  const auto gram = m.adjoint() * m;
  const auto eig = hermitian_eigen(gram, cfg);
  const std::size_t top = eig.values.size() - 1;
  Vector v = column(eig.vectors, top);
  const double sigma = std::sqrt(std::max(0.0, eig.values[top]));
  Vector u = m * std::span<const Complex>(v);
  const double un = norm2(u);
  if (un > 0.0) {
    for (auto& z : u) z /= un;
  } else {
    u.assign(m.rows(), Complex{});
    u[0] = 1.0;
  }
  return {sigma, std::move(u), std::move(v)};
}

double operator_norm(const DenseMatrix& m, const ToleranceConfig& cfg) {
  if (m.is_zero()) return 0.0;
  return top_singular(m, cfg).sigma;
}

}  // namespace quadrange
