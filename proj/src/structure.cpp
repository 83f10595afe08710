#include "quadrange/structure.hpp"

#include <cmath>

#include "quadrange/range_geometry.hpp"

namespace quadrange {

std::string_view to_string(ScalarCase c) {
  switch (c) {
    case ScalarCase::ScalarCase1: return "ScalarCase1";
    case ScalarCase::ScalarCase2: return "ScalarCase2";
    case ScalarCase::ScalarCase3: return "ScalarCase3";
  }
  return "Unknown";
}

DecompositionResult decompose_gqo(const GQOParams& params, const ToleranceConfig& cfg) {
  const Complex a = params.a;
  const Complex b = params.b;
  const Complex c = params.c;

  if (!approx_equal(std::abs(c), 1.0, cfg.eq_tol)) {
    const double denom = 1.0 - std::norm(c);
    return Decomposition{(a - c * std::conj(a)) / denom, (b - c * std::conj(b)) / denom, 0.0,
                         ScalarCase::ScalarCase1};
  }
  switch (classify_degeneracy(a, b, c, cfg)) {
    case Degeneracy::SegTypeAligned:
      return Decomposition{a - b, 0.5 * (a - b), 2.0 * b - a, ScalarCase::ScalarCase2};
    case Degeneracy::SegTypeEqualDiag: {
      const Complex root = std::sqrt(c);
      return Decomposition{0.5 * root, 0.5 * root, a - root, ScalarCase::ScalarCase3};
    }
    case Degeneracy::NonDegenerate:
      break;
  }
  return Impossible{"case (iv): a != b, |c| = 1 and c != (a-b)^2/|a-b|^2"};
}

DenseMatrix quadratic_part(const Decomposition& dec, const DenseMatrix& a_block) {
  const std::size_t m = a_block.rows();
  const std::size_t n = a_block.cols();
  auto q = DenseMatrix::zeros(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i) q.at(i, i) = dec.a1;
  for (std::size_t j = 0; j < n; ++j) q.at(m + j, m + j) = dec.b1;
  q.set_block(0, m, a_block);
  return q;
}

AssembledGQO reconstruct(const Decomposition& dec, Complex c, const DenseMatrix& a_block) {
  const auto q = quadratic_part(dec, a_block);
  auto block = q + c * q.adjoint() + dec.k * DenseMatrix::identity(q.rows());
  const Complex a = dec.a1 + c * std::conj(dec.a1) + dec.k;
  const Complex b = dec.b1 + c * std::conj(dec.b1) + dec.k;
  return {GQOParams(a, b, c), std::move(block), a_block.rows(), a_block.cols()};
}

}  // namespace quadrange
