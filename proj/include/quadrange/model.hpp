#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "quadrange/linalg.hpp"

namespace quadrange {

/// Scalars of T = [[a I, A], [c A*, b I]].
struct GQOParams {
  Complex a;
  Complex b;
  Complex c;

  GQOParams(Complex a_, Complex b_, Complex c_);
};

/// A finite matrix standing for A : K -> H (rows = dim H, cols = dim K).
struct ConcreteMatrix {
  DenseMatrix matrix;
};

/// An infinite-dimensional diagonal operator represented by a finite list of
/// its singular values together with the declared supremum of the full
/// spectrum and whether that supremum is attained.
class DiagonalSpectrum {
 public:
  /// Throws InvalidInput when a value is negative/non-finite, exceeds sup, or
  /// when sup_attained disagrees with the list (attained iff some listed
  /// value equals sup exactly).
  DiagonalSpectrum(std::vector<double> values, double sup, bool sup_attained);

  const std::vector<double>& values() const noexcept { return values_; }
  double sup() const noexcept { return sup_; }
  bool sup_attained() const noexcept { return sup_attained_; }

 private:
  std::vector<double> values_;
  double sup_;
  bool sup_attained_;
};

using OperatorModel = std::variant<ConcreteMatrix, DiagonalSpectrum>;

bool is_concrete(const OperatorModel& model);

/// T in block form. The block matrix is (m + n) x (m + n), m = rows of A.
struct AssembledGQO {
  GQOParams params;
  DenseMatrix block;
  std::size_t m;  // dim H
  std::size_t n;  // dim K

  DenseMatrix upper_right() const { return block.block(0, m, m, n); }
  DenseMatrix lower_left() const { return block.block(m, 0, n, m); }
};

/// [[a I, A], [c A*, b I]]. Throws UnsupportedModel for DiagonalSpectrum.
AssembledGQO assemble(const GQOParams& params, const OperatorModel& model);
AssembledGQO assemble(const GQOParams& params, const DenseMatrix& a_block);

/// The two-coupling form [[a I, d A], [c A*, b I]] used by the general norm
/// formula. With d = 1 this is assemble().
DenseMatrix assemble_coupled(const GQOParams& params, Complex d, const DenseMatrix& a_block);

struct ModelNorm {
  double value = 0.0;
  bool attained = false;
  /// Unit vector x with ||A x|| = ||A||, when the norm is attained.
  std::optional<Vector> witness;
  /// For DiagonalSpectrum, the basis index of a maximizing value.
  std::optional<std::size_t> witness_index;
};

ModelNorm model_norm(const OperatorModel& model, const ToleranceConfig& cfg = {});

OperatorModel adjoint(const OperatorModel& model);

}  // namespace quadrange
