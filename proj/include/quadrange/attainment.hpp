#pragma once

#include <optional>
#include <string_view>

#include "quadrange/model.hpp"

namespace quadrange {

/// Which branch of the attainment argument produces the T*T eigenvector.
///   Case1: ||T||^2 = r/2 (|a| = |b|, |c| = 1, a + conj(b) c = 0)
///   Case2: ||T||^2 > |a|^2 + |c|^2 ||A||^2, u solved from v
///   Case3: ||T||^2 > |b|^2 + ||A||^2, v solved from u
///   ZeroA: A = 0, T = a I (+) b I
enum class CaseTag { Case1, Case2, Case3, ZeroA };

std::string_view to_string(CaseTag tag);

struct Witness {
  Vector u;  // component in H
  Vector v;  // component in K
};

struct AttainmentReport {
  bool attains = false;
  CaseTag case_tag = CaseTag::ZeroA;
  std::optional<Witness> witness;
  /// ||T*T w - ||T||^2 w|| for the unit witness w = (u, v).
  double residual = 0.0;
  double norm_squared = 0.0;
};

/// T attains its norm iff A does; the scalars play no role.
bool gqo_attains(const GQOParams& params, const OperatorModel& model,
                 const ToleranceConfig& cfg = {});

/// Case precedence is Case1, then Case2, then Case3. Throws
/// InternalInconsistency if no case applies, which the norm identities rule
/// out for exact data.
CaseTag classify_case(const GQOParams& params, double norm_a, const ToleranceConfig& cfg = {});

/// Builds a unit eigenvector of T*T for ||T||^2 following the case split.
/// Resolvents are applied through the eigendecomposition of AA* / A*A.
AttainmentReport gram_witness(const GQOParams& params, const DenseMatrix& a_block,
                              const ToleranceConfig& cfg = {});

/// Quadratic operator in canonical form
///   a1 I_{n1} (+) b1 I_{n2} (+) [[a1 I, A1], [0, b1 I]]
/// with A1 positive and injective. A1 may be a DiagonalSpectrum with
/// strictly positive values to model the non-attaining case.
class QuadraticCanonical {
 public:
  QuadraticCanonical(Complex a1, Complex b1, std::size_t n1, std::size_t n2, OperatorModel a1_block,
                     const ToleranceConfig& cfg = {});

  Complex a1() const noexcept { return a1_; }
  Complex b1() const noexcept { return b1_; }
  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  const OperatorModel& positive_part() const noexcept { return a1_block_; }

  /// Dense Q; UnsupportedModel for the diagonal-spectrum variant.
  DenseMatrix matrix() const;

 private:
  Complex a1_;
  Complex b1_;
  std::size_t n1_;
  std::size_t n2_;
  OperatorModel a1_block_;
};

struct PerturbationAttainment {
  bool direct;       // computed on Q + cQ* + kI itself
  bool via_theorem;  // attainment of A1
};

PerturbationAttainment quadratic_perturbation_attains(const QuadraticCanonical& q, Complex c,
                                                      Complex k, const ToleranceConfig& cfg = {});

}  // namespace quadrange
