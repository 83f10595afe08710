#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "quadrange/model.hpp"

namespace quadrange {

enum class ScalarCase { ScalarCase1, ScalarCase2, ScalarCase3 };

std::string_view to_string(ScalarCase c);

/// T = Q + c Q* + k I with Q = [[a1 I, A], [0, b1 I]].
struct Decomposition {
  Complex a1;
  Complex b1;
  Complex k;
  ScalarCase case_tag;
};

/// The parameters satisfy a != b, |c| = 1, c != (a-b)^2/|a-b|^2; no
/// quadratic Q and scalar k give T = Q + cQ* + kI up to unitary equivalence.
struct Impossible {
  std::string reason;
};

using DecompositionResult = std::variant<Decomposition, Impossible>;

/// Case 1 (|c| != 1) takes precedence over Cases 2 and 3.
DecompositionResult decompose_gqo(const GQOParams& params, const ToleranceConfig& cfg = {});

/// Q = [[a1 I, A], [0, b1 I]].
DenseMatrix quadratic_part(const Decomposition& dec, const DenseMatrix& a_block);

/// Q + cQ* + kI, which should reproduce assemble(params, A).
AssembledGQO reconstruct(const Decomposition& dec, Complex c, const DenseMatrix& a_block);

}  // namespace quadrange
