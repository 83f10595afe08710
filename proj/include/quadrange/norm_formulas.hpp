#pragma once

#include "quadrange/linalg.hpp"

namespace quadrange {

/// Closed-form norm of [[a I, d A], [c A*, b I]] in terms of ||A||.
struct NormReport {
  double r = 0.0;
  double s = 0.0;
  double norm = 0.0;
  double norm_squared = 0.0;
  double r2_minus_s2 = 0.0;
};

struct RSCoefficients {
  double r;
  double s;
};

/// r = |a|^2 + |b|^2 + ||A||^2 (|c|^2 + |d|^2),  s = 2 |ab - cd ||A||^2|.
/// Guarantees r >= s; s is clamped to r when it overshoots by at most
/// 1e-12 r and InternalInconsistency is raised otherwise.
RSCoefficients rs_coefficients(Complex a, Complex b, Complex c, Complex d, double norm_a);

/// ||T|| = ((r + s)^{1/2} + (r - s)^{1/2}) / 2 and ||T||^2 = (r + sqrt(r^2 - s^2)) / 2.
NormReport gqo_norm(Complex a, Complex b, Complex c, Complex d, double norm_a);

/// Norm of the 2x2 matrix [[a, d], [c, b]].
double matrix2x2_norm(Complex a, Complex b, Complex c, Complex d);

struct Expansion {
  double value;
  double k;
};

/// r^2 - s^2 for d = 1 written as a sum of nonnegative terms:
/// (|a|^2 - |b|^2)^2 + (|c|^2 - 1)^2 ||A||^4 + 2k ||A||^2,
/// k = |b + conj(a) c|^2 + |a + conj(b) c|^2.
Expansion r2_minus_s2_expanded(Complex a, Complex b, Complex c, double norm_a);

}  // namespace quadrange
