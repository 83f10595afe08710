#include "quadrange/norm_formulas.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace quadrange {

namespace {

void require_norm(double norm_a) {
  if (!std::isfinite(norm_a) || norm_a < 0.0) {
    throw Error(ErrorKind::InvalidInput, "norm of A must be finite and >= 0");
  }
}

// General-d form of the expansion: the cross term becomes
// |conj(a) c + b conj(d)|^2 + |a conj(d) + conj(b) c|^2.
Expansion expand(Complex a, Complex b, Complex c, Complex d, double norm_a) {
  const double n2 = norm_a * norm_a;
  const double diag = std::norm(a) - std::norm(b);
  const double off = std::norm(c) - std::norm(d);
  const double k = std::norm(std::conj(a) * c + b * std::conj(d)) +
                   std::norm(a * std::conj(d) + std::conj(b) * c);
  return {diag * diag + off * off * n2 * n2 + 2.0 * k * n2, k};
}

double clamped_sqrt(double x, double r) {
  if (x >= 0.0) return std::sqrt(x);
  if (x >= -1e-12 * r) return 0.0;
  throw Error(ErrorKind::InternalInconsistency,
              "negative radicand " + std::to_string(x) + " in norm formula");
}

}  // namespace

RSCoefficients rs_coefficients(Complex a, Complex b, Complex c, Complex d, double norm_a) {
  require_norm(norm_a);
  const double n2 = norm_a * norm_a;
  const double r = std::norm(a) + std::norm(b) + n2 * (std::norm(c) + std::norm(d));
  double s = 2.0 * std::abs(a * b - c * d * n2);
  if (s > r) {
    if (s - r > 1e-12 * r) {
      throw Error(ErrorKind::InternalInconsistency,
                  "s exceeds r in norm formula (r=" + std::to_string(r) +
                      ", s=" + std::to_string(s) + ")");
    }
    s = r;
  }
  return {r, s};
}

NormReport gqo_norm(Complex a, Complex b, Complex c, Complex d, double norm_a) {
  const auto [r, s] = rs_coefficients(a, b, c, d, norm_a);
  NormReport out;
  out.r = r;
  out.s = s;
  // The expansion is a sum of nonnegative terms, so it carries r^2 - s^2
  // without the cancellation of the direct difference.
  out.r2_minus_s2 = expand(a, b, c, d, norm_a).value;
  const double root = clamped_sqrt(out.r2_minus_s2, r * r);
  // r - s = (r^2 - s^2) / (r + s), same reasoning.
  const double r_minus_s = r + s > 0.0 ? out.r2_minus_s2 / (r + s) : 0.0;
  out.norm = 0.5 * (std::sqrt(r + s) + clamped_sqrt(r_minus_s, r));
  out.norm_squared = 0.5 * (r + root);
  return out;
}

double matrix2x2_norm(Complex a, Complex b, Complex c, Complex d) {
  const double r = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  const double s = std::min(r, 2.0 * std::abs(a * b - c * d));
  return 0.5 * (std::sqrt(r + s) + std::sqrt(std::max(0.0, r - s)));
}

Expansion r2_minus_s2_expanded(Complex a, Complex b, Complex c, double norm_a) {
  require_norm(norm_a);
  return expand(a, b, c, 1.0, norm_a);
}

}  // namespace quadrange
