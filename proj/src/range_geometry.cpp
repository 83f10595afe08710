#include "quadrange/range_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace quadrange {

std::string_view to_string(Closure c) {
  switch (c) {
    case Closure::Closed: return "Closed";
    case Closure::Open: return "Open";
    case Closure::InteriorPlusAB: return "InteriorPlusAB";
    case Closure::ClosedSegment: return "ClosedSegment";
    case Closure::OpenSegment: return "OpenSegment";
  }
  return "Unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Inside: return "Inside";
    case Verdict::OnBoundaryIncluded: return "OnBoundaryIncluded";
    case Verdict::OnBoundaryExcluded: return "OnBoundaryExcluded";
    case Verdict::Outside: return "Outside";
  }
  return "Unknown";
}

std::string_view to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::NonDegenerate: return "NonDegenerate";
    case Degeneracy::SegTypeEqualDiag: return "SegTypeEqualDiag";
    case Degeneracy::SegTypeAligned: return "SegTypeAligned";
  }
  return "Unknown";
}

namespace {

void require_d(double d, bool allow_zero) {
  if (!std::isfinite(d) || d < 0.0 || (!allow_zero && d == 0.0)) {
    throw Error(ErrorKind::InvalidInput,
                allow_zero ? "d must be finite and >= 0" : "d must be finite and > 0");
  }
}

// Unit complex (a-b)^2 / |a-b|^2, a != b.
Complex aligned_direction(Complex a, Complex b) {
  const Complex diff = a - b;
  return diff * diff / std::norm(diff);
}

Segment degenerate_endpoints(Complex a, Complex b, Complex c, double d, Degeneracy kind) {
  if (kind == Degeneracy::SegTypeEqualDiag) {
    const Complex mid = 0.5 * (a + b);
    const Complex half = d * std::sqrt(c);
    return {mid + half, mid - half};
  }
  const double k = 1.0 / std::norm(a - b);
  const Complex spread = (a - b) * std::sqrt(1.0 + 4.0 * k * d * d);
  return {0.5 * (a + b + spread), 0.5 * (a + b - spread)};
}

double distance_to_segment(Complex z, Complex p, Complex q) {
  const Complex dir = q - p;
  const double len2 = std::norm(dir);
  if (len2 == 0.0) return std::abs(z - p);
  const double t = std::clamp(((z - p) * std::conj(dir)).real() / len2, 0.0, 1.0);
  return std::abs(z - (p + t * dir));
}

// Root of F(s) = (r0 z0 / (s + r0))^2 + (z1 / (s + 1))^2 - 1 by bisection.
double ellipse_root(double r0, double z0, double z1, double g) {
  const double n0 = r0 * z0;
  double s0 = z1 - 1.0;
  double s1 = g < 0.0 ? 0.0 : std::hypot(n0, z1) - 1.0;
  double s = 0.0;
  for (int i = 0; i < 1100; ++i) {
    s = 0.5 * (s0 + s1);
    if (s == s0 || s == s1) break;
    const double ratio0 = n0 / (s + r0);
    const double ratio1 = z1 / (s + 1.0);
    const double f = ratio0 * ratio0 + ratio1 * ratio1 - 1.0;
    if (f > 0.0) {
      s0 = s;
    } else if (f < 0.0) {
      s1 = s;
    } else {
      break;
    }
  }
  return s;
}

// Distance from (x, y), x, y >= 0, to the ellipse x^2/e0^2 + y^2/e1^2 = 1
// with e0 >= e1 > 0.
double ellipse_distance(double e0, double e1, double x, double y) {
  if (y > 0.0) {
    if (x > 0.0) {
      const double z0 = x / e0;
      const double z1 = y / e1;
      const double g = z0 * z0 + z1 * z1 - 1.0;
      if (g == 0.0) return 0.0;
      const double r0 = (e0 / e1) * (e0 / e1);
      const double sbar = ellipse_root(r0, z0, z1, g);
      const double x0 = r0 * x / (sbar + r0);
      const double x1 = y / (sbar + 1.0);
      return std::hypot(x0 - x, x1 - y);
    }
    return std::abs(y - e1);
  }
  const double numer = e0 * x;
  const double denom = e0 * e0 - e1 * e1;
  if (numer < denom) {
    const double xde = numer / denom;
    const double x0 = e0 * xde;
    const double x1 = e1 * std::sqrt(std::max(0.0, 1.0 - xde * xde));
    return std::hypot(x0 - x, x1);
  }
  return std::abs(x - e0);
}

double major_axis_angle(const EllipseData& e) {
  const Complex diff = e.focus1 - e.focus2;
  return std::abs(diff) > 0.0 ? std::arg(diff) : 0.0;
}

}  // namespace

DenseMatrix s_matrix(Complex a, Complex b, Complex c, Complex d) {
  return DenseMatrix{{a, d}, {c * std::conj(d), b}};
}

EllipseData ellipse_data(Complex a, Complex b, Complex c, double d) {
  require_d(d, false);
  const Complex disc = (a - b) * (a - b) + 4.0 * c * d * d;
  const Complex root = std::sqrt(disc);
  const double base = std::norm(a - b) + 2.0 * (1.0 + std::norm(c)) * d * d;
  const double mod = std::abs(disc);
  const double scale = 1.0 / (2.0 * std::numbers::sqrt2);
  EllipseData e;
  e.focus1 = 0.5 * (a + b + root);
  e.focus2 = 0.5 * (a + b - root);
  e.semi_minor = scale * std::sqrt(std::max(0.0, base - mod));
  e.semi_major = scale * std::sqrt(base + mod);
  e.center = 0.5 * (a + b);
  return e;
}

Degeneracy classify_degeneracy(Complex a, Complex b, Complex c, const ToleranceConfig& cfg) {
  const bool unit = approx_equal(std::abs(c), 1.0, cfg.eq_tol);
  if (approx_equal(a, b, cfg.eq_tol)) {
    return unit ? Degeneracy::SegTypeEqualDiag : Degeneracy::NonDegenerate;
  }
  if (std::abs(c - aligned_direction(a, b)) <= cfg.eq_tol) return Degeneracy::SegTypeAligned;
  return Degeneracy::NonDegenerate;
}

bool is_normal_sd(Complex a, Complex b, Complex c, const ToleranceConfig& cfg) {
  return approx_equal(std::abs(c), 1.0, cfg.eq_tol) &&
         approx_equal(c * (std::conj(a) - std::conj(b)), a - b, cfg.eq_tol);
}

RegionDescriptor closed_region(Complex a, Complex b, Complex c, double d,
                               const ToleranceConfig& cfg) {
  require_d(d, true);
  if (d == 0.0) return {Segment{a, b}, Closure::ClosedSegment, std::nullopt};
  const auto kind = classify_degeneracy(a, b, c, cfg);
  if (kind != Degeneracy::NonDegenerate) {
    return {degenerate_endpoints(a, b, c, d, kind), Closure::ClosedSegment, std::nullopt};
  }
  return {ellipse_data(a, b, c, d), Closure::Closed, std::nullopt};
}

RegionDescriptor open_union_region(Complex a, Complex b, Complex c, double d,
                                   const ToleranceConfig& cfg) {
  require_d(d, false);
  const auto kind = classify_degeneracy(a, b, c, cfg);
  if (kind != Degeneracy::NonDegenerate) {
    return {degenerate_endpoints(a, b, c, d, kind), Closure::OpenSegment, std::nullopt};
  }
  const auto e = ellipse_data(a, b, c, d);
  if (approx_equal(std::abs(c), 1.0, cfg.eq_tol)) {
    return {e, Closure::InteriorPlusAB, std::make_pair(a, b)};
  }
  return {e, Closure::Open, std::nullopt};
}

RegionDescriptor gqo_numerical_range(const GQOParams& params, const OperatorModel& model,
                                     const ToleranceConfig& cfg) {
  const auto norm = model_norm(model, cfg);
  if (norm.value == 0.0) {
    return {Segment{params.a, params.b}, Closure::ClosedSegment, std::nullopt};
  }
  if (norm.attained) return closed_region(params.a, params.b, params.c, norm.value, cfg);
  return open_union_region(params.a, params.b, params.c, norm.value, cfg);
}

MembershipVerdict membership(const RegionDescriptor& region, Complex z,
                             const ToleranceConfig& cfg) {
  const double tol = cfg.geom_tol;
  if (region.is_disk()) {
    const auto& e = region.ellipse();
    const double sum = std::abs(z - e.focus1) + std::abs(z - e.focus2);
    const double gap = sum - 2.0 * e.semi_major;
    const double dist = std::abs(gap);
    if (dist <= tol) {
      bool included = region.closure == Closure::Closed;
      if (region.closure == Closure::InteriorPlusAB && region.extra_points) {
        const auto [pa, pb] = *region.extra_points;
        included = std::abs(z - pa) <= tol || std::abs(z - pb) <= tol;
      }
      return {included ? Verdict::OnBoundaryIncluded : Verdict::OnBoundaryExcluded, dist};
    }
    return {gap < 0.0 ? Verdict::Inside : Verdict::Outside, dist};
  }

  const auto& s = region.segment();
  const double to_segment = distance_to_segment(z, s.end1, s.end2);
  if (to_segment > tol) return {Verdict::Outside, to_segment};
  const double to_end = std::min(std::abs(z - s.end1), std::abs(z - s.end2));
  if (to_end <= tol) {
    return {region.closure == Closure::ClosedSegment ? Verdict::OnBoundaryIncluded
                                                     : Verdict::OnBoundaryExcluded,
            to_end};
  }
  return {Verdict::Inside, to_end};
}

std::vector<Complex> boundary_points(const RegionDescriptor& region, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "boundary_points needs n >= 2");
  std::vector<Complex> out;
  out.reserve(n);
  if (region.is_disk()) {
    const auto& e = region.ellipse();
    const Complex rot = std::polar(1.0, major_axis_angle(e));
    for (std::size_t k = 0; k < n; ++k) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      out.push_back(e.center + rot * Complex(e.semi_major * std::cos(t), e.semi_minor * std::sin(t)));
    }
    return out;
  }
  const auto& s = region.segment();
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n - 1);
    out.push_back(k + 1 == n ? s.end2 : s.end1 + t * (s.end2 - s.end1));
  }
  return out;
}

double signed_distance(const RegionDescriptor& region, Complex z) {
  if (!region.is_disk()) {
    const auto& s = region.segment();
    return distance_to_segment(z, s.end1, s.end2);
  }
  const auto& e = region.ellipse();
  const Complex w = std::polar(1.0, -major_axis_angle(e)) * (z - e.center);
  const double x = std::abs(w.real());
  const double y = std::abs(w.imag());
  const double major = e.semi_major;
  const double minor = e.semi_minor;
  if (minor <= 0.0) {
    return distance_to_segment(Complex(x, y), Complex(-major, 0.0), Complex(major, 0.0));
  }
  const double dist = ellipse_distance(major, minor, x, y);
  const double level = (x / major) * (x / major) + (y / minor) * (y / minor);
  return level < 1.0 ? -dist : dist;
}

ThresholdDistances threshold_distances(Complex a, Complex b, Complex c) {
  ThresholdDistances out{};
  out.unit_c = std::abs(std::abs(c) - 1.0);
  out.equal_diag = std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
  if (a != b) out.aligned = std::abs(c - aligned_direction(a, b));
  return out;
}

}  // namespace quadrange
