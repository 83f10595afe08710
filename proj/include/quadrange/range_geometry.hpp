#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "quadrange/model.hpp"

namespace quadrange {

/// Elliptical disk W(S_d): foci are the eigenvalues of S_d.
struct EllipseData {
  Complex focus1;
  Complex focus2;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  Complex center;
};

struct Segment {
  Complex end1;
  Complex end2;
};

enum class Closure { Closed, Open, InteriorPlusAB, ClosedSegment, OpenSegment };

std::string_view to_string(Closure c);

/// A numerical-range region together with which boundary points belong to
/// it. InteriorPlusAB keeps the two admitted boundary points explicitly.
struct RegionDescriptor {
  std::variant<EllipseData, Segment> shape;
  Closure closure = Closure::Closed;
  std::optional<std::pair<Complex, Complex>> extra_points;

  bool is_disk() const { return std::holds_alternative<EllipseData>(shape); }
  const EllipseData& ellipse() const { return std::get<EllipseData>(shape); }
  const Segment& segment() const { return std::get<Segment>(shape); }
  bool is_closed() const { return closure == Closure::Closed || closure == Closure::ClosedSegment; }
};

enum class Verdict { Inside, OnBoundaryIncluded, OnBoundaryExcluded, Outside };

std::string_view to_string(Verdict v);

struct MembershipVerdict {
  Verdict value = Verdict::Outside;
  double boundary_distance = 0.0;
};

enum class Degeneracy { NonDegenerate, SegTypeEqualDiag, SegTypeAligned };

std::string_view to_string(Degeneracy d);

/// S_d = [[a, d], [c conj(d), b]].
DenseMatrix s_matrix(Complex a, Complex b, Complex c, Complex d);

/// Foci, semi-axes and center of W(S_d), d > 0.
EllipseData ellipse_data(Complex a, Complex b, Complex c, double d);

/// Whether W(S_d) is a segment for d > 0 (independent of d).
Degeneracy classify_degeneracy(Complex a, Complex b, Complex c, const ToleranceConfig& cfg = {});

/// S_d normal for d > 0: |c| = 1 and c (conj(a) - conj(b)) = a - b.
bool is_normal_sd(Complex a, Complex b, Complex c, const ToleranceConfig& cfg = {});

/// W(S_d), d >= 0.
RegionDescriptor closed_region(Complex a, Complex b, Complex c, double d,
                               const ToleranceConfig& cfg = {});

/// E_d = union of W(S_t) over t in (0, d), d > 0.
RegionDescriptor open_union_region(Complex a, Complex b, Complex c, double d,
                                   const ToleranceConfig& cfg = {});

/// W(T): the closed segment [a, b] when A = 0, W(S_d) when ||A|| = d is
/// attained, E_d otherwise.
RegionDescriptor gqo_numerical_range(const GQOParams& params, const OperatorModel& model,
                                     const ToleranceConfig& cfg = {});

MembershipVerdict membership(const RegionDescriptor& region, Complex z,
                             const ToleranceConfig& cfg = {});

/// n >= 2 points on the boundary (ellipse: uniform in the eccentric
/// parameter; segment: evenly spaced, both endpoints included).
std::vector<Complex> boundary_points(const RegionDescriptor& region, std::size_t n);

/// Euclidean distance from z to the boundary curve of the region's shape,
/// negative for points strictly inside a disk. Segments give the plain
/// distance to the segment.
double signed_distance(const RegionDescriptor& region, Complex z);

/// Distances from the classification thresholds, used to flag fragile
/// classifications: ||c| - 1|, |a - b| and |c - (a-b)^2/|a-b|^2| (the last
/// only when a != b).
struct ThresholdDistances {
  double unit_c;
  double equal_diag;
  std::optional<double> aligned;
};
ThresholdDistances threshold_distances(Complex a, Complex b, Complex c);

}  // namespace quadrange
