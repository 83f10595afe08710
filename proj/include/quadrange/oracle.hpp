#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "quadrange/model.hpp"
#include "quadrange/range_geometry.hpp"

namespace quadrange {

/// Rayleigh quotients <Tx, x> for random unit vectors x.
struct SampleCloud {
  std::vector<Complex> points;
  std::uint64_t seed = 0;
  std::size_t count = 0;
};

/// Convex polygon with counterclockwise vertices. One vertex is a point,
/// two vertices a segment.
struct BoundaryPolygon {
  std::vector<Complex> vertices;
};

/// Counter-based generator: the i-th draw is SplitMix64 evaluated at
/// seed + (i + 1) * golden_gamma, so any draw can be produced without
/// replaying the ones before it.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t word(std::uint64_t counter) const;
  /// Uniform in the open interval (0, 1).
  double uniform(std::uint64_t counter) const;
  /// Complex Gaussian with independent N(0, 1) parts, from draws
  /// 2*counter and 2*counter + 1 via Box-Muller.
  Complex gaussian(std::uint64_t counter) const;

 private:
  std::uint64_t seed_;
};

SampleCloud sample_range(const DenseMatrix& t, std::size_t count, std::uint64_t seed);

/// Convex hull (counterclockwise, starting at the lowest-leftmost point);
/// vertices closer than 1e-12 relative are merged.
BoundaryPolygon convex_hull(std::span<const Complex> points);

/// For each angle theta, the top eigenvector x of Re(e^{-i theta} T) gives
/// the boundary point <Tx, x>; the hull of those points is returned. Half of
/// the `angles` evaluations form a uniform grid and the rest refine where
/// the polygon sags most, so thin ellipses are resolved along their sides.
BoundaryPolygon support_boundary(const DenseMatrix& t, std::size_t angles,
                                 const ToleranceConfig& cfg = {});

/// How a vertex list is turned into a dense curve before comparison.
///   Linear: the polygon itself.
///   Smooth: periodic cubic spline (chord-length parameter) through the
///           vertices; for samples of smooth convex boundaries. Polygons
///           with fewer than four vertices fall back to Linear.
enum class Resample { Linear, Smooth };

/// Symmetric Hausdorff distance between the two closed curves, each
/// resampled at >= 16384 points and compared against the other's dense
/// polyline. Smooth resamples along a periodic cubic spline.
double hausdorff(const BoundaryPolygon& pa, const BoundaryPolygon& pb,
                 Resample mode = Resample::Linear);

/// Size of an instance: 1 + max(|a|, |b|) + d (1 + |c|). Bounds ||S_d||.
double instance_scale(const GQOParams& params, double d);

struct VerifyReport {
  double max_outward_violation = 0.0;
  double hausdorff_closed = 0.0;
  double scale = 1.0;
  RegionDescriptor region;
};

/// Checks the predicted closed region of T = [[aI, A], [cA*, bI]] against
/// Rayleigh samples (containment) and the support-function boundary
/// (tightness).
VerifyReport verify_region(const GQOParams& params, const DenseMatrix& a_block,
                           const ToleranceConfig& cfg, std::size_t samples, std::size_t angles,
                           std::uint64_t seed);

/// CSV with header "re,im", one point per line, 17 significant digits.
void write_csv(std::ostream& os, std::span<const Complex> points);

}  // namespace quadrange
