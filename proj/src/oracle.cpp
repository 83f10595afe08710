#include "quadrange/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <numbers>
#include <ostream>
#include <queue>

namespace quadrange {

std::uint64_t CounterRng::word(std::uint64_t counter) const {
  std::uint64_t z = seed_ + (counter + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t counter) const {
  return (static_cast<double>(word(counter) >> 11) + 0.5) * 0x1.0p-53;
}

Complex CounterRng::gaussian(std::uint64_t counter) const {
  const double u1 = uniform(2 * counter);
  const double u2 = uniform(2 * counter + 1);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

SampleCloud sample_range(const DenseMatrix& t, std::size_t count, std::uint64_t seed) {
  if (!t.is_square()) throw Error(ErrorKind::InvalidInput, "sample_range needs a square matrix");
  if (count == 0) throw Error(ErrorKind::InvalidInput, "sample_range needs count >= 1");
  const std::size_t n = t.rows();
  const CounterRng rng(seed);
  SampleCloud cloud{{}, seed, count};
  cloud.points.reserve(count);
  Vector x(n);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < n; ++j) x[j] = rng.gaussian(i * n + j);
    const double len = norm2(x);
    for (auto& z : x) z /= len;
    const auto tx = t * std::span<const Complex>(x);
    cloud.points.push_back(inner(tx, x));
  }
  return cloud;
}

namespace {

double cross(Complex o, Complex p, Complex q) {
  return (p - o).real() * (q - o).imag() - (p - o).imag() * (q - o).real();
}

}  // namespace

BoundaryPolygon convex_hull(std::span<const Complex> points) {
  if (points.empty()) return {};
  std::vector<Complex> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Complex p, Complex q) {
    return p.real() < q.real() || (p.real() == q.real() && p.imag() < q.imag());
  });
  double extent = 0.0;
  for (const auto& p : pts) extent = std::max(extent, std::abs(p - pts.front()));
  const double merge = 1e-12 * std::max(1.0, extent + std::abs(pts.front()));

  // Andrew's monotone chain; collinear points are dropped.
  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k > 1 ? k - 1 : k);

  BoundaryPolygon out;
  for (const auto& p : hull) {
    if (out.vertices.empty() || std::abs(p - out.vertices.back()) > merge) {
      out.vertices.push_back(p);
    }
  }
  while (out.vertices.size() > 1 && std::abs(out.vertices.back() - out.vertices.front()) <= merge) {
    out.vertices.pop_back();
  }
  return out;
}

BoundaryPolygon support_boundary(const DenseMatrix& t, std::size_t angles,
                                 const ToleranceConfig& cfg) {
  if (!t.is_square()) throw Error(ErrorKind::InvalidInput, "support_boundary needs a square matrix");
  if (angles < 3) throw Error(ErrorKind::InvalidInput, "support_boundary needs angles >= 3");
  const auto t_adj = t.adjoint();
  auto support_point = [&](double theta) {
    const Complex rot = std::polar(1.0, -theta);
    auto h = Complex(0.5) * (rot * t + std::conj(rot) * t_adj);
    const auto eig = hermitian_eigen(h, cfg);
    const auto x = column(eig.vectors, eig.values.size() - 1);
    const auto tx = t * std::span<const Complex>(x);
    return inner(tx, x) / inner(x, x).real();
  };

  // Half the budget on a uniform grid, the rest bisecting the interval with
  // the largest chord times angle gap (proportional to its sag).
  struct Interval {
    double key, lo, hi;
    Complex p_lo, p_hi;
    bool operator<(const Interval& o) const { return key < o.key || (key == o.key && lo > o.lo); }
  };
  const std::size_t uniform = std::max<std::size_t>(3, angles / 2);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(uniform);
  std::vector<Complex> pts;
  pts.reserve(angles);
  for (std::size_t k = 0; k < uniform; ++k) pts.push_back(support_point(step * static_cast<double>(k)));
  std::priority_queue<Interval> queue;
  for (std::size_t k = 0; k < uniform; ++k) {
    const Complex p = pts[k], q = pts[(k + 1) % uniform];
    queue.push({std::abs(q - p) * step, step * static_cast<double>(k), step * static_cast<double>(k + 1), p, q});
  }
  while (pts.size() < angles) {
    const Interval top = queue.top();
    queue.pop();
    const double mid = 0.5 * (top.lo + top.hi);
    const Complex m = support_point(mid);
    pts.push_back(m);
    const double gap = 0.5 * (top.hi - top.lo);
    queue.push({std::abs(m - top.p_lo) * gap, top.lo, mid, top.p_lo, m});
    queue.push({std::abs(top.p_hi - m) * gap, mid, top.hi, m, top.p_hi});
  }
  return convex_hull(pts);
}

namespace {

// Periodic cubic spline through closed-curve vertices with chord-length
// knots; returns `per_edge` points per edge starting at each vertex.
std::vector<Complex> spline_resample(const std::vector<Complex>& v, std::size_t per_edge) {
  const std::size_t n = v.size();
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = std::abs(v[(i + 1) % n] - v[i]);

  // Cyclic tridiagonal system for the second derivatives (complex-valued
  // so x and y are solved together); Sherman-Morrison on the corners.
  std::vector<double> lower(n), diag(n), upper(n);
  std::vector<Complex> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    lower[i] = h[prev];
    diag[i] = 2.0 * (h[prev] + h[i]);
    upper[i] = h[i];
    rhs[i] = 6.0 * ((v[(i + 1) % n] - v[i]) / h[i] - (v[i] - v[prev]) / h[prev]);
  }
  auto solve_tridiag = [&](std::vector<double> dd, std::vector<Complex> r) {
    std::vector<double> up = upper;
    for (std::size_t i = 1; i < n; ++i) {
      const double w = lower[i] / dd[i - 1];
      dd[i] -= w * up[i - 1];
      r[i] -= w * r[i - 1];
    }
    std::vector<Complex> x(n);
    x[n - 1] = r[n - 1] / dd[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = (r[i] - up[i] * x[i + 1]) / dd[i];
    return x;
  };
  const double alpha = upper[n - 1];  // corner (n-1, 0)
  const double beta = lower[0];       // corner (0, n-1)
  const double gamma = -diag[0];
  std::vector<double> dmod = diag;
  dmod[0] -= gamma;
  dmod[n - 1] -= alpha * beta / gamma;
  const auto y = solve_tridiag(dmod, rhs);
  std::vector<Complex> u(n);
  u[0] = gamma;
  u[n - 1] = alpha;
  const auto z = solve_tridiag(dmod, u);
  const Complex fact = (y[0] + beta * y[n - 1] / gamma) / (1.0 + z[0] + beta * z[n - 1] / gamma);
  std::vector<Complex> m2(n);
  for (std::size_t i = 0; i < n; ++i) m2[i] = y[i] - fact * z[i];

  std::vector<Complex> out;
  out.reserve(n * per_edge);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    for (std::size_t s = 0; s < per_edge; ++s) {
      const double t = static_cast<double>(s) / static_cast<double>(per_edge);
      const double a = 1.0 - t;
      const double hh = h[i] * h[i] / 6.0;
      out.push_back(a * v[i] + t * v[j] + hh * ((a * a * a - a) * m2[i] + (t * t * t - t) * m2[j]));
    }
  }
  return out;
}

std::vector<Complex> resample(const BoundaryPolygon& p, Resample mode) {
  const auto& v = p.vertices;
  if (v.size() <= 1) return v;
  const std::size_t target = std::max<std::size_t>(16384, 32 * v.size());
  const std::size_t per_edge = std::max<std::size_t>(1, (target + v.size() - 1) / v.size());
  if (mode == Resample::Smooth && v.size() >= 4) return spline_resample(v, per_edge);
  std::vector<Complex> out;
  out.reserve(v.size() * per_edge);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex from = v[i];
    const Complex to = v[(i + 1) % v.size()];
    for (std::size_t s = 0; s < per_edge; ++s) {
      out.push_back(from + (to - from) * (static_cast<double>(s) / static_cast<double>(per_edge)));
    }
  }
  return out;
}

double point_segment(Complex z, Complex p, Complex q) {
  const Complex dir = q - p;
  const double len2 = std::norm(dir);
  if (len2 == 0.0) return std::abs(z - p);
  const double t = std::clamp(((z - p) * std::conj(dir)).real() / len2, 0.0, 1.0);
  return std::abs(z - (p + t * dir));
}

// Kd-tree over segment midpoints. A segment lies within half its length of
// its midpoint, so subtrees are pruned against best + max half length.
class SegmentTree {
 public:
  explicit SegmentTree(const std::vector<Complex>& curve) : curve_(curve) {
    const std::size_t n = curve_.size();
    mids_.resize(n);
    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex p = curve_[i], q = curve_[(i + 1) % n];
      mids_[i] = 0.5 * (p + q);
      half_ = std::max(half_, 0.5 * std::abs(q - p));
      order_[i] = i;
    }
    build(0, n, 0);
  }

  // Distance from z to the curve, or some value <= cutoff once the distance
  // is known not to exceed cutoff.
  double distance(Complex z, double cutoff) const {
    double best = std::numeric_limits<double>::infinity();
    search(z, 0, order_.size(), 0, cutoff, best);
    return best;
  }

 private:
  static double coord(Complex z, int axis) { return axis == 0 ? z.real() : z.imag(); }

  void build(std::size_t lo, std::size_t hi, int axis) {
    if (hi - lo <= 1) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(lo),
                     order_.begin() + static_cast<std::ptrdiff_t>(mid),
                     order_.begin() + static_cast<std::ptrdiff_t>(hi),
                     [&](std::size_t x, std::size_t y) {
                       return coord(mids_[x], axis) < coord(mids_[y], axis);
                     });
    build(lo, mid, 1 - axis);
    build(mid + 1, hi, 1 - axis);
  }

  void search(Complex z, std::size_t lo, std::size_t hi, int axis, double cutoff,
              double& best) const {
    if (lo >= hi || best <= cutoff) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    const std::size_t i = order_[mid];
    best = std::min(best, point_segment(z, curve_[i], curve_[(i + 1) % curve_.size()]));
    const double diff = coord(z, axis) - coord(mids_[i], axis);
    if (diff < 0.0) {
      search(z, lo, mid, 1 - axis, cutoff, best);
      if (diff > -(best + half_)) search(z, mid + 1, hi, 1 - axis, cutoff, best);
    } else {
      search(z, mid + 1, hi, 1 - axis, cutoff, best);
      if (diff < best + half_) search(z, lo, mid, 1 - axis, cutoff, best);
    }
  }

  const std::vector<Complex>& curve_;
  std::vector<Complex> mids_;
  std::vector<std::size_t> order_;
  double half_ = 0.0;
};

double directed(const std::vector<Complex>& from, const std::vector<Complex>& to) {
  if (to.size() == 1) {
    double worst = 0.0;
    for (const auto& z : from) worst = std::max(worst, std::abs(z - to.front()));
    return worst;
  }
  const SegmentTree tree(to);
  double worst = 0.0;
  // Visit queries in a scattered order so that worst grows early and prunes.
  const std::size_t n = from.size();
  std::size_t stride = static_cast<std::size_t>(0.6180339887498949 * static_cast<double>(n)) | 1;
  while (std::gcd(stride, n) != 1) stride += 2;
  for (std::size_t k = 0, i = 0; k < n; ++k, i = (i + stride) % n) {
    worst = std::max(worst, tree.distance(from[i], worst));
  }
  return worst;
}

}  // namespace

double hausdorff(const BoundaryPolygon& pa, const BoundaryPolygon& pb, Resample mode) {
  if (pa.vertices.empty() || pb.vertices.empty()) {
    throw Error(ErrorKind::InvalidInput, "hausdorff needs nonempty polygons");
  }
  const auto da = resample(pa, mode);
  const auto db = resample(pb, mode);
  return std::max(directed(da, db), directed(db, da));
}

double instance_scale(const GQOParams& params, double d) {
  return 1.0 + std::max(std::abs(params.a), std::abs(params.b)) + d * (1.0 + std::abs(params.c));
}

VerifyReport verify_region(const GQOParams& params, const DenseMatrix& a_block,
                           const ToleranceConfig& cfg, std::size_t samples, std::size_t angles,
                           std::uint64_t seed) {
  const auto t = assemble(params, a_block).block;
  const double d = operator_norm(a_block, cfg);
  VerifyReport out;
  out.region = closed_region(params.a, params.b, params.c, d, cfg);
  out.scale = instance_scale(params, d);

  const auto cloud = sample_range(t, samples, seed);
  out.max_outward_violation = -std::numeric_limits<double>::infinity();
  for (const auto& z : cloud.points) {
    out.max_outward_violation = std::max(out.max_outward_violation, signed_distance(out.region, z));
  }

  const auto oracle = support_boundary(t, angles, cfg);
  const auto predicted =
      convex_hull(boundary_points(out.region, std::max<std::size_t>(2048, 2 * angles)));
  const auto mode = out.region.is_disk() ? Resample::Smooth : Resample::Linear;
  out.hausdorff_closed = hausdorff(oracle, predicted, mode);
  return out;
}

void write_csv(std::ostream& os, std::span<const Complex> points) {
  os << "re,im\n";
  char buf[64];
  for (const auto& z : points) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", z.real() == 0.0 ? 0.0 : z.real(),
                  z.imag() == 0.0 ? 0.0 : z.imag());
    os << buf;
  }
}

}  // namespace quadrange
