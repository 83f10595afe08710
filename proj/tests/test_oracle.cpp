#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "quadrange/oracle.hpp"
#include "support.hpp"

using namespace quadrange;

namespace {

BoundaryPolygon circle(Complex center, double radius, std::size_t n) {
  BoundaryPolygon p;
  for (std::size_t k = 0; k < n; ++k) {
    p.vertices.push_back(center + std::polar(radius, 2.0 * std::numbers::pi * k / n));
  }
  return p;
}

}  // namespace

TEST_CASE("CounterRng") {
  const CounterRng rng(42);
  CHECK(rng.word(0) == CounterRng(42).word(0));
  CHECK(rng.word(0) != rng.word(1));
  CHECK(rng.word(0) != CounterRng(43).word(0));
  // SplitMix64 reference: first output for state 0 is 0xe220a8397b1dcdaf.
  CHECK(CounterRng(0).word(0) == 0xe220a8397b1dcdafULL);
  double sum = 0.0, sum2 = 0.0;
  for (std::uint64_t i = 0; i < 20000; ++i) {
    const double u = rng.uniform(i);
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    const Complex g = rng.gaussian(i);
    sum += g.real() + g.imag();
    sum2 += std::norm(g);
  }
  CHECK(std::abs(sum / 40000.0) < 0.02);
  CHECK(std::abs(sum2 / 40000.0 - 1.0) < 0.03);
}

TEST_CASE("sample_range examples") {
  SUBCASE("Hermitian") {
    const auto cloud = sample_range(DenseMatrix{{0.0, 0.0}, {0.0, 1.0}}, 2000, 1);
    CHECK(cloud.points.size() == 2000);
    CHECK(cloud.count == 2000);
    for (const auto& z : cloud.points) {
      CHECK(std::abs(z.imag()) < 1e-15);
      CHECK(z.real() >= -1e-15);
      CHECK(z.real() <= 1.0 + 1e-15);
    }
  }
  SUBCASE("Jordan block") {
    const auto cloud = sample_range(DenseMatrix{{0.0, 1.0}, {0.0, 0.0}}, 5000, 2);
    for (const auto& z : cloud.points) CHECK(std::abs(z) <= 0.5 + 1e-12);
  }
  SUBCASE("determinism") {
    qtest::Gen gen(61);
    const auto t = gen.matrix(4, 4);
    const auto x = sample_range(t, 1000, 99);
    const auto y = sample_range(t, 1000, 99);
    REQUIRE(x.points.size() == y.points.size());
    bool identical = true;
    for (std::size_t i = 0; i < x.points.size(); ++i) identical = identical && x.points[i] == y.points[i];
    CHECK(identical);
    CHECK(sample_range(t, 1000, 100).points[0] != x.points[0]);
  }
  CHECK_THROWS_AS(sample_range(DenseMatrix(1, 2, {1.0, 2.0}), 10, 0), Error);
  CHECK_THROWS_AS(sample_range(DenseMatrix{{1.0}}, 0, 0), Error);
}

TEST_CASE("convex_hull") {
  const std::vector<Complex> pts = {0.0, 1.0, Complex(1.0, 1.0), Complex(0.0, 1.0),
                                    Complex(0.5, 0.5), Complex(0.5, 0.0), 1.0};
  const auto hull = convex_hull(pts);
  REQUIRE(hull.vertices.size() == 4);
  CHECK(hull.vertices[0] == Complex(0.0));
  CHECK(hull.vertices[1] == Complex(1.0));
  CHECK(hull.vertices[2] == Complex(1.0, 1.0));
  CHECK(hull.vertices[3] == Complex(0.0, 1.0));
  CHECK(convex_hull(std::vector<Complex>{2.0, 2.0}).vertices.size() == 1);
  CHECK(convex_hull(std::vector<Complex>{0.0, 0.5, 1.0}).vertices.size() == 2);
}

TEST_CASE("support_boundary examples") {
  SUBCASE("Hermitian diagonal") {
    const auto poly = support_boundary(DenseMatrix{{0.0, 0.0}, {0.0, 1.0}}, 64);
    REQUIRE(poly.vertices.size() == 2);
    CHECK(std::abs(poly.vertices[0]) < 1e-12);
    CHECK(std::abs(poly.vertices[1] - 1.0) < 1e-12);
  }
  SUBCASE("Jordan block") {
    const auto poly = support_boundary(DenseMatrix{{0.0, 1.0}, {0.0, 0.0}}, 360);
    for (const auto& z : poly.vertices) CHECK(std::abs(std::abs(z) - 0.5) <= 1e-9);
  }
  SUBCASE("ellipse with foci +-1") {
    const auto poly = support_boundary(DenseMatrix{{1.0, 1.0}, {0.0, -1.0}}, 720);
    const auto predicted = convex_hull(boundary_points(closed_region(1.0, -1.0, 0.0, 1.0), 4096));
    CHECK(hausdorff(poly, predicted, Resample::Smooth) <= 1e-6);
    // Straight-chord comparison is limited by the chord sag of the polygon.
    const double sag = 2.0 * std::pow(std::numbers::pi / 720.0, 2.0);
    CHECK(hausdorff(poly, predicted, Resample::Linear) <= sag);
  }
  CHECK_THROWS_AS(support_boundary(DenseMatrix{{1.0}}, 2), Error);
}

TEST_CASE("hausdorff examples") {
  const BoundaryPolygon square{{0.0, 1.0, Complex(1.0, 1.0), Complex(0.0, 1.0)}};
  CHECK(hausdorff(square, square) == 0.0);
  BoundaryPolygon shifted = square;
  for (auto& z : shifted.vertices) z += 1.0;
  CHECK(hausdorff(square, shifted) == doctest::Approx(1.0).epsilon(1e-12));
  const double d = hausdorff(circle(0.0, 1.0, 2048), circle(0.0, 1.1, 2048));
  CHECK(std::abs(d - 0.1) <= 1e-3);
  CHECK(std::abs(hausdorff(circle(0.0, 1.0, 64), circle(0.0, 1.1, 64), Resample::Smooth) - 0.1) <= 1e-6);
  CHECK(hausdorff(BoundaryPolygon{{0.0}}, BoundaryPolygon{{Complex(3.0, 4.0)}}) == 5.0);
  CHECK_THROWS_AS(hausdorff(BoundaryPolygon{}, square), Error);
}

TEST_CASE("verify_region examples") {
  ToleranceConfig cfg;
  SUBCASE("circle") {
    const auto r = verify_region(GQOParams(0.0, 0.0, 0.0), DenseMatrix{{1.0}}, cfg, 10000, 720, 7);
    CHECK(r.max_outward_violation <= 1e-9);
    CHECK(r.hausdorff_closed <= 1e-6);
  }
  SUBCASE("ellipse") {
    const auto r = verify_region(GQOParams(1.0, -1.0, 0.0), DenseMatrix{{1.0}}, cfg, 10000, 720, 7);
    CHECK(r.max_outward_violation <= 1e-9);
    CHECK(r.hausdorff_closed <= 1e-5);
  }
  SUBCASE("segment") {
    const auto r = verify_region(GQOParams(0.0, 2.0, 1.0), DenseMatrix{{1.0}}, cfg, 10000, 720, 7);
    CHECK(r.max_outward_violation <= 1e-9);
    const auto cloud = sample_range(assemble(GQOParams(0.0, 2.0, 1.0), DenseMatrix{{1.0}}).block, 10000, 7);
    for (const auto& z : cloud.points) {
      CHECK(std::abs(z.imag()) <= 1e-9);
      CHECK(z.real() >= 1.0 - std::numbers::sqrt2 - 1e-9);
      CHECK(z.real() <= 1.0 + std::numbers::sqrt2 + 1e-9);
    }
  }
}

TEST_CASE("oracle containment and convergence on random instances") {
  qtest::Gen gen(62);
  ToleranceConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    Complex a = gen.cnormal(), b = gen.cnormal(), c = gen.cnormal();
    if (trial % 3 == 1) c = gen.unit();
    if (trial % 6 == 2) c = (a - b) * (a - b) / std::norm(a - b);
    if (trial % 6 == 5) { b = a; c = gen.unit(); }
    const GQOParams p(a, b, c);
    const auto amat = gen.matrix(gen.dim(3), gen.dim(3));
    const double d = operator_norm(amat);
    const auto region = closed_region(a, b, c, d);
    ToleranceConfig band = cfg;
    band.geom_tol = cfg.geom_tol * (1.0 + instance_scale(p, d));
    for (const auto& z : sample_range(assemble(p, amat).block, 5000, trial).points) {
      CHECK(membership(region, z, band).value != Verdict::Outside);
    }
    const double coarse = verify_region(p, amat, cfg, 10, 90, 1).hausdorff_closed;
    const double fine = verify_region(p, amat, cfg, 10, 1440, 1).hausdorff_closed;
    CHECK(fine <= coarse + 1e-12);
  }
}

TEST_CASE("support boundary is unitarily invariant") {
  qtest::Gen gen(63);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = gen.dim(5);
    const auto t = gen.matrix(n, n);
    const auto u = gen.unitary(n);
    const auto p1 = support_boundary(t, 180);
    const auto p2 = support_boundary(u.adjoint() * t * u, 180);
    CHECK(hausdorff(p1, p2) <= 1e-8);
  }
}

TEST_CASE("samples of W(S_d) for d = |<Av, u>| lie in the predicted W(T)") {
  qtest::Gen gen(64);
  for (int trial = 0; trial < 20; ++trial) {
    const GQOParams p(gen.cnormal(), gen.cnormal(), trial % 2 ? gen.unit() : gen.cnormal());
    const auto amat = gen.matrix(gen.dim(4), gen.dim(4));
    const double norm_a = operator_norm(amat);
    const auto region = closed_region(p.a, p.b, p.c, norm_a);
    ToleranceConfig band;
    band.geom_tol *= 1.0 + instance_scale(p, norm_a);
    for (int pair = 0; pair < 5; ++pair) {
      Vector u(amat.rows()), v(amat.cols());
      for (auto& z : u) z = gen.cnormal();
      for (auto& z : v) z = gen.cnormal();
      const double nu = norm2(u), nv = norm2(v);
      for (auto& z : u) z /= nu;
      for (auto& z : v) z /= nv;
      const double d = std::abs(inner(amat * std::span<const Complex>(v), u));
      const auto cloud = sample_range(s_matrix(p.a, p.b, p.c, d), 1000, 500 + pair);
      for (const auto& z : cloud.points) CHECK(membership(region, z, band).value != Verdict::Outside);
    }
  }
}

TEST_CASE("write_csv") {
  std::ostringstream os;
  const std::vector<Complex> pts = {Complex(0.1, -0.0), Complex(-2.5, 3.0)};
  write_csv(os, pts);
  CHECK(os.str() == "re,im\n0.10000000000000001,0\n-2.5,3\n");
}

TEST_CASE("instance_scale") {
  CHECK(instance_scale(GQOParams(1.0, -3.0, Complex(0.0, 2.0)), 0.5) == doctest::Approx(1.0 + 3.0 + 1.5));
}
