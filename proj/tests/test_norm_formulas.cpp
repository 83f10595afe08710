#include <doctest.h>

#include <cmath>

#include "quadrange/model.hpp"
#include "quadrange/norm_formulas.hpp"
#include "support.hpp"

using namespace quadrange;

namespace {

const Complex I(0.0, 1.0);

// Largest singular value of [[2, 1], [i, 1]], computed independently with an
// LAPACK SVD.
constexpr double kNorm2_1_i = 2.488489984622653;

}  // namespace

TEST_CASE("rs_coefficients examples") {
  auto rs = rs_coefficients(0.0, 0.0, 0.0, 1.0, 1.0);
  CHECK(rs.r == 1.0);
  CHECK(rs.s == 0.0);
  rs = rs_coefficients(1.0, 1.0, 1.0, 1.0, 1.0);
  CHECK(rs.r == 4.0);
  CHECK(rs.s == 0.0);
  rs = rs_coefficients(2.0, 1.0, I, 1.0, 1.0);
  CHECK(rs.r == 7.0);
  CHECK(rs.s == doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-15));
}

TEST_CASE("gqo_norm examples") {
  CHECK(gqo_norm(0.0, 0.0, 0.0, 1.0, 1.0).norm == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gqo_norm(1.0, 1.0, 1.0, 1.0, 1.0).norm == doctest::Approx(2.0).epsilon(1e-15));
  const auto n = gqo_norm(2.0, 1.0, I, 1.0, 1.0);
  CHECK(std::abs(n.norm - kNorm2_1_i) < 1e-14);
  CHECK(n.r2_minus_s2 == doctest::Approx(29.0).epsilon(1e-14));
  CHECK(std::abs(n.norm_squared - n.norm * n.norm) <= 1e-12 * n.norm_squared);
  CHECK(std::abs(n.norm_squared - 0.5 * (n.r + std::sqrt(n.r * n.r - n.s * n.s))) <=
        1e-12 * n.norm_squared);
}

TEST_CASE("matrix2x2_norm examples") {
  CHECK(matrix2x2_norm(0.0, 0.0, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(matrix2x2_norm(1.0, 1.0, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(matrix2x2_norm(2.0, 1.0, I, 1.0) - kNorm2_1_i) < 1e-14);
}

TEST_CASE("r2_minus_s2_expanded examples") {
  auto e = r2_minus_s2_expanded(2.0, 1.0, I, 1.0);
  CHECK(e.value == doctest::Approx(29.0).epsilon(1e-14));
  CHECK(e.k == doctest::Approx(10.0).epsilon(1e-14));
  e = r2_minus_s2_expanded(1.0, 1.0, 1.0, 1.0);
  CHECK(e.value == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(e.k == doctest::Approx(8.0).epsilon(1e-14));
  e = r2_minus_s2_expanded(1.0, 0.0, 0.0, 2.0);
  CHECK(e.value == doctest::Approx(25.0).epsilon(1e-14));
  CHECK(e.k == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("negative norm of A is rejected") {
  CHECK_THROWS_AS(gqo_norm(0.0, 0.0, 0.0, 1.0, -1.0), Error);
  CHECK_THROWS_AS(rs_coefficients(0.0, 0.0, 0.0, 1.0, std::nan("")), Error);
}

TEST_CASE("closed form matches the eigensolver on random instances") {
  qtest::Gen gen(21);
  for (int trial = 0; trial < 300; ++trial) {
    const GQOParams p(gen.cnormal(), gen.cnormal(), gen.cnormal());
    const Complex d = trial % 3 == 0 ? Complex(1.0) : gen.cnormal();
    const auto a = gen.matrix(gen.dim(8), gen.dim(8));
    const double direct = operator_norm(assemble_coupled(p, d, a));
    const auto closed = gqo_norm(p.a, p.b, p.c, d, operator_norm(a));
    CHECK(std::abs(closed.norm - direct) <= 1e-8 * (1.0 + direct));
    CHECK(closed.r >= closed.s);
    CHECK(closed.s >= 0.0);
  }
}

TEST_CASE("expansion of r^2 - s^2") {
  qtest::Gen gen(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const Complex a = gen.cnormal(), b = gen.cnormal(), c = gen.cnormal();
    const double na = std::abs(gen.normal()) * 2.0;
    const auto rs = rs_coefficients(a, b, c, 1.0, na);
    const double direct = rs.r * rs.r - rs.s * rs.s;
    const auto e = r2_minus_s2_expanded(a, b, c, na);
    CHECK(std::abs(direct - e.value) <= 1e-9 * std::max(1.0, rs.r * rs.r));
    const double k = std::norm(b + std::conj(a) * c) + std::norm(a + std::conj(b) * c);
    CHECK(std::abs(e.k - k) <= 1e-12 * (1.0 + k));
  }
}

TEST_CASE("product identity for d = 1") {
  qtest::Gen gen(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const Complex a = gen.cnormal(), b = gen.cnormal(), c = gen.cnormal();
    const double na = std::abs(gen.normal()) * 2.0;
    const double n2 = gqo_norm(a, b, c, 1.0, na).norm_squared;
    const double lhs = std::norm(a + std::conj(b) * c) * na * na;
    const double rhs = (n2 - std::norm(b) - na * na) * (n2 - std::norm(a) - std::norm(c) * na * na);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + n2) * (1.0 + n2));
  }
}

TEST_CASE("norm is nondecreasing in the norm of A") {
  qtest::Gen gen(24);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex a = gen.cnormal(), b = gen.cnormal(), c = gen.cnormal(), d = gen.cnormal();
    double prev = 0.0;
    for (int step = 0; step <= 200; ++step) {
      const double n = gqo_norm(a, b, c, d, 0.025 * step).norm;
      CHECK(n >= prev - 1e-12 * (1.0 + n));
      prev = n;
    }
  }
}

TEST_CASE("matrix2x2_norm agrees with gqo_norm at A = [1]") {
  qtest::Gen gen(25);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex a = gen.cnormal(), b = gen.cnormal(), c = gen.cnormal(), d = gen.cnormal();
    const double via_gqo = gqo_norm(a, b, c, d, 1.0).norm;
    CHECK(std::abs(matrix2x2_norm(a, b, c, d) - via_gqo) <= 1e-12 * (1.0 + via_gqo));
    const double direct = operator_norm(DenseMatrix{{a, d}, {c, b}});
    CHECK(std::abs(matrix2x2_norm(a, b, c, d) - direct) <= 1e-10 * (1.0 + direct));
  }
}
