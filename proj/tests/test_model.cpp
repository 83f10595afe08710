#include <doctest.h>

#include "quadrange/model.hpp"
#include "support.hpp"

using namespace quadrange;

namespace {

const Complex I(0.0, 1.0);

std::vector<double> one_minus_reciprocal(int count) {
  std::vector<double> v;
  for (int n = 1; n <= count; ++n) v.push_back(1.0 - 1.0 / n);
  return v;
}

}  // namespace

TEST_CASE("GQOParams rejects non-finite scalars") {
  CHECK_THROWS_AS(GQOParams(std::nan(""), 0.0, 0.0), Error);
  CHECK_THROWS_AS(GQOParams(0.0, Complex(0.0, INFINITY), 0.0), Error);
  CHECK_NOTHROW(GQOParams(1.0, I, -1.0));
}

TEST_CASE("assemble examples") {
  SUBCASE("nilpotent") {
    const auto t = assemble(GQOParams(0.0, 0.0, 0.0), ConcreteMatrix{DenseMatrix{{1.0}}});
    CHECK(max_abs_diff(t.block, DenseMatrix{{0.0, 1.0}, {0.0, 0.0}}) == 0.0);
  }
  SUBCASE("complex c") {
    const auto t = assemble(GQOParams(2.0, 1.0, I), ConcreteMatrix{DenseMatrix{{1.0}}});
    CHECK(max_abs_diff(t.block, DenseMatrix{{2.0, 1.0}, {I, 1.0}}) == 0.0);
  }
  SUBCASE("4x4 with c = -1") {
    const DenseMatrix a{{1.0, 0.0}, {0.0, 0.5}};
    const auto t = assemble(GQOParams(1.0, 1.0, -1.0), ConcreteMatrix{a});
    const DenseMatrix expected{{1.0, 0.0, 1.0, 0.0},
                               {0.0, 1.0, 0.0, 0.5},
                               {-1.0, 0.0, 1.0, 0.0},
                               {0.0, -0.5, 0.0, 1.0}};
    CHECK(max_abs_diff(t.block, expected) == 0.0);
    CHECK(max_abs_diff(t.lower_left(), Complex(-1.0) * a.adjoint()) == 0.0);
  }
}

TEST_CASE("assemble rejects the diagonal-spectrum model") {
  try {
    assemble(GQOParams(0.0, 0.0, 0.0), DiagonalSpectrum({0.5}, 1.0, false));
    FAIL("expected UnsupportedModel");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedModel);
  }
}

TEST_CASE("assemble round-trips its blocks on rectangular A") {
  qtest::Gen gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const GQOParams p(gen.cnormal(), gen.cnormal(), gen.cnormal());
    const auto a = gen.matrix(gen.dim(5), gen.dim(5));
    const auto t = assemble(p, a);
    CHECK(t.m == a.rows());
    CHECK(t.n == a.cols());
    CHECK(max_abs_diff(t.upper_right(), a) == 0.0);
    CHECK(max_abs_diff(t.lower_left(), p.c * a.adjoint()) == 0.0);
    for (std::size_t i = 0; i < t.m; ++i) CHECK(t.block(i, i) == p.a);
    for (std::size_t j = 0; j < t.n; ++j) CHECK(t.block(t.m + j, t.m + j) == p.b);
    CHECK(t.block.block(0, 0, t.m, t.m).is_zero() == (p.a == 0.0));
  }
}

TEST_CASE("DiagonalSpectrum validation") {
  CHECK_NOTHROW(DiagonalSpectrum(one_minus_reciprocal(100), 1.0, false));
  CHECK_NOTHROW(DiagonalSpectrum({3.0, 4.0}, 4.0, true));
  CHECK_THROWS_AS(DiagonalSpectrum({3.0, 4.0}, 4.0, false), Error);
  CHECK_THROWS_AS(DiagonalSpectrum({3.0}, 4.0, true), Error);
  CHECK_THROWS_AS(DiagonalSpectrum({5.0}, 4.0, false), Error);
  CHECK_THROWS_AS(DiagonalSpectrum({-1.0}, 4.0, false), Error);
  CHECK_THROWS_AS(DiagonalSpectrum({1.0}, std::nan(""), false), Error);
}

TEST_CASE("model_norm examples") {
  SUBCASE("strict supremum") {
    const auto n = model_norm(DiagonalSpectrum(one_minus_reciprocal(100), 1.0, false));
    CHECK(n.value == 1.0);
    CHECK_FALSE(n.attained);
    CHECK_FALSE(n.witness.has_value());
    CHECK_FALSE(n.witness_index.has_value());
  }
  SUBCASE("nilpotent block") {
    const auto n = model_norm(ConcreteMatrix{DenseMatrix{{0.0, 1.0}, {0.0, 0.0}}});
    CHECK(n.value == doctest::Approx(1.0));
    CHECK(n.attained);
    REQUIRE(n.witness.has_value());
    CHECK(std::abs((*n.witness)[0]) < 1e-12);
    CHECK(std::abs((*n.witness)[1]) == doctest::Approx(1.0));
  }
  SUBCASE("attained supremum") {
    const auto n = model_norm(DiagonalSpectrum({3.0, 4.0}, 4.0, true));
    CHECK(n.value == 4.0);
    CHECK(n.attained);
    REQUIRE(n.witness_index.has_value());
    CHECK(*n.witness_index == 1);
  }
}

TEST_CASE("model_norm on concrete matrices") {
  qtest::Gen gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = gen.matrix(gen.dim(6), gen.dim(6));
    const auto n = model_norm(ConcreteMatrix{a});
    CHECK(n.value == operator_norm(a));
    REQUIRE(n.witness.has_value());
    const double ax = norm2(a * std::span<const Complex>(*n.witness));
    CHECK(std::abs(ax - n.value) <= 1e-9 * (1.0 + n.value));
    const auto adj = model_norm(adjoint(OperatorModel{ConcreteMatrix{a}}));
    CHECK(std::abs(adj.value - n.value) <= 1e-12 * (1.0 + n.value));
  }
}
