#include "quadrange/attainment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quadrange/norm_formulas.hpp"

namespace quadrange {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
    case CaseTag::ZeroA: return "ZeroA";
  }
  return "Unknown";
}

bool gqo_attains(const GQOParams& /*params*/, const OperatorModel& model,
                 const ToleranceConfig& cfg) {
  if (const auto* cm = std::get_if<ConcreteMatrix>(&model); cm && cm->matrix.is_zero()) {
    return true;
  }
  return model_norm(model, cfg).attained;
}

namespace {

bool case1_triple(const GQOParams& p, double norm_a, double tol) {
  const double abs_a = std::abs(p.a);
  const double abs_b = std::abs(p.b);
  if (norm_a == 0.0) return approx_equal(abs_a, abs_b, tol);
  const Complex bc = std::conj(p.b) * p.c;
  return approx_equal(abs_a, abs_b, tol) && approx_equal(std::abs(p.c), 1.0, tol) &&
         std::abs(p.a + bc) <= tol * std::max({1.0, abs_a, std::abs(bc)});
}

// R^{-1} x with R = shift - weight * G and G = W diag(mu) W* Hermitian PSD.
Vector apply_resolvent(const EigenDecomposition& g, double shift, double weight,
                       std::span<const Complex> x, double floor) {
  const std::size_t n = g.values.size();
  Vector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double den = shift - weight * g.values[j];
    if (den <= floor) {
      throw Error(ErrorKind::SingularResolvent,
                  "resolvent is singular at eigenvalue " + std::to_string(g.values[j]));
    }
    Complex coeff{};
    for (std::size_t i = 0; i < n; ++i) coeff += std::conj(g.vectors(i, j)) * x[i];
    coeff /= den;
    for (std::size_t i = 0; i < n; ++i) out[i] += coeff * g.vectors(i, j);
  }
  return out;
}

double witness_residual(const DenseMatrix& t, const Witness& w, double norm_sq) {
  Vector x = w.u;
  x.insert(x.end(), w.v.begin(), w.v.end());
  const auto tx = t * std::span<const Complex>(x);
  const auto ttx = t.adjoint() * std::span<const Complex>(tx);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(ttx[i] - norm_sq * x[i]);
  return std::sqrt(s);
}

void normalize(Witness& w) {
  const double n = std::sqrt(std::pow(norm2(w.u), 2) + std::pow(norm2(w.v), 2));
  for (auto& z : w.u) z /= n;
  for (auto& z : w.v) z /= n;
}

}  // namespace

CaseTag classify_case(const GQOParams& params, double norm_a, const ToleranceConfig& cfg) {
  if (!std::isfinite(norm_a) || norm_a < 0.0) {
    throw Error(ErrorKind::InvalidInput, "norm of A must be finite and >= 0");
  }
  if (case1_triple(params, norm_a, cfg.eq_tol)) return CaseTag::Case1;

  const double n2 = gqo_norm(params.a, params.b, params.c, 1.0, norm_a).norm_squared;
  const double d2 = norm_a * norm_a;
  const double strict = cfg.eq_tol * (1.0 + n2);
  if (n2 - std::norm(params.a) - std::norm(params.c) * d2 > strict) return CaseTag::Case2;
  if (n2 - std::norm(params.b) - d2 > strict) return CaseTag::Case3;
  throw Error(ErrorKind::InternalInconsistency,
              "neither ||T||^2 > |a|^2 + |c|^2 ||A||^2 nor ||T||^2 > |b|^2 + ||A||^2 holds "
              "outside Case 1");
}

AttainmentReport gram_witness(const GQOParams& params, const DenseMatrix& a_block,
                              const ToleranceConfig& cfg) {
  const auto t = assemble(params, a_block).block;
  const std::size_t m = a_block.rows();
  const std::size_t n = a_block.cols();

  AttainmentReport out;
  out.attains = true;

  if (a_block.is_zero()) {
    Witness w{Vector(m), Vector(n)};
    if (std::abs(params.a) >= std::abs(params.b)) {
      w.u[0] = 1.0;
    } else {
      w.v[0] = 1.0;
    }
    out.case_tag = CaseTag::ZeroA;
    out.norm_squared = std::max(std::norm(params.a), std::norm(params.b));
    out.residual = witness_residual(t, w, out.norm_squared);
    out.witness = std::move(w);
    return out;
  }

  const auto top = top_singular(a_block, cfg);
  const double d = top.sigma;
  const double n2 = gqo_norm(params.a, params.b, params.c, 1.0, d).norm_squared;
  out.norm_squared = n2;
  out.case_tag = classify_case(params, d, cfg);
  const double floor = 0.5 * cfg.eq_tol * (1.0 + n2);

  Witness w;
  switch (out.case_tag) {
    case CaseTag::Case1:
      // Both off-diagonal couplings vanish, so any pair of top singular
      // vectors solves the system.
      w = {top.left, top.right};
      break;
    case CaseTag::Case2: {
      // u = (conj(a) + b conj(c)) (||T||^2 - |a|^2 - |c|^2 AA*)^{-1} A v
      const auto aat = hermitian_eigen(a_block * a_block.adjoint(), cfg);
      const auto av = a_block * std::span<const Complex>(top.right);
      const Complex coeff = std::conj(params.a) + params.b * std::conj(params.c);
      w.v = top.right;
      w.u = scaled(apply_resolvent(aat, n2 - std::norm(params.a), std::norm(params.c), av, floor),
                   coeff);
      break;
    }
    case CaseTag::Case3: {
      // v = (a + conj(b) c) (||T||^2 - |b|^2 - A*A)^{-1} A* u
      const auto ata = hermitian_eigen(a_block.adjoint() * a_block, cfg);
      const auto astar_u = a_block.adjoint() * std::span<const Complex>(top.left);
      const Complex coeff = params.a + std::conj(params.b) * params.c;
      w.u = top.left;
      w.v = scaled(apply_resolvent(ata, n2 - std::norm(params.b), 1.0, astar_u, floor), coeff);
      break;
    }
    case CaseTag::ZeroA:
      break;
  }
  normalize(w);
  out.residual = witness_residual(t, w, n2);
  out.witness = std::move(w);
  return out;
}

QuadraticCanonical::QuadraticCanonical(Complex a1, Complex b1, std::size_t n1, std::size_t n2,
                                       OperatorModel a1_block, const ToleranceConfig& cfg)
    : a1_(a1), b1_(b1), n1_(n1), n2_(n2), a1_block_(std::move(a1_block)) {
  GQOParams check(a1, b1, 0.0);  // finiteness
  if (const auto* cm = std::get_if<ConcreteMatrix>(&a1_block_)) {
    const auto eig = hermitian_eigen(cm->matrix, cfg);
    const double top = eig.values.back();
    if (eig.values.front() <= cfg.eq_tol * (1.0 + top)) {
      throw Error(ErrorKind::InvalidInput, "A1 must be positive definite");
    }
  } else {
    const auto& ds = std::get<DiagonalSpectrum>(a1_block_);
    const auto& v = ds.values();
    if (ds.sup() <= 0.0 || std::any_of(v.begin(), v.end(), [](double x) { return x <= 0.0; })) {
      throw Error(ErrorKind::InvalidInput, "A1 must be injective (all values > 0)");
    }
  }
}

DenseMatrix QuadraticCanonical::matrix() const {
  const auto* cm = std::get_if<ConcreteMatrix>(&a1_block_);
  if (!cm) {
    throw Error(ErrorKind::UnsupportedModel, "diagonal-spectrum A1 has no dense form");
  }
  const std::size_t n3 = cm->matrix.rows();
  const std::size_t dim = n1_ + n2_ + 2 * n3;
  auto q = DenseMatrix::zeros(dim, dim);
  for (std::size_t i = 0; i < n1_; ++i) q.at(i, i) = a1_;
  for (std::size_t i = 0; i < n2_; ++i) q.at(n1_ + i, n1_ + i) = b1_;
  const std::size_t off = n1_ + n2_;
  for (std::size_t i = 0; i < n3; ++i) {
    q.at(off + i, off + i) = a1_;
    q.at(off + n3 + i, off + n3 + i) = b1_;
  }
  q.set_block(off, off + n3, cm->matrix);
  return q;
}

PerturbationAttainment quadratic_perturbation_attains(const QuadraticCanonical& q, Complex c,
                                                      Complex k, const ToleranceConfig& cfg) {
  PerturbationAttainment out{};
  out.via_theorem = model_norm(q.positive_part(), cfg).attained;

  if (is_concrete(q.positive_part())) {
    const auto dense = q.matrix();
    const auto perturbed =
        dense + c * dense.adjoint() + k * DenseMatrix::identity(dense.rows());
    const auto top = top_singular(perturbed, cfg);
    const double reached = norm2(perturbed * std::span<const Complex>(top.right));
    out.direct = std::abs(reached - top.sigma) <= 1e-9 * (1.0 + top.sigma);
    return out;
  }

  // Q + cQ* + kI = a2 I (+) b2 I (+) T1 and T1 splits over the eigenbasis of
  // A1 into 2x2 blocks [[a2, s], [c s, b2]]. The norm is the sup over those
  // blocks; it is attained iff some listed mode (or scalar part) reaches it.
  const auto& ds = std::get<DiagonalSpectrum>(q.positive_part());
  const Complex a2 = q.a1() + c * std::conj(q.a1()) + k;
  const Complex b2 = q.b1() + c * std::conj(q.b1()) + k;
  const double sup_norm = matrix2x2_norm(a2, b2, c * ds.sup(), ds.sup());
  double best = 0.0;
  for (double s : ds.values()) best = std::max(best, matrix2x2_norm(a2, b2, c * s, s));
  if (q.n1() > 0) best = std::max(best, std::abs(a2));
  if (q.n2() > 0) best = std::max(best, std::abs(b2));
  out.direct = best >= sup_norm;
  return out;
}

}  // namespace quadrange
