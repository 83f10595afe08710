#include "quadrange/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace quadrange {

namespace {

void require_finite(Complex z, const char* name) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorKind::InvalidInput, std::string("parameter ") + name + " is not finite");
  }
}

}  // namespace

GQOParams::GQOParams(Complex a_, Complex b_, Complex c_) : a(a_), b(b_), c(c_) {
  require_finite(a, "a");
  require_finite(b, "b");
  require_finite(c, "c");
}

DiagonalSpectrum::DiagonalSpectrum(std::vector<double> values, double sup, bool sup_attained)
    : values_(std::move(values)), sup_(sup), sup_attained_(sup_attained) {
  if (!std::isfinite(sup_) || sup_ < 0.0) {
    throw Error(ErrorKind::InvalidInput, "diagonal model: sup must be finite and >= 0");
  }
  bool hit = false;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double x = values_[k];
    if (!std::isfinite(x) || x < 0.0) {
      throw Error(ErrorKind::InvalidInput,
                  "diagonal model: value " + std::to_string(k) + " must be finite and >= 0");
    }
    if (x > sup_) {
      throw Error(ErrorKind::InvalidInput,
                  "diagonal model: value " + std::to_string(k) + " exceeds sup");
    }
    hit = hit || x == sup_;
  }
  if (hit != sup_attained_) {
    throw Error(ErrorKind::InvalidInput,
                sup_attained_ ? "diagonal model: sup_attained is true but no value equals sup"
                              : "diagonal model: sup_attained is false but a value equals sup");
  }
}

bool is_concrete(const OperatorModel& model) {
  return std::holds_alternative<ConcreteMatrix>(model);
}

DenseMatrix assemble_coupled(const GQOParams& params, Complex d, const DenseMatrix& a_block) {
  const std::size_t m = a_block.rows();
  const std::size_t n = a_block.cols();
  auto t = DenseMatrix::zeros(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i) t.at(i, i) = params.a;
  for (std::size_t j = 0; j < n; ++j) t.at(m + j, m + j) = params.b;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.at(i, m + j) = d * a_block(i, j);
      t.at(m + j, i) = params.c * std::conj(a_block(i, j));
    }
  return t;
}

AssembledGQO assemble(const GQOParams& params, const DenseMatrix& a_block) {
  return {params, assemble_coupled(params, 1.0, a_block), a_block.rows(), a_block.cols()};
}

AssembledGQO assemble(const GQOParams& params, const OperatorModel& model) {
  if (const auto* cm = std::get_if<ConcreteMatrix>(&model)) return assemble(params, cm->matrix);
  throw Error(ErrorKind::UnsupportedModel,
              "a diagonal-spectrum model has no finite block assembly");
}

ModelNorm model_norm(const OperatorModel& model, const ToleranceConfig& cfg) {
  if (const auto* cm = std::get_if<ConcreteMatrix>(&model)) {
    const auto triple = top_singular(cm->matrix, cfg);
    return {triple.sigma, true, triple.right, std::nullopt};
  }
  const auto& ds = std::get<DiagonalSpectrum>(model);
  ModelNorm out;
  out.value = ds.sup();
  // sup == 0 is the zero operator, which attains its norm at every vector.
  out.attained = ds.sup_attained() || ds.sup() == 0.0;
  if (ds.sup_attained()) {
    const auto& v = ds.values();
    const auto it = std::find(v.begin(), v.end(), ds.sup());
    const auto idx = static_cast<std::size_t>(it - v.begin());
    Vector e(v.size());
    e[idx] = 1.0;
    out.witness = std::move(e);
    out.witness_index = idx;
  }
  return out;
}

OperatorModel adjoint(const OperatorModel& model) {
  if (const auto* cm = std::get_if<ConcreteMatrix>(&model)) {
    return ConcreteMatrix{cm->matrix.adjoint()};
  }
  return model;
}

}  // namespace quadrange
