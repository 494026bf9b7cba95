#include "mublab/mub.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace mublab {

MubValidation validate_mub(const MubSet& b, const ToleranceConfig& cfg) {
  cfg.validate();
  MubValidation report;
  const int dim = b.dimension;
  report.maximal = b.is_maximal();
  report.orthonormal_ok = true;
  report.unbiased_ok = true;

  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  for (std::size_t i = 0; i < b.bases.size(); ++i) {
    if (b.bases[i].rows() != dim || b.bases[i].cols() != dim) {
      report.orthonormal_ok = false;
      report.first_failure = "basis " + std::to_string(i) + " has wrong dimensions";
      return report;
    }
    double residual = max_abs(b.bases[i].adjoint() * b.bases[i] - id);
    report.max_orthonormality_residual = std::max(report.max_orthonormality_residual, residual);
    if (residual >= cfg.eq_tol && report.orthonormal_ok) {
      report.orthonormal_ok = false;
      if (report.first_failure.empty()) {
        report.first_failure = "basis " + std::to_string(i) + " is not orthonormal";
      }
    }
  }
  const double target = 1.0 / dim;
  for (std::size_t i = 0; i < b.bases.size(); ++i) {
    for (std::size_t j = i + 1; j < b.bases.size(); ++j) {
      ComplexMatrix overlaps = b.bases[i].adjoint() * b.bases[j];
      double residual = (overlaps.cwiseAbs2().array() - target).abs().maxCoeff();
      report.max_unbiasedness_residual = std::max(report.max_unbiasedness_residual, residual);
      if (residual >= kUnbiasednessTol && report.unbiased_ok) {
        report.unbiased_ok = false;
        if (report.first_failure.empty()) {
          report.first_failure = "bases " + std::to_string(i) + " and " + std::to_string(j) +
                                 " are not unbiased";
        }
      }
    }
  }
  return report;
}

MubSet beta(const NumericMcc& u, const ToleranceConfig& cfg) {
  MccValidation check = validate_mcc(u, cfg);
  if (!check.ok()) {
    throw std::invalid_argument("beta requires a valid MCC: " + check.first_failure);
  }
  MubSet out;
  out.dimension = u.dimension;
  out.bases.reserve(u.classes.size());
  for (const auto& cls : u.classes) {
    out.bases.push_back(simultaneous_eigenbasis(cls, cfg));
  }
  return canonicalize_mub(out, cfg);
}

MubSet beta(const SymbolicMcc& u, const ToleranceConfig& cfg) {
  MccValidation check = validate_mcc(u);
  if (!check.ok()) {
    throw std::invalid_argument("beta requires a valid MCC: " + check.first_failure);
  }
  return beta(to_numeric(u), cfg);
}

NumericMcc alpha(const MubSet& b, const ToleranceConfig& cfg) {
  if (!b.is_maximal()) {
    throw std::invalid_argument("alpha requires a maximal MUB set (D+1 bases)");
  }
  MubValidation check = validate_mub(b, cfg);
  if (!check.ok()) {
    throw std::invalid_argument("alpha requires a valid MUB set: " + check.first_failure);
  }
  const int dim = b.dimension;
  NumericMcc out;
  out.dimension = dim;
  out.classes.reserve(b.bases.size());
  const double angle = 2.0 * std::numbers::pi / dim;
  for (const Basis& basis : b.bases) {
    std::vector<ComplexMatrix> cls;
    cls.reserve(dim - 1);
    for (int j = 1; j <= dim - 1; ++j) {
      ComplexMatrix op = ComplexMatrix::Zero(dim, dim);
      for (int r = 1; r <= dim; ++r) {
        Complex weight(std::cos(angle * j * r), std::sin(angle * j * r));
        const ComplexVector psi = basis.col(r - 1);
        op += weight * (psi * psi.adjoint());
      }
      cls.push_back(std::move(op));
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

namespace {

using QuantKey = std::vector<std::int64_t>;

QuantKey quantize(const ComplexVector& v, double grid) {
  QuantKey key;
  key.reserve(2 * static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    key.push_back(std::llround(v[i].real() / grid));
    key.push_back(std::llround(v[i].imag() / grid));
  }
  return key;
}

}  // namespace

MubSet canonicalize_mub(const MubSet& b, const ToleranceConfig& cfg) {
  cfg.validate();
  MubSet out;
  out.dimension = b.dimension;
  std::vector<std::pair<QuantKey, Basis>> keyed_bases;
  for (const Basis& basis : b.bases) {
    std::vector<std::pair<QuantKey, ComplexVector>> keyed;
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
      ComplexVector v = phase_normalized(ComplexVector(basis.col(c)), cfg.hash_grid);
      keyed.emplace_back(quantize(v, cfg.hash_grid), std::move(v));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Basis sorted(basis.rows(), basis.cols());
    QuantKey basis_key;
    for (std::size_t c = 0; c < keyed.size(); ++c) {
      sorted.col(static_cast<Eigen::Index>(c)) = keyed[c].second;
      basis_key.insert(basis_key.end(), keyed[c].first.begin(), keyed[c].first.end());
    }
    keyed_bases.emplace_back(std::move(basis_key), std::move(sorted));
  }
  std::sort(keyed_bases.begin(), keyed_bases.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [key, basis] : keyed_bases) out.bases.push_back(std::move(basis));
  return out;
}

bool mub_equal(const MubSet& b1, const MubSet& b2, const ToleranceConfig& cfg) {
  if (b1.dimension != b2.dimension || b1.bases.size() != b2.bases.size()) return false;
  MubSet c1 = canonicalize_mub(b1, cfg);
  MubSet c2 = canonicalize_mub(b2, cfg);
  for (std::size_t i = 0; i < c1.bases.size(); ++i) {
    if (max_abs(c1.bases[i] - c2.bases[i]) >= cfg.eq_tol) return false;
  }
  return true;
}

}  // namespace mublab
