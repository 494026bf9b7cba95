#include "mublab/mcc.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace mublab {

namespace {

std::string pair_label(std::size_t ci, std::size_t oi, std::size_t cj, std::size_t oj) {
  return "(" + std::to_string(ci) + "," + std::to_string(oi) + ") vs (" + std::to_string(cj) +
         "," + std::to_string(oj) + ")";
}

}  // namespace

std::size_t NumericMcc::operator_count() const {
  std::size_t n = 0;
  for (const auto& cls : classes) n += cls.size();
  return n;
}

MccValidation validate_mcc(const NumericMcc& u, const ToleranceConfig& cfg) {
  cfg.validate();
  MccValidation report;
  const int dim = u.dimension;
  report.class_count_ok = static_cast<int>(u.classes.size()) <= dim + 1;
  if (!report.class_count_ok) report.first_failure = "more than D+1 classes";
  report.maximal = u.is_maximal();

  report.class_sizes_ok = true;
  for (std::size_t c = 0; c < u.classes.size(); ++c) {
    if (static_cast<int>(u.classes[c].size()) != dim - 1) {
      report.class_sizes_ok = false;
      if (report.first_failure.empty()) {
        report.first_failure = "class " + std::to_string(c) + " has " +
                               std::to_string(u.classes[c].size()) + " operators, expected " +
                               std::to_string(dim - 1);
      }
      break;
    }
  }

  // Flattened view in class-major order.
  std::vector<const ComplexMatrix*> ops;
  std::vector<std::pair<std::size_t, std::size_t>> tags;
  for (std::size_t c = 0; c < u.classes.size(); ++c) {
    for (std::size_t i = 0; i < u.classes[c].size(); ++i) {
      ops.push_back(&u.classes[c][i]);
      tags.emplace_back(c, i);
    }
  }

  report.unitary_ok = true;
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i]->rows() != dim || ops[i]->cols() != dim) {
      report.unitary_ok = false;
      if (report.first_failure.empty()) {
        report.first_failure = "operator " + pair_label(tags[i].first, tags[i].second,
                                                        tags[i].first, tags[i].second) +
                               " has wrong dimensions";
      }
      return report;
    }
    double residual = max_abs(*ops[i] * ops[i]->adjoint() - id);
    report.max_unitarity_residual = std::max(report.max_unitarity_residual, residual);
    if (residual >= cfg.eq_tol && report.unitary_ok) {
      report.unitary_ok = false;
      if (report.first_failure.empty()) {
        report.first_failure =
            "operator (" + std::to_string(tags[i].first) + "," + std::to_string(tags[i].second) +
            ") is not unitary";
      }
    }
  }

  report.commuting_ok = true;
  for (const auto& cls : u.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        double residual = max_abs(cls[i] * cls[j] - cls[j] * cls[i]);
        report.max_commutation_residual = std::max(report.max_commutation_residual, residual);
        if (residual >= cfg.eq_tol && report.commuting_ok) {
          report.commuting_ok = false;
          if (report.first_failure.empty()) report.first_failure = "class operators do not commute";
        }
      }
    }
  }

  report.distinct_ok = true;
  report.hs_orthogonal_ok = true;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    double vs_id = std::abs(ops[i]->trace());
    report.max_hs_residual = std::max(report.max_hs_residual, vs_id);
    if (vs_id >= kHsOrthogonalityTol && report.hs_orthogonal_ok) {
      report.hs_orthogonal_ok = false;
      if (report.first_failure.empty()) {
        report.first_failure = "operator (" + std::to_string(tags[i].first) + "," +
                               std::to_string(tags[i].second) + ") is not orthogonal to id";
      }
    }
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (max_abs(*ops[i] - *ops[j]) < cfg.eq_tol && report.distinct_ok) {
        report.distinct_ok = false;
        if (report.first_failure.empty()) {
          report.first_failure = "duplicate operators " + pair_label(tags[i].first, tags[i].second,
                                                                     tags[j].first, tags[j].second);
        }
      }
      double ortho = std::abs(hs_inner(*ops[i], *ops[j]));
      report.max_hs_residual = std::max(report.max_hs_residual, ortho);
      if (ortho >= kHsOrthogonalityTol && report.hs_orthogonal_ok) {
        report.hs_orthogonal_ok = false;
        if (report.first_failure.empty()) {
          report.first_failure = "operators " + pair_label(tags[i].first, tags[i].second,
                                                           tags[j].first, tags[j].second) +
                                 " are not Hilbert-Schmidt orthogonal";
        }
      }
    }
  }
  return report;
}

MccValidation validate_mcc(const SymbolicMcc& u) {
  MccValidation report;
  report.unitary_ok = true;  // Pauli operators are unitary by construction
  const int dim = u.dimension();
  report.class_count_ok = static_cast<int>(u.classes.size()) <= dim + 1;
  if (!report.class_count_ok) report.first_failure = "more than D+1 classes";
  report.maximal = static_cast<int>(u.classes.size()) == dim + 1;

  report.class_sizes_ok = true;
  for (std::size_t c = 0; c < u.classes.size(); ++c) {
    if (static_cast<int>(u.classes[c].size()) != dim - 1) {
      report.class_sizes_ok = false;
      if (report.first_failure.empty()) {
        report.first_failure = "class " + std::to_string(c) + " has wrong size";
      }
      break;
    }
  }

  report.commuting_ok = true;
  for (const auto& cls : u.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (pauli_commutator_exponent(cls[i], cls[j]) != 0 && report.commuting_ok) {
          report.commuting_ok = false;
          if (report.first_failure.empty()) report.first_failure = "class operators do not commute";
        }
      }
    }
  }

  // Distinct (a|b) across all operators covers both operator distinctness and
  // Hilbert-Schmidt orthogonality; central operators are rejected outright.
  report.distinct_ok = true;
  report.hs_orthogonal_ok = true;
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> seen;
  std::size_t flat = 0;
  for (std::size_t c = 0; c < u.classes.size(); ++c) {
    for (const PauliElement& p : u.classes[c]) {
      if (p.d != u.d || p.qudits() != u.N) {
        report.distinct_ok = false;
        report.first_failure = "operator parameters disagree with the partition";
        return report;
      }
      if (p.is_central()) {
        report.hs_orthogonal_ok = false;
        if (report.first_failure.empty()) {
          report.first_failure = "class " + std::to_string(c) + " contains a central operator";
        }
      }
      auto [it, inserted] = seen.try_emplace({p.a, p.b}, flat);
      if (!inserted) {
        report.distinct_ok = false;
        report.hs_orthogonal_ok = false;
        if (report.first_failure.empty()) {
          report.first_failure = "operators " + std::to_string(it->second) + " and " +
                                 std::to_string(flat) + " share an (a|b) vector";
        }
      }
      ++flat;
    }
  }
  return report;
}

NumericMcc to_numeric(const SymbolicMcc& u) {
  NumericMcc out;
  out.dimension = u.dimension();
  out.classes.reserve(u.classes.size());
  for (const auto& cls : u.classes) {
    std::vector<ComplexMatrix> mats;
    mats.reserve(cls.size());
    for (const PauliElement& p : cls) mats.push_back(materialize(p));
    out.classes.push_back(std::move(mats));
  }
  return out;
}

NumericMcc scale_mcc(const NumericMcc& u, std::span<const Complex> scalars) {
  if (scalars.size() != u.operator_count()) {
    throw std::invalid_argument("need exactly one scalar per operator");
  }
  for (const Complex& s : scalars) {
    if (std::abs(std::abs(s) - 1.0) >= 1e-12) {
      throw std::invalid_argument("scaling requires unit-modulus scalars");
    }
  }
  NumericMcc out;
  out.dimension = u.dimension;
  std::size_t k = 0;
  for (const auto& cls : u.classes) {
    std::vector<ComplexMatrix> scaled;
    scaled.reserve(cls.size());
    for (const ComplexMatrix& op : cls) scaled.push_back(scalars[k++] * op);
    out.classes.push_back(std::move(scaled));
  }
  return out;
}

}  // namespace mublab
