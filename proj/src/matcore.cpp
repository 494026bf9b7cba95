#include "mublab/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mublab {

void ToleranceConfig::validate() const {
  if (!(hash_grid > 0.0) || !(eq_tol > 0.0) || !(eq_tol < eig_gap) || !(eig_gap < 1.0)) {
    throw std::invalid_argument("tolerance config violates 0 < eq_tol < eig_gap < 1");
  }
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("hs_inner dimension mismatch");
  }
  return (a.cwiseProduct(b.conjugate())).sum();
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("unitarity test on non-square matrix");
  ComplexMatrix gram = a * a.adjoint();
  gram -= ComplexMatrix::Identity(a.rows(), a.cols());
  return max_abs(gram) < tol;
}

bool commute(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("commutation test dimension mismatch");
  }
  return max_abs(a * b - b * a) < tol;
}

namespace {

Eigen::Index pivot_index(const ComplexVector& v, double tie_tol) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) best = std::max(best, std::abs(v[i]));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= best - tie_tol) return i;
  }
  return 0;
}

}  // namespace

ComplexVector phase_normalized(const ComplexVector& v, double tie_tol) {
  Eigen::Index pivot = pivot_index(v, tie_tol);
  double mod = std::abs(v[pivot]);
  if (mod == 0.0) return v;
  Complex rotation = std::conj(v[pivot]) / mod;
  return v * rotation;
}

ComplexMatrix phase_normalized(const ComplexMatrix& a, double tie_tol) {
  ComplexVector flat(a.size());
  Eigen::Index k = 0;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) flat[k++] = a(r, c);
  }
  Eigen::Index pivot = pivot_index(flat, tie_tol);
  double mod = std::abs(flat[pivot]);
  if (mod == 0.0) return a;
  Complex rotation = std::conj(flat[pivot]) / mod;
  return a * rotation;
}

ComplexMatrix simultaneous_eigenbasis(std::span<const ComplexMatrix> ops,
                                      const ToleranceConfig& cfg) {
  cfg.validate();
  if (ops.empty()) throw std::invalid_argument("empty operator family");
  const Eigen::Index dim = ops[0].rows();
  for (const ComplexMatrix& u : ops) {
    if (u.rows() != dim || u.cols() != dim) {
      throw std::invalid_argument("operator dimensions disagree");
    }
    if (!is_unitary(u, cfg.eq_tol)) throw std::invalid_argument("operator is not unitary");
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (!commute(ops[i], ops[j], cfg.eq_tol)) {
        throw std::invalid_argument("operators do not commute");
      }
    }
  }

  // Invariant-subspace refinement. Each block is a D x k matrix with
  // orthonormal columns; commuting operators preserve every block.
  std::vector<ComplexMatrix> blocks{ComplexMatrix::Identity(dim, dim)};
  for (const ComplexMatrix& u : ops) {
    std::vector<ComplexMatrix> refined;
    for (const ComplexMatrix& block : blocks) {
      const Eigen::Index k = block.cols();
      if (k == 1) {
        refined.push_back(block);
        continue;
      }
      ComplexMatrix compressed = block.adjoint() * u * block;  // normal on the block
      Eigen::ComplexEigenSolver<ComplexMatrix> solver(compressed);
      if (solver.info() != Eigen::Success) {
        throw std::domain_error("eigendecomposition failed");
      }
      const ComplexVector& values = solver.eigenvalues();
      std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
        if (values[x].real() != values[y].real()) return values[x].real() < values[y].real();
        return values[x].imag() < values[y].imag();
      });
      // Chain clustering along the sorted eigenvalues; the spectra of unitary
      // families at this scale are separated far above eig_gap.
      std::vector<std::vector<Eigen::Index>> clusters;
      for (Eigen::Index idx : order) {
        if (!clusters.empty() &&
            std::abs(values[idx] - values[clusters.back().back()]) < cfg.eig_gap) {
          clusters.back().push_back(idx);
        } else {
          clusters.push_back({idx});
        }
      }
      for (const std::vector<Eigen::Index>& cluster : clusters) {
        ComplexMatrix span(k, static_cast<Eigen::Index>(cluster.size()));
        for (std::size_t c = 0; c < cluster.size(); ++c) {
          span.col(static_cast<Eigen::Index>(c)) = solver.eigenvectors().col(cluster[c]);
        }
        Eigen::HouseholderQR<ComplexMatrix> qr(span);
        ComplexMatrix q = qr.householderQ() *
                          ComplexMatrix::Identity(k, static_cast<Eigen::Index>(cluster.size()));
        refined.push_back(block * q);
      }
    }
    blocks = std::move(refined);
  }

  for (const ComplexMatrix& block : blocks) {
    if (block.cols() != 1) {
      throw std::domain_error("family is not maximal abelian: residual block of dimension " +
                              std::to_string(block.cols()));
    }
  }

  ComplexMatrix basis(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    basis.col(i) = phase_normalized(ComplexVector(blocks[static_cast<std::size_t>(i)].col(0)),
                                    cfg.hash_grid);
  }
  for (const ComplexMatrix& u : ops) {
    ComplexMatrix diag = basis.adjoint() * u * basis;
    for (Eigen::Index r = 0; r < dim; ++r) {
      for (Eigen::Index c = 0; c < dim; ++c) {
        if (r != c && std::abs(diag(r, c)) >= kDiagonalResidualTol) {
          throw std::domain_error("diagonalization residual exceeds contract");
        }
      }
    }
  }
  return basis;
}

}  // namespace mublab
