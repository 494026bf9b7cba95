#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

namespace mublab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

struct ToleranceConfig {
  double eq_tol = 1e-9;     // entrywise equality / unitarity / commutation
  double eig_gap = 1e-6;    // eigenvalue clustering gap
  double hash_grid = 1e-6;  // quantization grid for canonical ordering and hashing

  void validate() const;  // 0 < hash_grid and 0 < eq_tol < eig_gap < 1
};

// Residual thresholds fixed by the library's contracts (independent of the
// user-tunable equality tolerance).
inline constexpr double kHsOrthogonalityTol = 1e-8;
inline constexpr double kDiagonalResidualTol = 1e-8;
inline constexpr double kScalarDetectionTol = 1e-8;

// Largest entry modulus of A.
double max_abs(const ComplexMatrix& a);

// Hilbert-Schmidt inner product tr(A B^dagger).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_unitary(const ComplexMatrix& a, double tol);
bool commute(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

// Multiplies v by the unit phase that rotates its largest-modulus entry onto
// the positive real axis. Entries whose modulus is within tie_tol of the
// maximum count as ties; the lowest such index wins.
ComplexVector phase_normalized(const ComplexVector& v, double tie_tol);

// Same pivot rule applied to a matrix read in row-major order.
ComplexMatrix phase_normalized(const ComplexMatrix& a, double tie_tol);

// Common orthonormal eigenbasis of a family of pairwise-commuting unitaries,
// returned as the columns of a unitary matrix. Sequential block refinement:
// one block spanning C^D initially; per operator, diagonalize the compressed
// block, split it by clustering eigenvalues at cfg.eig_gap, re-orthonormalize.
// Throws std::invalid_argument on non-unitary or non-commuting input and
// std::domain_error if a multi-dimensional block survives (the family is not
// maximal abelian) or the diagonalization residual exceeds its contract.
ComplexMatrix simultaneous_eigenbasis(std::span<const ComplexMatrix> ops,
                                      const ToleranceConfig& cfg = {});

}  // namespace mublab
