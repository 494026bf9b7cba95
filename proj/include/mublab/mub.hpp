#pragma once

#include <string>
#include <vector>

#include "mublab/matcore.hpp"
#include "mublab/mcc.hpp"

namespace mublab {

/// An orthonormal basis is the column set of a unitary matrix.
using Basis = ComplexMatrix;

struct MubSet {
  int dimension = 0;
  std::vector<Basis> bases;

  bool is_maximal() const { return static_cast<int>(bases.size()) == dimension + 1; }
};

struct MubValidation {
  bool orthonormal_ok = false;
  bool unbiased_ok = false;
  bool maximal = false;
  double max_orthonormality_residual = 0.0;
  double max_unbiasedness_residual = 0.0;
  std::string first_failure;

  bool ok() const { return orthonormal_ok && unbiased_ok; }
};

// Unbiasedness threshold fixed by the library's contract: every cross-basis
// overlap must satisfy | |<phi|psi>|^2 - 1/D | below this.
inline constexpr double kUnbiasednessTol = 1e-8;

MubValidation validate_mub(const MubSet& b, const ToleranceConfig& cfg = {});

// Common-eigenbasis map: one basis per class. Output is canonicalized.
// Throws std::invalid_argument if the input fails validate_mcc.
MubSet beta(const NumericMcc& u, const ToleranceConfig& cfg = {});
MubSet beta(const SymbolicMcc& u, const ToleranceConfig& cfg = {});

// Spectral map: class k holds U_j^k = sum_r exp(2 pi i j r / D) |psi_r^k><psi_r^k|
// for j = 1..D-1 (j = D gives the identity and is excluded). Requires a
// maximal, valid MUB set.
NumericMcc alpha(const MubSet& b, const ToleranceConfig& cfg = {});

// Ray-wise, order-insensitive canonical form: vectors phase-normalized, then
// sorted by entries quantized on cfg.hash_grid; bases sorted the same way.
MubSet canonicalize_mub(const MubSet& b, const ToleranceConfig& cfg = {});

// Entrywise comparison of canonical forms within cfg.eq_tol.
bool mub_equal(const MubSet& b1, const MubSet& b2, const ToleranceConfig& cfg = {});

}  // namespace mublab
