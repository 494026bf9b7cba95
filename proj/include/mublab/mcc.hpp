#pragma once

#include <span>
#include <string>
#include <vector>

#include "mublab/matcore.hpp"
#include "mublab/pauli.hpp"

namespace mublab {

/// Numeric maximal-commuting-class partition: ell classes of D-1 commuting,
/// mutually Hilbert-Schmidt-orthogonal unitaries different from the identity.
struct NumericMcc {
  int dimension = 0;
  std::vector<std::vector<ComplexMatrix>> classes;

  std::size_t operator_count() const;
  bool is_maximal() const { return static_cast<int>(classes.size()) == dimension + 1; }
};

struct MccValidation {
  bool unitary_ok = false;
  bool commuting_ok = false;        // condition (a), within each class
  bool distinct_ok = false;         // condition (b), operator-level disjointness
  bool hs_orthogonal_ok = false;    // pairwise and against the identity
  bool class_sizes_ok = false;      // every class has D-1 operators
  bool class_count_ok = false;      // ell <= D+1
  bool maximal = false;             // ell == D+1
  double max_unitarity_residual = 0.0;
  double max_commutation_residual = 0.0;
  double max_hs_residual = 0.0;
  std::string first_failure;

  bool ok() const {
    return unitary_ok && commuting_ok && distinct_ok && hs_orthogonal_ok && class_sizes_ok &&
           class_count_ok;
  }
};

MccValidation validate_mcc(const NumericMcc& u, const ToleranceConfig& cfg = {});

// Exact symbolic checks: within-class commutator exponents vanish, no central
// operators, distinct (a|b) vectors across all operators (which is exactly
// pairwise Hilbert-Schmidt orthogonality for Pauli operators), class sizes.
MccValidation validate_mcc(const SymbolicMcc& u);

NumericMcc to_numeric(const SymbolicMcc& u);

// One unit-modulus scalar per operator, in class-major order. Throws on
// non-unit scalars.
NumericMcc scale_mcc(const NumericMcc& u, std::span<const Complex> scalars);

}  // namespace mublab
