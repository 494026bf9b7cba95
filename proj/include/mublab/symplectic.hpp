#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mublab/ff.hpp"

namespace mublab {

/// Dense row-major matrix over F_d.
struct FpMatrix {
  int d = 2;
  int rows = 0;
  int cols = 0;
  std::vector<int> a;  // rows*cols entries, reduced mod d

  FpMatrix() = default;
  FpMatrix(int d, int rows, int cols);

  int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  FpVector row(int r) const;

  bool operator==(const FpMatrix&) const = default;
};

FpMatrix fp_mat_mul(const FpMatrix& x, const FpMatrix& y);
FpMatrix fp_mat_transpose(const FpMatrix& x);
FpMatrix fp_mat_identity(int d, int n);
FpMatrix fp_mat_inverse(const FpMatrix& x);  // throws if singular

// Reduced row echelon form with zero rows dropped; the unique canonical basis
// of the row space.
FpMatrix rref(const FpMatrix& x);

struct SymplecticForm {
  int d = 2;
  int N = 1;
  FpMatrix gram;  // 2N x 2N, alternating, invertible
};

// Gram matrix block-diagonal with N blocks [[0,1],[-1,0]]: coordinates 2i and
// 2i+1 are a hyperbolic pair.
SymplecticForm canonical_form(int d, int N);

// u^T gram v.
int form_eval(const SymplecticForm& f, const FpVector& u, const FpVector& v);

/// A linear subspace of V(2N,d), stored as its unique reduced-row-echelon
/// basis.
struct Subspace {
  FpMatrix basis;

  int dimension() const { return basis.rows; }
  bool operator==(const Subspace&) const = default;
  bool operator<(const Subspace& rhs) const { return basis.a < rhs.basis.a; }
};

// Canonicalizes the row span of `rows`; throws if the rows are dependent.
Subspace make_subspace(const FpMatrix& rows);

// All nonzero vectors of the subspace, sorted lexicographically.
std::vector<FpVector> subspace_vectors(const Subspace& s);

bool is_totally_isotropic(const SymplecticForm& f, const Subspace& w);

/// d^N + 1 pairwise trivially-intersecting totally isotropic subspaces of
/// vector dimension N covering every nonzero vector exactly once.
struct Spread {
  int d = 2;
  int N = 1;
  std::vector<Subspace> members;
};

// Deterministic spread: the field model F_{d^N} x F_{d^N} with members
// {(x, mx)} and {(0, y)}, isotropic for Tr(x1 y2 - x2 y1), pushed through a
// symplectic change of basis onto canonical_form(d, N).
Spread desarguesian_spread(int d, int N);

struct SpreadValidation {
  bool members_isotropic = false;
  bool member_dimensions_ok = false;
  bool exact_partition = false;
  std::string first_failure;  // empty when all checks pass

  bool ok() const { return members_isotropic && member_dimensions_ok && exact_partition; }
};

SpreadValidation validate_spread(const SymplecticForm& f, const Spread& s);

// All maximal (dimension N) totally isotropic subspaces, sorted
// lexicographically by flattened echelon basis. Guarded to d^N <= 9.
std::vector<Subspace> maximal_isotropic_subspaces(const SymplecticForm& f);

// Exhaustive spread enumeration by exact-cover backtracking over the list
// above, in deterministic lexicographic order, truncated at `limit`.
// Guarded to d^N <= 9.
std::vector<Spread> enumerate_spreads(const SymplecticForm& f, std::size_t limit);

}  // namespace mublab
