#pragma once

#include <vector>

#include "mublab/matcore.hpp"
#include "mublab/symplectic.hpp"

namespace mublab {

/// Symbolic element omega^phase * X^{a_1}Z^{b_1} x ... x X^{a_N}Z^{b_N} of the
/// general Pauli group P_N(d), omega = exp(2*pi*i/d). All components reduced
/// mod d.
struct PauliElement {
  int d = 2;
  int phase = 0;
  std::vector<int> a;
  std::vector<int> b;

  int qudits() const { return static_cast<int>(a.size()); }
  bool is_central() const;   // a = b = 0
  bool is_identity() const;  // central with phase 0

  bool operator==(const PauliElement&) const = default;
  bool operator<(const PauliElement& rhs) const;
};

PauliElement pauli_identity(int d, int N);
PauliElement make_pauli(int d, int phase, std::vector<int> a, std::vector<int> b);

// Product rule (c, a, b) * (c', a', b') = (c + c' + b.a', a + a', b + b'),
// from Z^b X^{a'} = omega^{b.a'} X^{a'} Z^b.
PauliElement pauli_mul(const PauliElement& p, const PauliElement& q);

PauliElement pauli_inverse(const PauliElement& p);

// a.b' - b.a' mod d; zero exactly when the materializations commute.
int pauli_commutator_exponent(const PauliElement& p, const PauliElement& q);

// Least k >= 1 with p^k = identity, computed symbolically.
int pauli_order(const PauliElement& p);

/// Projective point of V(2N,d): nonzero representative normalized so the
/// first nonzero coordinate is 1.
struct ProjPoint {
  int d = 2;
  std::vector<int> rep;

  bool operator==(const ProjPoint&) const = default;
};

// The point of the concatenated vector (a|b); throws std::domain_error on
// central input. Phases are discarded.
ProjPoint gamma(const PauliElement& p);

/// gamma^{-1} of a spread: d^N + 1 classes of d^N - 1 phase-zero Pauli
/// elements whose (a|b) vectors run over the nonzero vectors of one spread
/// member each.
struct SymbolicMcc {
  int d = 2;
  int N = 1;
  std::vector<std::vector<PauliElement>> classes;

  int dimension() const;  // d^N
};

// Spread coordinates are the canonical symplectic coordinates, in which
// positions 2k and 2k+1 pair; they map to (a_k, b_k) of qudit k. Throws
// std::invalid_argument if the spread fails validation.
SymbolicMcc gamma_inverse(const Spread& s);

// Dense d^N x d^N unitary: omega^phase * tensor of shift^a_k clock^b_k.
ComplexMatrix materialize(const PauliElement& p);

}  // namespace mublab
