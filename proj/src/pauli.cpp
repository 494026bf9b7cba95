#include "mublab/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mublab {

bool PauliElement::is_central() const {
  auto zero = [](int c) { return c == 0; };
  return std::all_of(a.begin(), a.end(), zero) && std::all_of(b.begin(), b.end(), zero);
}

bool PauliElement::is_identity() const { return phase == 0 && is_central(); }

bool PauliElement::operator<(const PauliElement& rhs) const {
  if (a != rhs.a) return a < rhs.a;
  if (b != rhs.b) return b < rhs.b;
  return phase < rhs.phase;
}

PauliElement pauli_identity(int d, int N) {
  require_prime_modulus(d);
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  return PauliElement{d, 0, std::vector<int>(N, 0), std::vector<int>(N, 0)};
}

PauliElement make_pauli(int d, int phase, std::vector<int> a, std::vector<int> b) {
  require_prime_modulus(d);
  if (a.empty() || a.size() != b.size()) {
    throw std::invalid_argument("a and b must have equal positive length");
  }
  PauliElement p{d, fp_reduce(phase, d), std::move(a), std::move(b)};
  for (int& c : p.a) c = fp_reduce(c, d);
  for (int& c : p.b) c = fp_reduce(c, d);
  return p;
}

namespace {
void require_same_group(const PauliElement& p, const PauliElement& q) {
  if (p.d != q.d || p.a.size() != q.a.size()) {
    throw std::invalid_argument("Pauli elements from different groups");
  }
}
}  // namespace

PauliElement pauli_mul(const PauliElement& p, const PauliElement& q) {
  require_same_group(p, q);
  PauliElement r = p;
  int cross = 0;  // b . a'
  for (int k = 0; k < p.qudits(); ++k) {
    cross = fp_add(cross, fp_mul(p.b[k], q.a[k], p.d), p.d);
    r.a[k] = fp_add(p.a[k], q.a[k], p.d);
    r.b[k] = fp_add(p.b[k], q.b[k], p.d);
  }
  r.phase = fp_add(fp_add(p.phase, q.phase, p.d), cross, p.d);
  return r;
}

PauliElement pauli_inverse(const PauliElement& p) {
  // (omega^c X^a Z^b)^-1 = omega^{-c + a.b} X^{-a} Z^{-b}.
  PauliElement r = p;
  int ab = 0;
  for (int k = 0; k < p.qudits(); ++k) {
    ab = fp_add(ab, fp_mul(p.a[k], p.b[k], p.d), p.d);
    r.a[k] = fp_neg(p.a[k], p.d);
    r.b[k] = fp_neg(p.b[k], p.d);
  }
  r.phase = fp_add(fp_neg(p.phase, p.d), ab, p.d);
  return r;
}

int pauli_commutator_exponent(const PauliElement& p, const PauliElement& q) {
  require_same_group(p, q);
  int acc = 0;
  for (int k = 0; k < p.qudits(); ++k) {
    acc = fp_add(acc, fp_mul(p.a[k], q.b[k], p.d), p.d);
    acc = fp_sub(acc, fp_mul(p.b[k], q.a[k], p.d), p.d);
  }
  return acc;
}

int pauli_order(const PauliElement& p) {
  PauliElement acc = p;
  // Orders divide 2d^2 comfortably; the guard only protects against misuse.
  for (int k = 1; k <= 8 * p.d; ++k) {
    if (acc.is_identity()) return k;
    acc = pauli_mul(acc, p);
  }
  throw std::logic_error("element order exceeded bound");
}

ProjPoint gamma(const PauliElement& p) {
  if (p.is_central()) throw std::domain_error("gamma is undefined on central elements");
  std::vector<int> rep;
  rep.reserve(2 * p.a.size());
  rep.insert(rep.end(), p.a.begin(), p.a.end());
  rep.insert(rep.end(), p.b.begin(), p.b.end());
  std::size_t first = 0;
  while (rep[first] == 0) ++first;
  int scale = fp_inv(rep[first], p.d);
  for (int& c : rep) c = fp_mul(scale, c, p.d);
  return ProjPoint{p.d, std::move(rep)};
}

int SymbolicMcc::dimension() const {
  int dim = 1;
  for (int i = 0; i < N; ++i) dim *= d;
  return dim;
}

SymbolicMcc gamma_inverse(const Spread& s) {
  SpreadValidation check = validate_spread(canonical_form(s.d, s.N), s);
  if (!check.ok()) {
    throw std::invalid_argument("gamma_inverse requires a valid spread: " + check.first_failure);
  }
  SymbolicMcc mcc;
  mcc.d = s.d;
  mcc.N = s.N;
  for (const Subspace& member : s.members) {
    std::vector<PauliElement> cls;
    for (const FpVector& v : subspace_vectors(member)) {
      std::vector<int> a(s.N), b(s.N);
      for (int k = 0; k < s.N; ++k) {
        a[k] = v.coords[2 * k];
        b[k] = v.coords[2 * k + 1];
      }
      cls.push_back(PauliElement{s.d, 0, std::move(a), std::move(b)});
    }
    mcc.classes.push_back(std::move(cls));
  }
  return mcc;
}

ComplexMatrix materialize(const PauliElement& p) {
  const int d = p.d;
  const double angle = 2.0 * std::numbers::pi / d;
  auto omega_pow = [&](int e) {
    return Complex(std::cos(angle * e), std::sin(angle * e));
  };
  // Single-qudit factor X^a Z^b: entry ((s + a) mod d, s) = omega^{b s}.
  ComplexMatrix acc = ComplexMatrix::Identity(1, 1);
  for (int k = 0; k < p.qudits(); ++k) {
    ComplexMatrix factor = ComplexMatrix::Zero(d, d);
    for (int s = 0; s < d; ++s) {
      factor((s + p.a[k]) % d, s) = omega_pow(fp_mul(p.b[k], s % d, d));
    }
    ComplexMatrix next(acc.rows() * d, acc.cols() * d);
    for (Eigen::Index r = 0; r < acc.rows(); ++r) {
      for (Eigen::Index c = 0; c < acc.cols(); ++c) {
        next.block(r * d, c * d, d, d) = acc(r, c) * factor;
      }
    }
    acc = std::move(next);
  }
  return omega_pow(p.phase) * acc;
}

}  // namespace mublab
