#include "mublab/grouplab.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mublab/mub.hpp"
#include "mublab/symplectic.hpp"

using namespace mublab;

namespace {

std::vector<PauliElement> pauli_generators(int d, int N) {
  std::vector<PauliElement> gens;
  for (int k = 0; k < N; ++k) {
    std::vector<int> a(N, 0), b(N, 0);
    a[k] = 1;
    gens.push_back(make_pauli(d, 0, a, std::vector<int>(N, 0)));
    b[k] = 1;
    gens.push_back(make_pauli(d, 0, std::vector<int>(N, 0), b));
  }
  return gens;
}

std::vector<ComplexMatrix> materialized(const std::vector<PauliElement>& ps) {
  std::vector<ComplexMatrix> out;
  out.reserve(ps.size());
  for (const PauliElement& p : ps) out.push_back(materialize(p));
  return out;
}

NumericMcc pauli_mcc(int d, int N) {
  return to_numeric(gamma_inverse(desarguesian_spread(d, N)));
}

std::uint64_t int_pow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

TEST_CASE("symbolic closures of small Pauli groups") {
  GroupClosure p12 = closure(pauli_generators(2, 1), 1000);
  CHECK(p12.order() == 8);
  GroupClosure p13 = closure(pauli_generators(3, 1), 1000);
  CHECK(p13.order() == 27);
  GroupClosure cyclic = closure(std::vector<PauliElement>{make_pauli(2, 0, {1}, {0})}, 1000);
  CHECK(cyclic.order() == 2);
}

TEST_CASE("closure is deterministic") {
  GroupClosure a = closure(pauli_generators(3, 1), 1000);
  GroupClosure b = closure(pauli_generators(3, 1), 1000);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.symbolic_element(i) == b.symbolic_element(i));
  }
  CHECK(a.generator_indices() == b.generator_indices());
}

TEST_CASE("numeric closure modes agree with the symbolic count") {
  for (auto [d, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    std::vector<PauliElement> gens = pauli_generators(d, n);
    GroupClosure sym = closure(gens, 100000);
    GroupClosure hashed = closure(materialized(gens), ClosureMode::NumericHashed, 100000);
    CHECK(sym.order() == hashed.order());
    CHECK(*sym.order() == int_pow(d, 2 * n + 1));
    GroupClosure projective = closure(materialized(gens), ClosureMode::NumericProjective, 100000);
    CHECK(*projective.order() == int_pow(d, 2 * n));  // P modulo its center
  }
}

TEST_CASE("closure guards") {
  CHECK_THROWS_AS(closure(pauli_generators(2, 1), 1), std::invalid_argument);
  std::vector<ComplexMatrix> nonunitary{2.0 * ComplexMatrix::Identity(2, 2)};
  CHECK_THROWS_AS(closure(nonunitary, ClosureMode::NumericHashed, 100), std::invalid_argument);
  std::vector<PauliElement> mixed{make_pauli(2, 0, {1}, {0}), make_pauli(3, 0, {1}, {0})};
  CHECK_THROWS_AS(closure(mixed, 100), std::invalid_argument);
}

TEST_CASE("cap exceeded reporting") {
  GroupClosure capped = closure(materialized(pauli_generators(3, 1)),
                                ClosureMode::NumericHashed, 10);
  CHECK(capped.cap_exceeded());
  CHECK_FALSE(capped.order().has_value());
  CHECK(capped.size() == 10);
  CHECK_THROWS_AS(group_invariants(capped), std::invalid_argument);
  CHECK_THROWS_AS(derived_subgroup(capped), std::invalid_argument);
  CHECK_THROWS_AS(lower_central_series(capped), std::invalid_argument);
}

TEST_CASE("group invariants of P_1(3) and P_1(2)") {
  GroupInvariants p3 = group_invariants(closure(pauli_generators(3, 1), 1000));
  CHECK(p3.order == 27);
  CHECK(p3.exponent == 3);
  CHECK(p3.center_order == 3);

  GroupInvariants p2 = group_invariants(closure(pauli_generators(2, 1), 1000));
  CHECK(p2.order == 8);
  CHECK(p2.exponent == 4);
  CHECK(p2.center_order == 2);

  GroupInvariants trivial =
      group_invariants(closure(std::vector<PauliElement>{pauli_identity(3, 1)}, 10));
  CHECK(trivial.order == 1);
  CHECK(trivial.exponent == 1);
  CHECK(trivial.center_order == 1);
}

TEST_CASE("numeric invariants agree with symbolic ones") {
  std::vector<PauliElement> gens = pauli_generators(3, 1);
  GroupInvariants sym = group_invariants(closure(gens, 1000));
  GroupInvariants num =
      group_invariants(closure(materialized(gens), ClosureMode::NumericHashed, 1000));
  CHECK(sym.order == num.order);
  CHECK(sym.exponent == num.exponent);
  CHECK(sym.center_order == num.center_order);
  CHECK(sym.element_order_counts == num.element_order_counts);
}

TEST_CASE("derived subgroup of the Pauli group equals its center") {
  for (auto [d, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    GroupClosure g = closure(pauli_generators(d, n), 100000);
    GroupClosure derived = derived_subgroup(g);
    GroupClosure center = center_subgroup(g);
    CHECK(derived.order() == static_cast<std::size_t>(d));
    CHECK(same_element_set(derived, center));
    CHECK(derived.contains(make_pauli(d, 1, std::vector<int>(n, 0), std::vector<int>(n, 0))));
  }
  GroupClosure abelian = closure(std::vector<PauliElement>{make_pauli(3, 0, {0}, {1})}, 100);
  CHECK(derived_subgroup(abelian).order() == 1);
}

TEST_CASE("lower central series finds nilpotence class 2 for Pauli groups") {
  for (auto [d, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    SeriesReport series = lower_central_series(closure(pauli_generators(d, n), 100000));
    CHECK(series.kind == SeriesReport::Kind::Nilpotent);
    CHECK(series.nilpotence_class == 2);
    REQUIRE(series.term_orders.size() >= 3);
    CHECK(series.term_orders[1] == static_cast<std::size_t>(d));
    CHECK(series.term_orders[2] == 1);
  }
  SeriesReport abelian =
      lower_central_series(closure(std::vector<PauliElement>{make_pauli(3, 0, {0}, {1})}, 100));
  CHECK(abelian.kind == SeriesReport::Kind::Nilpotent);
  CHECK(abelian.nilpotence_class == 1);
}

TEST_CASE("heights of Pauli-derived MCCs equal d") {
  for (auto [d, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    HeightResult sym = height(gamma_inverse(desarguesian_spread(d, n)), 100000);
    CHECK_FALSE(sym.unbounded_at_cap);
    CHECK(sym.num == static_cast<std::uint64_t>(d));
    CHECK(sym.den == 1);
    CHECK(sym.integral);

    HeightResult num = height(pauli_mcc(d, n), ClosureMode::NumericHashed, 100000);
    CHECK(num.num == static_cast<std::uint64_t>(d));
    CHECK(num.den == 1);
  }
}

TEST_CASE("projective orders") {
  SymbolicMcc qutrit = gamma_inverse(desarguesian_spread(3, 1));
  for (const auto& cls : qutrit.classes) {
    for (const PauliElement& p : cls) {
      CHECK(projective_order(materialize(p), 100) == 3);
    }
  }
  ComplexMatrix xz = materialize(make_pauli(2, 0, {1}, {1}));
  CHECK(projective_order(xz, 100) == 2);  // (XZ)^2 = -id is scalar
  CHECK(projective_order(ComplexMatrix::Identity(4, 4), 100) == 1);
  // alpha operators have D distinct eigenvalues, hence projective order D.
  MubSet mub = beta(pauli_mcc(3, 1));
  NumericMcc a = alpha(mub);
  for (const auto& cls : a.classes) {
    CHECK(projective_order(cls[0], 100) == 3);
  }
  ComplexMatrix tiny = materialize(make_pauli(5, 0, {1}, {2}));
  CHECK_FALSE(projective_order(tiny, 3).has_value());
  CHECK_THROWS_AS(projective_order(2.0 * xz, 100), std::invalid_argument);
}

TEST_CASE("fingerprints of Pauli MCCs") {
  MccFingerprint fp = fingerprint(pauli_mcc(3, 2), 1000);
  CHECK(fp.dimension == 9);
  CHECK(fp.num_classes == 10);
  CHECK(fp.projective_orders == std::vector<std::int64_t>(80, 3));
  CHECK_FALSE(fp.closure_cap_exceeded);
  CHECK(fp.projective_closure_order == 81);  // P_2(3) modulo center
  CHECK(fp.projective_exponent == 3);
  CHECK(fp.projective_nilpotence_class == 1);  // the projective Pauli group is abelian
}

TEST_CASE("fingerprints are invariant under operator scaling") {
  NumericMcc mcc = pauli_mcc(3, 1);
  MccFingerprint base = fingerprint(mcc, 1000);
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (int round = 0; round < 25; ++round) {
    std::vector<Complex> scalars;
    for (std::size_t i = 0; i < mcc.operator_count(); ++i) {
      double t = angle(rng);
      scalars.emplace_back(std::cos(t), std::sin(t));
    }
    CHECK(fingerprint(scale_mcc(mcc, scalars), 1000) == base);
  }
}

TEST_CASE("fingerprints are invariant under conjugation by a fixed unitary") {
  NumericMcc mcc = pauli_mcc(3, 1);
  MccFingerprint base = fingerprint(mcc, 1000);
  // Deterministic unitary from the QR of a seeded Gaussian matrix.
  std::mt19937 rng(4242);
  std::normal_distribution<double> gauss;
  ComplexMatrix m(3, 3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  ComplexMatrix v = qr.householderQ() * ComplexMatrix::Identity(3, 3);
  NumericMcc conjugated = mcc;
  for (auto& cls : conjugated.classes) {
    for (auto& op : cls) op = v * op * v.adjoint();
  }
  CHECK(validate_mcc(conjugated).ok());
  CHECK(fingerprint(conjugated, 1000) == base);
}

TEST_CASE("certificates separate Pauli and alpha MCCs in dimension 4") {
  NumericMcc pauli4 = pauli_mcc(2, 2);
  NumericMcc alpha4 = alpha(beta(pauli4));
  NonIsomorphismCertificate cert = certify_nonisomorphic(pauli4, alpha4, 2000);
  CHECK(cert.conclusive);
  CHECK(cert.invariant == "projective operator order multiset");
  // Pauli projective orders are all 2; alpha classes contain order-4 elements.
  CHECK(cert.left.projective_orders == std::vector<std::int64_t>(15, 2));
  CHECK(std::count(cert.right.projective_orders.begin(), cert.right.projective_orders.end(), 4) >
        0);
}

TEST_CASE("certification is inconclusive for scaled copies and self-comparison") {
  NumericMcc mcc = pauli_mcc(3, 1);
  NonIsomorphismCertificate self = certify_nonisomorphic(mcc, mcc, 1000);
  CHECK_FALSE(self.conclusive);

  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::vector<Complex> scalars;
  for (std::size_t i = 0; i < mcc.operator_count(); ++i) {
    double t = angle(rng);
    scalars.emplace_back(std::cos(t), std::sin(t));
  }
  NonIsomorphismCertificate scaled = certify_nonisomorphic(mcc, scale_mcc(mcc, scalars), 1000);
  CHECK_FALSE(scaled.conclusive);

  CHECK_THROWS_AS(certify_nonisomorphic(mcc, pauli_mcc(2, 1), 1000), std::invalid_argument);
}

TEST_CASE("Proposition 2 suite in the exact model") {
  for (auto [d, n] : {std::pair{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
    GroupClosure g = closure(pauli_generators(d, n), 1 << 20);
    GroupInvariants inv = group_invariants(g);
    CHECK(inv.order == int_pow(d, 2 * n + 1));
    CHECK(inv.center_order == static_cast<std::size_t>(d));
    CHECK(inv.exponent == (d == 2 ? 4u : static_cast<std::uint64_t>(d)));
    CHECK(same_element_set(derived_subgroup(g), center_subgroup(g)));
    SeriesReport series = lower_central_series(g);
    CHECK(series.kind == SeriesReport::Kind::Nilpotent);
    CHECK(series.nilpotence_class == 2);
    CHECK(inv.order / inv.center_order == int_pow(d, 2 * n));  // |P/Z| = |V(2N,d)|
  }
}
