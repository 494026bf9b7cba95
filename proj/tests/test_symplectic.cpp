#include "mublab/symplectic.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"

using namespace mublab;

namespace {

FpVector basis_vector(int d, int n, int i) {
  std::vector<int> c(n, 0);
  c[i] = 1;
  return FpVector(d, c);
}

// Independent W_3(2) model: the 15 nonzero vectors of F_2^4 with the
// canonical pairing written out by hand. Lines are triples {u, v, u+v} on
// which the form vanishes; spreads are found by checking all 5-subsets of
// lines for an exact cover.
struct DoilyOracle {
  std::vector<std::array<int, 4>> points;
  std::vector<std::set<int>> lines;
  int spread_count = 0;

  DoilyOracle() {
    for (int mask = 1; mask < 16; ++mask) {
      points.push_back({mask >> 3 & 1, mask >> 2 & 1, mask >> 1 & 1, mask & 1});
    }
    auto form = [](const std::array<int, 4>& u, const std::array<int, 4>& v) {
      return (u[0] * v[1] + u[1] * v[0] + u[2] * v[3] + u[3] * v[2]) % 2;
    };
    auto add = [](const std::array<int, 4>& u, const std::array<int, 4>& v) {
      return std::array<int, 4>{(u[0] + v[0]) % 2, (u[1] + v[1]) % 2, (u[2] + v[2]) % 2,
                                (u[3] + v[3]) % 2};
    };
    auto index_of = [&](const std::array<int, 4>& u) {
      return static_cast<int>(std::find(points.begin(), points.end(), u) - points.begin());
    };
    std::set<std::set<int>> seen;
    for (int i = 0; i < 15; ++i) {
      for (int j = i + 1; j < 15; ++j) {
        if (form(points[i], points[j]) != 0) continue;
        std::set<int> line{i, j, index_of(add(points[i], points[j]))};
        seen.insert(line);
      }
    }
    lines.assign(seen.begin(), seen.end());
    // All 5-subsets of lines, counting exact covers of the 15 points.
    const int n = static_cast<int>(lines.size());
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int d = c + 1; d < n; ++d)
            for (int e = d + 1; e < n; ++e) {
              std::set<int> covered;
              for (int idx : {a, b, c, d, e}) {
                covered.insert(lines[idx].begin(), lines[idx].end());
              }
              if (covered.size() == 15) ++spread_count;
            }
  }
};

}  // namespace

TEST_CASE("canonical form gram matrices") {
  CHECK(canonical_form(2, 1).gram.a == std::vector<int>{0, 1, 1, 0});
  CHECK(canonical_form(3, 1).gram.a == std::vector<int>{0, 1, 2, 0});
  for (auto [d, n] : {std::pair{5, 2}, {3, 3}, {7, 1}}) {
    SymplecticForm f = canonical_form(d, n);
    CHECK(form_eval(f, basis_vector(d, 2 * n, 0), basis_vector(d, 2 * n, 1)) == 1);
    // Non-degenerate: the Gram matrix is invertible.
    CHECK_NOTHROW(fp_mat_inverse(f.gram));
  }
}

TEST_CASE("form evaluation is alternating and antisymmetric") {
  std::mt19937 rng(20240811);
  for (auto [d, n] : {std::pair{3, 2}, {2, 2}, {5, 1}}) {
    SymplecticForm f = canonical_form(d, n);
    std::uniform_int_distribution<int> dist(0, d - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<int> uc(2 * n), vc(2 * n);
      for (int& x : uc) x = dist(rng);
      for (int& x : vc) x = dist(rng);
      FpVector u(d, uc), v(d, vc);
      CHECK(form_eval(f, u, u) == 0);
      CHECK(fp_add(form_eval(f, u, v), form_eval(f, v, u), d) == 0);
    }
  }
  SymplecticForm f32 = canonical_form(3, 2);
  CHECK(form_eval(f32, FpVector(3, {1, 0, 0, 0}), FpVector(3, {0, 0, 0, 1})) == 0);
  CHECK_THROWS_AS(form_eval(f32, FpVector(3, {1, 0}), FpVector(3, {0, 0, 0, 1})),
                  std::invalid_argument);
}

TEST_CASE("total isotropy") {
  SymplecticForm f = canonical_form(2, 2);
  // Every 1-dimensional subspace is isotropic for an alternating form.
  for (int i = 0; i < 4; ++i) {
    FpMatrix rows(2, 1, 4);
    rows.at(0, i) = 1;
    CHECK(is_totally_isotropic(f, make_subspace(rows)));
  }
  FpMatrix hyperbolic(2, 2, 4);
  hyperbolic.at(0, 0) = 1;
  hyperbolic.at(1, 1) = 1;  // span{e0, e1}: paired coordinates
  CHECK_FALSE(is_totally_isotropic(f, make_subspace(hyperbolic)));
  FpMatrix cross(2, 2, 4);
  cross.at(0, 0) = 1;
  cross.at(1, 2) = 1;  // span{e0, e2}: different blocks
  CHECK(is_totally_isotropic(f, make_subspace(cross)));
}

TEST_CASE("make_subspace canonicalizes and rejects dependent rows") {
  FpMatrix rows(3, 2, 4);
  rows.at(0, 0) = 2;  // 2*e0 normalizes to e0
  rows.at(1, 3) = 1;
  Subspace s = make_subspace(rows);
  CHECK(s.basis.at(0, 0) == 1);
  FpMatrix dep(3, 2, 4);
  dep.at(0, 0) = 1;
  dep.at(1, 0) = 2;
  CHECK_THROWS_AS(make_subspace(dep), std::invalid_argument);
}

TEST_CASE("Desarguesian spreads validate across desk-scale parameters") {
  for (auto [d, n] : {std::pair{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
    Spread s = desarguesian_spread(d, n);
    std::int64_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= d;
    CHECK(s.members.size() == static_cast<std::size_t>(expected + 1));
    SpreadValidation report = validate_spread(canonical_form(d, n), s);
    CHECK(report.members_isotropic);
    CHECK(report.member_dimensions_ok);
    CHECK(report.exact_partition);
    CHECK(report.ok());
  }
}

TEST_CASE("point spreads in the N=1 plane") {
  // For N=1 the maximal isotropic subspaces are the points themselves.
  Spread s2 = desarguesian_spread(2, 1);
  CHECK(s2.members.size() == 3);
  Spread s3 = desarguesian_spread(3, 1);
  CHECK(s3.members.size() == 4);
  for (const Subspace& m : s3.members) CHECK(m.dimension() == 1);
}

TEST_CASE("spread construction is deterministic") {
  Spread a = desarguesian_spread(3, 2);
  Spread b = desarguesian_spread(3, 2);
  REQUIRE(a.members.size() == b.members.size());
  for (std::size_t i = 0; i < a.members.size(); ++i) CHECK(a.members[i] == b.members[i]);
}

TEST_CASE("spread validation catches corruption") {
  SymplecticForm f = canonical_form(2, 2);
  Spread good = desarguesian_spread(2, 2);

  Spread doubled = good;
  doubled.members[1] = doubled.members[0];
  SpreadValidation dup_report = validate_spread(f, doubled);
  CHECK_FALSE(dup_report.exact_partition);
  CHECK_FALSE(dup_report.ok());

  Spread twisted = good;
  FpMatrix hyperbolic(2, 2, 4);
  hyperbolic.at(0, 0) = 1;
  hyperbolic.at(1, 1) = 1;
  twisted.members[0] = make_subspace(hyperbolic);
  SpreadValidation iso_report = validate_spread(f, twisted);
  CHECK_FALSE(iso_report.members_isotropic);
}

TEST_CASE("maximal isotropic subspaces of the doily") {
  std::vector<Subspace> lines = maximal_isotropic_subspaces(canonical_form(2, 2));
  CHECK(lines.size() == 15);  // (q+1)(q^2+1) with q = 2
  CHECK(std::is_sorted(lines.begin(), lines.end()));
  for (const Subspace& l : lines) {
    CHECK(l.dimension() == 2);
    CHECK(is_totally_isotropic(canonical_form(2, 2), l));
  }
}

TEST_CASE("spread enumeration agrees with the brute-force doily oracle") {
  DoilyOracle oracle;
  CHECK(oracle.lines.size() == 15);
  std::vector<Spread> spreads = enumerate_spreads(canonical_form(2, 2), 1000);
  CHECK(static_cast<int>(spreads.size()) == oracle.spread_count);
  CHECK(spreads.size() == 6);  // value confirmed by the oracle run above
  for (const Spread& s : spreads) {
    CHECK(validate_spread(canonical_form(2, 2), s).ok());
  }
}

TEST_CASE("spread enumeration in the N=1 plane finds the unique point spread") {
  for (int d : {2, 3, 5, 7}) {
    std::vector<Spread> spreads = enumerate_spreads(canonical_form(d, 1), 100);
    CHECK(spreads.size() == 1);
    CHECK(spreads[0].members.size() == static_cast<std::size_t>(d + 1));
    CHECK(validate_spread(canonical_form(d, 1), spreads[0]).ok());
  }
}

TEST_CASE("spread enumeration respects limit and determinism") {
  std::vector<Spread> one = enumerate_spreads(canonical_form(3, 2), 1);
  REQUIRE(one.size() == 1);
  CHECK(validate_spread(canonical_form(3, 2), one[0]).ok());
  std::vector<Spread> five_a = enumerate_spreads(canonical_form(3, 2), 5);
  std::vector<Spread> five_b = enumerate_spreads(canonical_form(3, 2), 5);
  REQUIRE(five_a.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(five_a[i].members == five_b[i].members);
    CHECK(validate_spread(canonical_form(3, 2), five_a[i]).ok());
  }
  CHECK(one[0].members == five_a[0].members);
}

TEST_CASE("enumeration guard rejects large parameters") {
  CHECK_THROWS_AS(enumerate_spreads(canonical_form(5, 2), 1), std::invalid_argument);
  CHECK_THROWS_AS(maximal_isotropic_subspaces(canonical_form(2, 4)), std::invalid_argument);
}
