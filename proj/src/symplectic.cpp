#include "mublab/symplectic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mublab {

FpMatrix::FpMatrix(int d, int rows, int cols)
    : d(d), rows(rows), cols(cols), a(static_cast<std::size_t>(rows) * cols, 0) {
  require_prime_modulus(d);
}

FpVector FpMatrix::row(int r) const {
  return FpVector(d, std::vector<int>(a.begin() + static_cast<std::size_t>(r) * cols,
                                      a.begin() + static_cast<std::size_t>(r + 1) * cols));
}

FpMatrix fp_mat_mul(const FpMatrix& x, const FpMatrix& y) {
  if (x.d != y.d || x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  FpMatrix r(x.d, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      int v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        r.at(i, j) = fp_add(r.at(i, j), fp_mul(v, y.at(k, j), x.d), x.d);
      }
    }
  }
  return r;
}

FpMatrix fp_mat_transpose(const FpMatrix& x) {
  FpMatrix r(x.d, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  }
  return r;
}

FpMatrix fp_mat_identity(int d, int n) {
  FpMatrix r(d, n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

FpMatrix fp_mat_inverse(const FpMatrix& x) {
  if (x.rows != x.cols) throw std::invalid_argument("inverse of non-square matrix");
  int n = x.rows;
  FpMatrix work = x;
  FpMatrix inv = fp_mat_identity(x.d, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::invalid_argument("singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(work.a[static_cast<std::size_t>(pivot) * n + j],
                work.a[static_cast<std::size_t>(col) * n + j]);
      std::swap(inv.a[static_cast<std::size_t>(pivot) * n + j],
                inv.a[static_cast<std::size_t>(col) * n + j]);
    }
    int scale = fp_inv(work.at(col, col), x.d);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) = fp_mul(work.at(col, j), scale, x.d);
      inv.at(col, j) = fp_mul(inv.at(col, j), scale, x.d);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      int c = work.at(r, col);
      if (c == 0) continue;
      for (int j = 0; j < n; ++j) {
        work.at(r, j) = fp_sub(work.at(r, j), fp_mul(c, work.at(col, j), x.d), x.d);
        inv.at(r, j) = fp_sub(inv.at(r, j), fp_mul(c, inv.at(col, j), x.d), x.d);
      }
    }
  }
  return inv;
}

FpMatrix rref(const FpMatrix& x) {
  FpMatrix m = x;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < m.cols; ++j) {
      std::swap(m.a[static_cast<std::size_t>(pivot) * m.cols + j],
                m.a[static_cast<std::size_t>(rank) * m.cols + j]);
    }
    int scale = fp_inv(m.at(rank, col), m.d);
    for (int j = 0; j < m.cols; ++j) m.at(rank, j) = fp_mul(m.at(rank, j), scale, m.d);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      int c = m.at(r, col);
      if (c == 0) continue;
      for (int j = 0; j < m.cols; ++j) {
        m.at(r, j) = fp_sub(m.at(r, j), fp_mul(c, m.at(rank, j), m.d), m.d);
      }
    }
    ++rank;
  }
  FpMatrix out(m.d, rank, m.cols);
  std::copy(m.a.begin(), m.a.begin() + static_cast<std::size_t>(rank) * m.cols, out.a.begin());
  return out;
}

SymplecticForm canonical_form(int d, int N) {
  require_prime_modulus(d);
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  SymplecticForm f;
  f.d = d;
  f.N = N;
  f.gram = FpMatrix(d, 2 * N, 2 * N);
  for (int i = 0; i < N; ++i) {
    f.gram.at(2 * i, 2 * i + 1) = 1;
    f.gram.at(2 * i + 1, 2 * i) = fp_neg(1, d);
  }
  return f;
}

int form_eval(const SymplecticForm& f, const FpVector& u, const FpVector& v) {
  if (u.d != f.d || v.d != f.d || static_cast<int>(u.size()) != f.gram.rows ||
      static_cast<int>(v.size()) != f.gram.rows) {
    throw std::invalid_argument("form/vector dimension mismatch");
  }
  int acc = 0;
  for (int i = 0; i < f.gram.rows; ++i) {
    if (u.coords[i] == 0) continue;
    int rowdot = 0;
    for (int j = 0; j < f.gram.cols; ++j) {
      rowdot = fp_add(rowdot, fp_mul(f.gram.at(i, j), v.coords[j], f.d), f.d);
    }
    acc = fp_add(acc, fp_mul(u.coords[i], rowdot, f.d), f.d);
  }
  return acc;
}

Subspace make_subspace(const FpMatrix& rows) {
  FpMatrix canon = rref(rows);
  if (canon.rows != rows.rows) throw std::invalid_argument("subspace basis rows are dependent");
  return Subspace{canon};
}

std::vector<FpVector> subspace_vectors(const Subspace& s) {
  const FpMatrix& b = s.basis;
  std::int64_t count = 1;
  for (int i = 0; i < b.rows; ++i) count *= b.d;
  std::vector<FpVector> out;
  out.reserve(static_cast<std::size_t>(count - 1));
  std::vector<int> combo(b.rows, 0);
  for (std::int64_t idx = 1; idx < count; ++idx) {
    std::int64_t v = idx;
    for (int i = b.rows - 1; i >= 0; --i) {
      combo[i] = static_cast<int>(v % b.d);
      v /= b.d;
    }
    FpVector acc(b.d, std::vector<int>(b.cols, 0));
    for (int i = 0; i < b.rows; ++i) {
      if (combo[i] == 0) continue;
      for (int j = 0; j < b.cols; ++j) {
        acc.coords[j] = fp_add(acc.coords[j], fp_mul(combo[i], b.at(i, j), b.d), b.d);
      }
    }
    out.push_back(std::move(acc));
  }
  std::sort(out.begin(), out.end(),
            [](const FpVector& x, const FpVector& y) { return x.coords < y.coords; });
  return out;
}

bool is_totally_isotropic(const SymplecticForm& f, const Subspace& w) {
  if (w.basis.cols != f.gram.cols || w.basis.d != f.d) {
    throw std::invalid_argument("subspace/form dimension mismatch");
  }
  for (int i = 0; i < w.basis.rows; ++i) {
    for (int j = i; j < w.basis.rows; ++j) {
      if (form_eval(f, w.basis.row(i), w.basis.row(j)) != 0) return false;
    }
  }
  return true;
}

namespace {

// Columns of the returned matrix are a symplectic basis e_1, f_1, ..., e_N,
// f_N for the given Gram matrix: pairing 1 inside a pair, 0 across pairs.
FpMatrix symplectic_basis(const SymplecticForm& f) {
  int n = f.gram.rows;
  int d = f.d;
  auto eval = [&](const FpVector& u, const FpVector& v) { return form_eval(f, u, v); };

  std::vector<FpVector> rem;
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    rem.emplace_back(d, std::move(c));
  }
  std::vector<FpVector> basis;
  while (!rem.empty()) {
    FpVector e = rem[0];
    int partner = -1;
    for (std::size_t j = 1; j < rem.size(); ++j) {
      if (eval(e, rem[j]) != 0) {
        partner = static_cast<int>(j);
        break;
      }
    }
    if (partner < 0) throw std::logic_error("degenerate symplectic form");
    FpVector fvec = scale(fp_inv(eval(e, rem[partner]), d), rem[partner]);
    basis.push_back(e);
    basis.push_back(fvec);

    FpMatrix proj(d, static_cast<int>(rem.size()) - 2, n);
    int out_row = 0;
    for (std::size_t k = 0; k < rem.size(); ++k) {
      if (k == 0 || static_cast<int>(k) == partner) continue;
      // v' = v - B(v,f) e + B(v,e) f lies in the orthogonal complement of
      // span{e, f}.
      FpVector v = rem[k] + scale(fp_neg(eval(rem[k], fvec), d), e) +
                   scale(eval(rem[k], e), fvec);
      for (int j = 0; j < n; ++j) proj.at(out_row, j) = v.coords[j];
      ++out_row;
    }
    FpMatrix reduced = rref(proj);
    rem.clear();
    for (int r = 0; r < reduced.rows; ++r) rem.push_back(reduced.row(r));
  }

  FpMatrix p(d, n, n);
  for (int col = 0; col < n; ++col) {
    for (int r = 0; r < n; ++r) p.at(r, col) = basis[col].coords[r];
  }
  // P^T G P must be the canonical Gram matrix.
  FpMatrix check = fp_mat_mul(fp_mat_mul(fp_mat_transpose(p), f.gram), p);
  if (check != canonical_form(d, n / 2).gram) {
    throw std::logic_error("symplectic basis construction failed");
  }
  return p;
}

}  // namespace

Spread desarguesian_spread(int d, int N) {
  require_prime_modulus(d);
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  ExtField field(d, N);

  // Trace-form model on F_{d^N} x F_{d^N} with coordinates
  // (x_0..x_{N-1}, y_0..y_{N-1}):  B((x1,y1),(x2,y2)) = Tr(x1 y2 - x2 y1).
  SymplecticForm trace_form;
  trace_form.d = d;
  trace_form.N = N;
  trace_form.gram = FpMatrix(d, 2 * N, 2 * N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      ExtField::Element ti(N, 0);
      ti[i] = 1;
      ExtField::Element tj(N, 0);
      tj[j] = 1;
      int t = field.trace(field.mul(ti, tj));
      trace_form.gram.at(i, N + j) = t;
      trace_form.gram.at(N + i, j) = fp_neg(t, d);
    }
  }

  FpMatrix p = symplectic_basis(trace_form);
  FpMatrix q = fp_mat_inverse(p);  // standard coords -> canonical coords

  auto to_canonical = [&](const FpMatrix& rows) {
    FpMatrix mapped(d, rows.rows, rows.cols);
    for (int r = 0; r < rows.rows; ++r) {
      for (int i = 0; i < rows.cols; ++i) {
        int acc = 0;
        for (int j = 0; j < rows.cols; ++j) {
          acc = fp_add(acc, fp_mul(q.at(i, j), rows.at(r, j), d), d);
        }
        mapped.at(r, i) = acc;
      }
    }
    return make_subspace(mapped);
  };

  Spread s;
  s.d = d;
  s.N = N;
  // S_infinity = {(0, y)}.
  FpMatrix inf_rows(d, N, 2 * N);
  for (int i = 0; i < N; ++i) inf_rows.at(i, N + i) = 1;
  s.members.push_back(to_canonical(inf_rows));
  // S_m = {(x, m x)} for every m in F_{d^N}.
  for (const ExtField::Element& m : field.all_elements()) {
    FpMatrix rows(d, N, 2 * N);
    for (int i = 0; i < N; ++i) {
      ExtField::Element ti(N, 0);
      ti[i] = 1;
      ExtField::Element mi = field.mul(m, ti);
      rows.at(i, i) = 1;
      for (int j = 0; j < N; ++j) rows.at(i, N + j) = mi[j];
    }
    s.members.push_back(to_canonical(rows));
  }
  std::sort(s.members.begin(), s.members.end());
  return s;
}

namespace {

std::int64_t vector_index(const FpVector& v) {
  std::int64_t idx = 0;
  for (int c : v.coords) idx = idx * v.d + c;
  return idx;
}

}  // namespace

SpreadValidation validate_spread(const SymplecticForm& f, const Spread& s) {
  SpreadValidation report;
  report.members_isotropic = true;
  report.member_dimensions_ok = true;
  report.exact_partition = true;

  for (std::size_t i = 0; i < s.members.size(); ++i) {
    if (s.members[i].dimension() != s.N) {
      report.member_dimensions_ok = false;
      if (report.first_failure.empty()) {
        report.first_failure = "member " + std::to_string(i) + " has dimension " +
                               std::to_string(s.members[i].dimension()) + ", expected " +
                               std::to_string(s.N);
      }
      break;
    }
  }
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    if (!is_totally_isotropic(f, s.members[i])) {
      report.members_isotropic = false;
      if (report.first_failure.empty()) {
        report.first_failure = "member " + std::to_string(i) + " is not totally isotropic";
      }
      break;
    }
  }

  std::int64_t total = 1;
  for (int i = 0; i < 2 * s.N; ++i) total *= s.d;
  std::vector<int> cover(static_cast<std::size_t>(total), 0);
  for (const Subspace& m : s.members) {
    for (const FpVector& v : subspace_vectors(m)) {
      ++cover[static_cast<std::size_t>(vector_index(v))];
    }
  }
  for (std::int64_t idx = 1; idx < total; ++idx) {
    if (cover[static_cast<std::size_t>(idx)] != 1) {
      report.exact_partition = false;
      if (report.first_failure.empty()) {
        report.first_failure = "nonzero vector #" + std::to_string(idx) + " covered " +
                               std::to_string(cover[static_cast<std::size_t>(idx)]) + " times";
      }
      break;
    }
  }
  return report;
}

namespace {

void require_enumeration_scale(int d, int N) {
  std::int64_t size = 1;
  for (int i = 0; i < N; ++i) size *= d;
  if (size > 9) {
    throw std::invalid_argument("exhaustive enumeration is limited to d^N <= 9");
  }
}

// Normalized representatives (first nonzero coordinate 1) of all projective
// points, in lexicographic order.
std::vector<FpVector> projective_points(int d, int n) {
  std::vector<FpVector> pts;
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= d;
  for (std::int64_t idx = 1; idx < total; ++idx) {
    std::vector<int> c(n);
    std::int64_t v = idx;
    for (int i = n - 1; i >= 0; --i) {
      c[i] = static_cast<int>(v % d);
      v /= d;
    }
    int first = 0;
    while (c[first] == 0) ++first;
    if (c[first] != 1) continue;
    pts.emplace_back(d, std::move(c));
  }
  return pts;
}

}  // namespace

std::vector<Subspace> maximal_isotropic_subspaces(const SymplecticForm& f) {
  require_enumeration_scale(f.d, f.N);
  std::vector<FpVector> points = projective_points(f.d, 2 * f.N);

  std::set<Subspace> level;
  for (const FpVector& p : points) {
    FpMatrix rows(f.d, 1, 2 * f.N);
    for (int j = 0; j < 2 * f.N; ++j) rows.at(0, j) = p.coords[j];
    level.insert(make_subspace(rows));
  }
  for (int dim = 2; dim <= f.N; ++dim) {
    std::set<Subspace> next;
    for (const Subspace& s : level) {
      for (const FpVector& p : points) {
        bool compatible = true;
        for (int r = 0; r < s.basis.rows && compatible; ++r) {
          compatible = form_eval(f, s.basis.row(r), p) == 0;
        }
        if (!compatible) continue;
        FpMatrix rows(f.d, s.basis.rows + 1, 2 * f.N);
        std::copy(s.basis.a.begin(), s.basis.a.end(), rows.a.begin());
        for (int j = 0; j < 2 * f.N; ++j) rows.at(s.basis.rows, j) = p.coords[j];
        FpMatrix canon = rref(rows);
        if (canon.rows != dim) continue;  // p already inside s
        next.insert(Subspace{canon});
      }
    }
    level = std::move(next);
  }
  return std::vector<Subspace>(level.begin(), level.end());
}

std::vector<Spread> enumerate_spreads(const SymplecticForm& f, std::size_t limit) {
  require_enumeration_scale(f.d, f.N);
  std::vector<FpVector> points = projective_points(f.d, 2 * f.N);
  const std::size_t num_points = points.size();
  if (num_points > 64) throw std::logic_error("point set exceeds mask width");

  std::vector<Subspace> subs = maximal_isotropic_subspaces(f);
  std::vector<std::uint64_t> masks(subs.size(), 0);
  auto point_index = [&](const FpVector& v) {
    // Normalize, then locate by binary search over the lex-ordered points.
    int first = 0;
    while (v.coords[first] == 0) ++first;
    FpVector norm = scale(fp_inv(v.coords[first], f.d), v);
    auto it = std::lower_bound(points.begin(), points.end(), norm,
                               [](const FpVector& x, const FpVector& y) {
                                 return x.coords < y.coords;
                               });
    return static_cast<std::size_t>(it - points.begin());
  };
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (const FpVector& v : subspace_vectors(subs[i])) {
      masks[i] |= std::uint64_t{1} << point_index(v);
    }
  }
  std::vector<std::vector<std::size_t>> candidates(num_points);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t p = 0; p < num_points; ++p) {
      if (masks[i] >> p & 1) candidates[p].push_back(i);
    }
  }

  const std::uint64_t full = num_points == 64 ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << num_points) - 1;
  std::vector<Spread> out;
  std::vector<std::size_t> chosen;
  auto emit = [&]() {
    Spread s;
    s.d = f.d;
    s.N = f.N;
    for (std::size_t i : chosen) s.members.push_back(subs[i]);
    std::sort(s.members.begin(), s.members.end());
    out.push_back(std::move(s));
  };
  auto backtrack = [&](auto&& self, std::uint64_t covered) -> bool {
    if (covered == full) {
      emit();
      return out.size() >= limit;
    }
    std::size_t p = 0;
    while (covered >> p & 1) ++p;
    for (std::size_t i : candidates[p]) {
      if (masks[i] & covered) continue;
      chosen.push_back(i);
      bool done = self(self, covered | masks[i]);
      chosen.pop_back();
      if (done) return true;
    }
    return false;
  };
  if (limit > 0) backtrack(backtrack, 0);
  return out;
}

}  // namespace mublab
