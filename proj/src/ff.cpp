#include "mublab/ff.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mublab {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

void require_prime_modulus(int d) {
  if (!is_prime(d) || d > kMaxModulus) {
    throw std::invalid_argument("modulus must be a prime <= " +
                                std::to_string(kMaxModulus) + ", got " +
                                std::to_string(d));
  }
}

int fp_add(int x, int y, int d) {
  int s = x + y;
  return s >= d ? s - d : s;
}

int fp_sub(int x, int y, int d) {
  int s = x - y;
  return s < 0 ? s + d : s;
}

int fp_neg(int x, int d) { return x == 0 ? 0 : d - x; }

int fp_mul(int x, int y, int d) { return x * y % d; }

int fp_pow(int x, std::int64_t e, int d) {
  int r = 1 % d;
  int base = x;
  while (e > 0) {
    if (e & 1) r = fp_mul(r, base, d);
    base = fp_mul(base, base, d);
    e >>= 1;
  }
  return r;
}

int fp_inv(int x, int d) {
  if (x == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(d));
  return fp_pow(x, d - 2, d);
}

int fp_reduce(std::int64_t x, int d) {
  std::int64_t r = x % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

FpElement::FpElement(std::int64_t value, int modulus) : modulus_(modulus) {
  require_prime_modulus(modulus);
  value_ = fp_reduce(value, modulus);
}

namespace {
void require_same_modulus(const FpElement& a, const FpElement& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("modulus mismatch: F_" + std::to_string(a.modulus()) +
                                " vs F_" + std::to_string(b.modulus()));
  }
}
}  // namespace

FpElement FpElement::operator+(const FpElement& rhs) const {
  require_same_modulus(*this, rhs);
  return FpElement(fp_add(value_, rhs.value_, modulus_), modulus_);
}

FpElement FpElement::operator-(const FpElement& rhs) const {
  require_same_modulus(*this, rhs);
  return FpElement(fp_sub(value_, rhs.value_, modulus_), modulus_);
}

FpElement FpElement::operator*(const FpElement& rhs) const {
  require_same_modulus(*this, rhs);
  return FpElement(fp_mul(value_, rhs.value_, modulus_), modulus_);
}

FpElement FpElement::operator-() const { return FpElement(fp_neg(value_, modulus_), modulus_); }

FpElement FpElement::inverse() const { return FpElement(fp_inv(value_, modulus_), modulus_); }

FpVector::FpVector(int d, std::vector<int> coords) : d(d), coords(std::move(coords)) {
  require_prime_modulus(d);
  for (int& c : this->coords) c = fp_reduce(c, d);
}

bool FpVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

FpVector operator+(const FpVector& u, const FpVector& v) {
  if (u.d != v.d || u.coords.size() != v.coords.size()) {
    throw std::invalid_argument("vector shape/modulus mismatch");
  }
  FpVector r = u;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    r.coords[i] = fp_add(r.coords[i], v.coords[i], u.d);
  }
  return r;
}

FpVector scale(int c, const FpVector& v) {
  FpVector r = v;
  c = fp_reduce(c, v.d);
  for (int& x : r.coords) x = fp_mul(c, x, v.d);
  return r;
}

namespace {

// Polynomials are constant-first coefficient vectors; trailing zeros allowed.
int poly_degree(const std::vector<int>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] != 0) return i;
  }
  return -1;
}

// Remainder of a mod b over F_d; b monic of degree >= 1.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int d) {
  int db = poly_degree(b);
  for (int i = poly_degree(a); i >= db; --i) {
    int c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      a[i - db + j] = fp_sub(a[i - db + j], fp_mul(c, b[j], d), d);
    }
  }
  a.resize(db);
  return a;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& modulus, int d) {
  std::vector<int> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = fp_add(prod[i + j], fp_mul(a[i], b[j], d), d);
    }
  }
  return poly_mod(std::move(prod), modulus, d);
}

}  // namespace

bool ExtField::is_irreducible(const std::vector<int>& poly, int d) {
  int n = poly_degree(poly);
  if (n < 1) return false;
  if (poly[n] != 1) return false;
  if (n == 1) return true;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (int m = 1; 2 * m <= n; ++m) {
    std::vector<int> div(m + 1, 0);
    div[m] = 1;
    std::int64_t count = 1;
    for (int i = 0; i < m; ++i) count *= d;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      std::int64_t v = idx;
      for (int i = 0; i < m; ++i) {
        div[i] = static_cast<int>(v % d);
        v /= d;
      }
      if (poly_degree(poly_mod(poly, div, d)) < 0) return false;
    }
  }
  return true;
}

ExtField::ExtField(int d, int N) : d_(d), degree_(N) {
  require_prime_modulus(d);
  if (N < 1) throw std::invalid_argument("extension degree must be >= 1");
  // Lexicographically smallest monic irreducible, constant term first.
  modulus_.assign(N + 1, 0);
  modulus_[N] = 1;
  if (N == 1) {
    // F_d itself: modulus t, elements are constants.
    return;
  }
  std::int64_t count = 1;
  for (int i = 0; i < N; ++i) count *= d;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::int64_t v = idx;
    // idx enumerates tuples (c_0, ..., c_{N-1}) in lex order, c_0 most
    // significant.
    for (int i = N - 1; i >= 0; --i) {
      modulus_[i] = static_cast<int>(v % d);
      v /= d;
    }
    if (is_irreducible(modulus_, d)) return;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::int64_t ExtField::size() const {
  std::int64_t s = 1;
  for (int i = 0; i < degree_; ++i) s *= d_;
  return s;
}

ExtField::Element ExtField::zero() const { return Element(degree_, 0); }

ExtField::Element ExtField::one() const {
  Element e(degree_, 0);
  e[0] = 1;
  return e;
}

ExtField::Element ExtField::add(const Element& a, const Element& b) const {
  Element r(degree_);
  for (int i = 0; i < degree_; ++i) r[i] = fp_add(a[i], b[i], d_);
  return r;
}

ExtField::Element ExtField::sub(const Element& a, const Element& b) const {
  Element r(degree_);
  for (int i = 0; i < degree_; ++i) r[i] = fp_sub(a[i], b[i], d_);
  return r;
}

ExtField::Element ExtField::mul(const Element& a, const Element& b) const {
  Element r = poly_mul_mod(a, b, modulus_, d_);
  r.resize(degree_, 0);
  return r;
}

ExtField::Element ExtField::pow(const Element& a, std::int64_t e) const {
  Element r = one();
  Element base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

ExtField::Element ExtField::inv(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in extension field");
  return pow(a, size() - 2);
}

bool ExtField::is_zero(const Element& a) const {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

int ExtField::trace(const Element& a) const {
  Element acc = zero();
  Element conj = a;
  for (int i = 0; i < degree_; ++i) {
    acc = add(acc, conj);
    conj = pow(conj, d_);
  }
  for (int i = 1; i < degree_; ++i) {
    if (acc[i] != 0) throw std::logic_error("trace did not land in the prime field");
  }
  return acc[0];
}

std::vector<ExtField::Element> ExtField::all_elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(size()));
  Element e = zero();
  std::int64_t count = size();
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::int64_t v = idx;
    for (int i = degree_ - 1; i >= 0; --i) {
      e[i] = static_cast<int>(v % d_);
      v /= d_;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace mublab
