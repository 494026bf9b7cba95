#pragma once

#include <cstdint>
#include <vector>

namespace mublab {

// Largest prime modulus accepted anywhere in the library. Everything is
// desk-scale machine arithmetic with explicit reduction.
inline constexpr int kMaxModulus = 97;

bool is_prime(int n);

// Throws std::invalid_argument unless d is a prime <= kMaxModulus.
void require_prime_modulus(int d);

// Raw mod-d helpers. Inputs must already be reduced to [0, d).
int fp_add(int x, int y, int d);
int fp_sub(int x, int y, int d);
int fp_neg(int x, int d);
int fp_mul(int x, int y, int d);
int fp_pow(int x, std::int64_t e, int d);
int fp_inv(int x, int d);  // throws std::domain_error on x == 0
int fp_reduce(std::int64_t x, int d);

/// An element of the prime field F_d. The modulus travels with the value and
/// mixed-modulus arithmetic throws.
class FpElement {
 public:
  FpElement(std::int64_t value, int modulus);

  int value() const { return value_; }
  int modulus() const { return modulus_; }

  FpElement operator+(const FpElement& rhs) const;
  FpElement operator-(const FpElement& rhs) const;
  FpElement operator*(const FpElement& rhs) const;
  FpElement operator-() const;
  FpElement inverse() const;

  bool operator==(const FpElement&) const = default;

 private:
  int value_;
  int modulus_;
};

/// Coordinate vector over F_d; all coordinates share one modulus.
struct FpVector {
  int d = 2;
  std::vector<int> coords;

  FpVector() = default;
  FpVector(int d, std::vector<int> coords);

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
  bool operator==(const FpVector&) const = default;
};

FpVector operator+(const FpVector& u, const FpVector& v);
FpVector scale(int c, const FpVector& v);

/// The extension field F_{d^N} presented as F_d[t]/(f) with f the
/// lexicographically smallest monic irreducible of degree N (coefficient
/// tuples compared constant term first). Elements are length-N coefficient
/// vectors in the basis 1, t, ..., t^{N-1}.
class ExtField {
 public:
  using Element = std::vector<int>;

  ExtField(int d, int N);

  int d() const { return d_; }
  int degree() const { return degree_; }
  std::int64_t size() const;  // d^N

  // Length N+1, constant term first, leading coefficient 1.
  const std::vector<int>& modulus_polynomial() const { return modulus_; }

  Element zero() const;
  Element one() const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::int64_t e) const;
  Element inv(const Element& a) const;  // throws std::domain_error on zero

  bool is_zero(const Element& a) const;

  // Tr(x) = sum of the Frobenius conjugates x^{d^i}, i = 0..N-1; the result
  // lies in the prime field and is returned as an integer in [0, d).
  int trace(const Element& a) const;

  // All d^N elements in lexicographic coefficient order (constant term is the
  // most significant position, matching the modulus-polynomial ordering).
  std::vector<Element> all_elements() const;

  // Monic polynomial given constant-first coefficients; irreducibility over
  // F_d by trial division.
  static bool is_irreducible(const std::vector<int>& poly, int d);

 private:
  int d_;
  int degree_;
  std::vector<int> modulus_;
};

}  // namespace mublab
