#pragma once

#include "f4rigid/linalg.hpp"
#include "f4rigid/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace f4rigid {

struct RootDatum;
struct WeylElement;
struct WeylGroup;

/// Sparse integer-coefficient polynomial in the indeterminate q.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(const BigInt& constant);
  static IntPolynomial monomial(int degree, const BigInt& coeff = BigInt(1));
  static IntPolynomial from_terms(const std::vector<std::pair<int, BigInt>>& terms);
  /// q^d - 1
  static IntPolynomial q_power_minus_one(int d);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  BigInt coeff(int degree) const;
  BigInt leading_coeff() const;
  bool is_monic() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial operator-() const;
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial& o) const { return terms_ == o.terms_; }

  BigInt eval(const BigInt& point) const;

  /// Quotient when the division is exact, nullopt otherwise. Divisor must
  /// have an invertible (i.e. +-1) leading coefficient.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

  /// Normalized sparse terms, no zero coefficients.
  const std::map<int, BigInt>& terms() const { return terms_; }

  std::string to_string() const;

 private:
  std::map<int, BigInt> terms_;
  void trim();
};

/// n-th cyclotomic polynomial over Z.
IntPolynomial cyclotomic_poly(int n);

/// det(q*I - m), expanded over the polynomial ring.
IntPolynomial char_poly(const IMat& m);

/// Product form kept for display; expanded form is the equality currency.
struct FactoredPoly {
  std::vector<std::pair<IntPolynomial, int>> factors;  // (base, multiplicity)
  IntPolynomial expand() const;
  std::string to_string() const;
};

/// Splits p into cyclotomic factors Phi_d, d drawn from `orders`; nullopt when
/// p is not such a product.
std::optional<FactoredPoly> cyclotomic_factorization(const IntPolynomial& p,
                                                     const std::vector<int>& orders);

/// q^N * prod_i (q^{d_i} - 1) * (q-1)^{rank - semisimple rank},
/// N = number of positive roots, d_i the reflection degrees.
IntPolynomial group_order_poly(const RootDatum& datum);
FactoredPoly group_order_factored(const RootDatum& datum);

/// det(q - w) on Y; constant on conjugacy classes of the Weyl group.
IntPolynomial torus_order_poly(const WeylElement& w);
FactoredPoly torus_order_factored(const WeylElement& w);

/// Sum over the group of q^length(w).
IntPolynomial poincare_poly(const WeylGroup& group);

}  // namespace f4rigid
