#pragma once

#include "f4rigid/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace f4rigid {

/// Element of the cyclotomic field Q(zeta_n), kept in the normal form of a
/// polynomial in zeta_n reduced modulo the n-th cyclotomic polynomial (degree
/// < phi(n)). Mixed-conductor arithmetic promotes into the lcm conductor.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1) {}
  explicit Cyclotomic(const Rat& value);
  explicit Cyclotomic(std::int64_t value) : Cyclotomic(Rat(value)) {}

  /// zeta_conductor^exponent
  static Cyclotomic root_of_unity(int conductor, std::int64_t exponent);
  /// Sum of coeff * zeta_conductor^exponent terms; exponents may be unreduced.
  static Cyclotomic from_terms(int conductor,
                               const std::vector<std::pair<std::int64_t, Rat>>& terms);

  int conductor() const { return conductor_; }
  /// Reduced coefficients on 1, zeta, ..., trailing zeros trimmed.
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }
  Rat to_rational() const;  // throws when not rational

  Cyclotomic conj() const;  // complex conjugation, zeta -> zeta^(n-1)
  Cyclotomic promoted(int new_conductor) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic scaled(const Rat& factor) const;
  Cyclotomic divided(const Rat& divisor) const;  // throws on zero divisor
  bool operator==(const Cyclotomic& o) const;

  std::string to_string() const;

 private:
  int conductor_;
  std::vector<Rat> coeffs_;
  void reduce();
};

int euler_phi(int n);

}  // namespace f4rigid
