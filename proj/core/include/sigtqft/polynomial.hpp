#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "sigtqft/bigint.hpp"

namespace sigtqft::polytrace {

/// Dense polynomial with arbitrary-precision integer coefficients.
/// Canonical form: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient array and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<int64_t> coeffs);

  static IntPolynomial constant(BigInt c);
  static IntPolynomial x();

  int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const BigInt& coeff(int64_t k) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const BigInt& s) const;
  bool operator==(const IntPolynomial&) const = default;

  IntPolynomial derivative() const;

  /// Remainder of division by a monic divisor; exact over the integers.
  IntPolynomial mod_monic(const IntPolynomial& q) const;

  /// Largest coefficient size in bits (0 for the zero polynomial).
  int64_t max_coeff_bits() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

inline IntPolynomial mulmod(const IntPolynomial& a, const IntPolynomial& b,
                            const IntPolynomial& q) {
  return (a * b).mod_monic(q);
}

}  // namespace sigtqft::polytrace
