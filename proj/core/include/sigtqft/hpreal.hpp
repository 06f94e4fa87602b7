#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "sigtqft/bigint.hpp"

namespace sigtqft {

/// Binary floating value with a configurable mantissa width (in bits).
/// Binary operations produce a result at the minimum width of the operands;
/// exact integer/rational operands adopt the other side's width.
class HPReal {
 public:
  static constexpr long kMinBits = 64;

  explicit HPReal(long bits = 128);
  HPReal(long long value, long bits);
  HPReal(const BigInt& value, long bits);
  HPReal(const Rational& value, long bits);
  static HPReal from_double(double v, long bits);
  static HPReal pi(long bits);

  HPReal(const HPReal& o);
  HPReal(HPReal&& o) noexcept;
  HPReal& operator=(const HPReal& o);
  HPReal& operator=(HPReal&& o) noexcept;
  ~HPReal();

  long bits() const { return bits_; }
  /// Copy rounded to a different mantissa width.
  HPReal with_bits(long bits) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  HPReal operator+(const HPReal& o) const;
  HPReal operator-(const HPReal& o) const;
  HPReal operator*(const HPReal& o) const;
  HPReal operator/(const HPReal& o) const;
  HPReal operator-() const;
  HPReal& operator+=(const HPReal& o);
  HPReal& operator-=(const HPReal& o);
  HPReal& operator*=(const HPReal& o);

  HPReal operator+(long long s) const;
  HPReal operator-(long long s) const;
  HPReal operator*(long long s) const;
  HPReal operator/(long long s) const;

  int cmp(const HPReal& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const HPReal& o) const { return cmp(o) < 0; }
  bool operator<=(const HPReal& o) const { return cmp(o) <= 0; }
  bool operator>(const HPReal& o) const { return cmp(o) > 0; }
  bool operator>=(const HPReal& o) const { return cmp(o) >= 0; }
  bool operator==(const HPReal& o) const { return cmp(o) == 0; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  BigInt round_to_integer() const;  // nearest, ties to even
  std::string str(long digits = 0) const;

  friend HPReal sin(const HPReal& x);
  friend HPReal cos(const HPReal& x);
  friend HPReal exp(const HPReal& x);
  friend HPReal log(const HPReal& x);
  friend HPReal sqrt(const HPReal& x);
  friend HPReal abs(const HPReal& x);
  friend HPReal atan2(const HPReal& y, const HPReal& x);
  /// x * 2^e, exact.
  friend HPReal ldexp2(const HPReal& x, long e);

 private:
  mpfr_t v_;
  long bits_;
};

HPReal sin(const HPReal& x);
HPReal cos(const HPReal& x);
HPReal exp(const HPReal& x);
HPReal log(const HPReal& x);
HPReal sqrt(const HPReal& x);
HPReal abs(const HPReal& x);
HPReal atan2(const HPReal& y, const HPReal& x);
HPReal ldexp2(const HPReal& x, long e);

}  // namespace sigtqft
