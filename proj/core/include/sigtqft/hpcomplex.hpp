#pragma once

#include <string>
#include <utility>

#include "sigtqft/hpreal.hpp"

namespace sigtqft {

/// Complex value whose real and imaginary parts share a mantissa width.
struct HPComplex {
  HPReal re, im;

  explicit HPComplex(long bits = 128) : re(bits), im(bits) {}
  HPComplex(HPReal r, HPReal i) : re(std::move(r)), im(std::move(i)) {}
  static HPComplex from_double(double r, double i, long bits) {
    return {HPReal::from_double(r, bits), HPReal::from_double(i, bits)};
  }

  long bits() const { return std::min(re.bits(), im.bits()); }

  HPComplex operator+(const HPComplex& o) const { return {re + o.re, im + o.im}; }
  HPComplex operator-(const HPComplex& o) const { return {re - o.re, im - o.im}; }
  HPComplex operator-() const { return {-re, -im}; }
  HPComplex operator*(const HPComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  HPComplex operator*(const HPReal& s) const { return {re * s, im * s}; }
  HPComplex operator/(const HPComplex& o) const {
    const HPReal d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }

  HPComplex conj() const { return {re, -im}; }
  HPReal abs2() const { return re * re + im * im; }
  HPReal abs() const { return sigtqft::sqrt(abs2()); }
  /// Principal argument in (-pi, pi].
  HPReal arg() const { return atan2(im, re); }

  std::string str(long digits = 0) const {
    return "(" + re.str(digits) + ", " + im.str(digits) + ")";
  }
};

/// e^{i x} = (cos x, sin x).
inline HPComplex exp_i(const HPReal& x) { return {cos(x), sin(x)}; }

/// Complex exponential.
inline HPComplex exp(const HPComplex& z) {
  const HPReal m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

/// Principal square root (sqrt(1) = 1; real part >= 0).
inline HPComplex sqrt(const HPComplex& z) {
  const HPReal r = z.abs();
  if (r.sign() == 0) return HPComplex(z.bits());
  const HPReal half_arg = z.arg() / 2;
  const HPReal s = sqrt(r);
  return {s * cos(half_arg), s * sin(half_arg)};
}

}  // namespace sigtqft
