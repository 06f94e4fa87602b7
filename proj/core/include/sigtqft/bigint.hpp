#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sigtqft {

using BigInt = mpz_class;
using Rational = mpq_class;

// Floor division rounding toward -infinity (any sign of den).
inline BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("floor_div: division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline BigInt floor_of(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// Mathematical mod: result in [0, m) for m > 0.
inline BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline int64_t floor_div_i64(int64_t num, int64_t den) {
  int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

inline bool is_odd(const BigInt& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }
inline bool is_even(const BigInt& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool coprime(const BigInt& a, const BigInt& b) { return gcd(a, b) == 1; }

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// Canonical rational num/den with den > 0 and gcd(|num|, den) = 1.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }

inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  }
}

}  // namespace sigtqft
