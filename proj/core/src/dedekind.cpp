#include "sigtqft/dedekind.hpp"

#include <stdexcept>

namespace sigtqft::dedekind {

namespace {

void validate(const BigInt& q, const BigInt& p) {
  if (p <= 0) throw std::invalid_argument("dedekind: p must be positive");
  if (!coprime(q, p)) throw std::invalid_argument("dedekind: gcd(q,p) != 1");
}

}  // namespace

std::string HalfInteger::str() const {
  if (is_integer()) return BigInt(twice / 2).get_str();
  return twice.get_str() + "/2";
}

Rational dedekind_s(const BigInt& q, const BigInt& p) {
  validate(q, p);
  if (p == 1) return Rational(0);
  // ((n/p)) = (2n-p)/(2p) for 0 < n < p, so the whole sum collapses to a
  // single integer divided by 4p^2.
  const BigInt qm = floor_mod(q, p);
  if (p.fits_slong_p() && p < (BigInt(1) << 20)) {
    const int64_t pl = p.get_si();
    const int64_t ql = qm.get_si();
    int64_t m = 0;
    int64_t acc = 0;
    for (int64_t n = 1; n < pl; ++n) {
      m += ql;
      if (m >= pl) m -= pl;
      acc += (2 * n - pl) * (2 * m - pl);
    }
    return make_rational(acc, BigInt(4) * p * p);
  }
  BigInt acc = 0, m = 0;
  for (BigInt n = 1; n < p; ++n) {
    m += qm;
    if (m >= p) m -= p;
    acc += (2 * n - p) * (2 * m - p);
  }
  return make_rational(acc, BigInt(4) * p * p);
}

Rational dedekind_s_fast(BigInt q, BigInt p) {
  validate(q, p);
  // Reciprocity plus periodicity terminate like the Euclidean algorithm:
  // s(q,p) = (q/p + p/q + 1/(pq))/12 - 1/4 - s(p mod q, q).
  Rational total(0);
  int sign = 1;
  q = floor_mod(q, p);
  while (p > 1) {
    if (q == 0) break;  // p == 1 by coprimality, nothing left
    Rational recip =
        make_rational(q * q + p * p + 1, BigInt(12) * p * q) - make_rational(1, 4);
    if (sign > 0)
      total += recip;
    else
      total -= recip;
    sign = -sign;
    BigInt r = floor_mod(p, q);
    p = q;
    q = r;
  }
  return total;
}

HPReal dedekind_s_cot(int64_t q, int64_t p, long bits) {
  validate(BigInt(q), BigInt(p));
  const HPReal pi = HPReal::pi(bits);
  const HPReal base = pi / p;
  HPReal acc(bits);
  for (int64_t n = 1; n < p; ++n) {
    const int64_t m = ((n * q) % p + p) % p;
    if (m == 0) continue;
    const HPReal a = base * n;
    const HPReal b = base * m;
    acc += (cos(a) / sin(a)) * (cos(b) / sin(b));
  }
  return acc / (4 * p);
}

HalfInteger smoothed_S(const BigInt& q, const BigInt& p) {
  validate(q, p);
  if (!is_odd(q)) throw std::invalid_argument("smoothed_S: q must be odd");
  // eps_n = (-1)^{floor(nq/p)}; floor parity via residues mod 2p.
  const BigInt q2 = floor_mod(q, 2 * p);
  BigInt acc = 0, m = 0;
  if (p.fits_slong_p() && p < (BigInt(1) << 31)) {
    const int64_t pl = p.get_si();
    const int64_t ql = q2.get_si();
    int64_t sum = 0;
    int64_t r = 0;
    for (int64_t n = 1; n < pl; ++n) {
      r += ql;
      if (r >= 2 * pl) r -= 2 * pl;
      sum += (r >= pl) ? -1 : 1;
    }
    return {BigInt(sum)};
  }
  for (BigInt n = 1; n < p; ++n) {
    m += q2;
    if (m >= 2 * p) m -= 2 * p;
    acc += (m >= p) ? -1 : 1;
  }
  return {acc};
}

Rational check_smoothing(const BigInt& q, const BigInt& p) {
  const Rational S = smoothed_S(q, p).value();
  return S - Rational(4) * dedekind_s(q, 2 * p) + Rational(2) * dedekind_s(q, p);
}

Rational check_reciprocity(const BigInt& q, const BigInt& p) {
  if (q <= 0 || p <= 0)
    throw std::invalid_argument("check_reciprocity: q, p must be positive");
  const Rational lhs = dedekind_s(q, p) + dedekind_s(p, q);
  const Rational rhs =
      make_rational(q * q + p * p + 1, BigInt(12) * p * q) - make_rational(1, 4);
  return lhs - rhs;
}

Rational check_S_transform(const BigInt& q, const BigInt& p) {
  if (q <= 0 || p <= 0)
    throw std::invalid_argument("check_S_transform: q, p must be positive");
  const Rational lhs = smoothed_S(q, q + p).value() - smoothed_S(q, p).value();
  return lhs - make_rational(1, 2);
}

}  // namespace sigtqft::dedekind
