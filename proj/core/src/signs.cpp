#include "sigtqft/signs.hpp"

#include <stdexcept>

namespace sigtqft::numtheory {

int eps_sign(const BigInt& j, const BigInt& q, const BigInt& p) {
  if (p <= 0) throw std::invalid_argument("eps_sign: p must be positive");
  if (j < 1 || j >= p) throw std::invalid_argument("eps_sign: need 1 <= j <= p-1");
  if (!coprime(q, p)) throw std::domain_error("quantum integer vanishes");
  const BigInt f = floor_div(j * q, p);
  return is_even(f) ? 1 : -1;
}

int eps_sign(int64_t j, int64_t q, int64_t p) {
  if (p <= 0) throw std::invalid_argument("eps_sign: p must be positive");
  if (j < 1 || j >= p) throw std::invalid_argument("eps_sign: need 1 <= j <= p-1");
  const int64_t f = floor_div_i64(j * q, p);
  return (f % 2 == 0) ? 1 : -1;
}

SignSequence make_sign_sequence(int64_t p, const BigInt& q) {
  if (p <= 0) throw std::invalid_argument("SignSequence: p must be positive");
  if (!coprime(q, BigInt(p))) throw std::domain_error("SignSequence: gcd(q,p) != 1");
  SignSequence s;
  s.p = p;
  s.q = q;
  s.eps.assign(static_cast<std::size_t>(p), 1);
  // Incremental residues: floor(jq/p) parity flips exactly when jq mod p wraps.
  // Work with r_j = jq mod p in [0,p) and track the floor parity directly.
  const BigInt qm = floor_mod(q, BigInt(2) * p);  // keeps floor parity intact
  int64_t qq = qm.get_si();                       // 0 <= qq < 2p
  int64_t acc = 0;                                // j*qq mod 2p
  for (int64_t j = 1; j < p; ++j) {
    acc += qq;
    if (acc >= 2 * p) acc -= 2 * p;
    // floor(j*q/p) mod 2 == floor(j*qq/p) mod 2 since q == qq (mod 2p).
    s.eps[static_cast<std::size_t>(j)] = (acc >= p) ? -1 : 1;
  }
  return s;
}

}  // namespace sigtqft::numtheory
