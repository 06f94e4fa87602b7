#pragma once

#include <string>

#include "sigtqft/bigint.hpp"
#include "sigtqft/hpreal.hpp"

namespace sigtqft::dedekind {

/// Stores 2S exactly; S(q/p) is an integer for odd p and a half-integer for
/// even p.
struct HalfInteger {
  BigInt twice;

  bool is_integer() const { return is_even(twice); }
  Rational value() const { return make_rational(twice, 2); }
  std::string str() const;
  bool operator==(const HalfInteger&) const = default;
};

/// Classical Dedekind sum s(q,p), exact, via the sawtooth form
/// sum_n ((n/p))((nq/p)). Odd in q and periodic with period p.
Rational dedekind_s(const BigInt& q, const BigInt& p);

/// Same value through the reciprocity recursion; O(log p) instead of O(p).
Rational dedekind_s_fast(BigInt q, BigInt p);

/// Floating cross-check of the defining cotangent sum at the given width.
HPReal dedekind_s_cot(int64_t q, int64_t p, long bits);

/// S(q/p) = (1/2) sum_{n=1}^{p-1} (-1)^{floor(nq/p)}; q odd, gcd(q,p)=1.
HalfInteger smoothed_S(const BigInt& q, const BigInt& p);

/// S(q/p) - 4 s(q,2p) + 2 s(q,p); identically zero.
Rational check_smoothing(const BigInt& q, const BigInt& p);

/// s(q,p) + s(p,q) - [(q/p + p/q + 1/(pq))/12 - 1/4]; identically zero.
Rational check_reciprocity(const BigInt& q, const BigInt& p);

/// S(q/(q+p)) - S(q/p) - 1/2; identically zero for positive coprime q odd.
Rational check_S_transform(const BigInt& q, const BigInt& p);

}  // namespace sigtqft::dedekind
