#pragma once

#include <cstdint>
#include <vector>

#include "sigtqft/bigint.hpp"

namespace sigtqft::numtheory {

/// eps_j = (-1)^floor(jq/p), the sign of the quantum integer [j] at
/// zeta = e^{i pi q/p}. Integer arithmetic only; mathematical floor, so
/// negative q is supported.
int eps_sign(const BigInt& j, const BigInt& q, const BigInt& p);

/// Fast overload for machine-size inputs (j*q must fit in int64).
int eps_sign(int64_t j, int64_t q, int64_t p);

/// The full sequence eps_1..eps_{p-1} for a coprime pair (q, p).
/// For odd q the sequence satisfies eps_{p-k} = eps_k.
struct SignSequence {
  int64_t p = 0;
  BigInt q;
  std::vector<int> eps;  // eps[j] for 1 <= j <= p-1; eps[0] unused (=+1)

  int at(int64_t j) const { return eps[static_cast<std::size_t>(j)]; }
};

SignSequence make_sign_sequence(int64_t p, const BigInt& q);

}  // namespace sigtqft::numtheory
