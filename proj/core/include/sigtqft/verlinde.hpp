#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sigtqft/bigint.hpp"
#include "sigtqft/contfrac.hpp"
#include "sigtqft/signs.hpp"

namespace sigtqft::verlinde {

/// Element of V_{q/p} in the basis e_0..e_{p-2}; coordinates are exact
/// integers (all structure constants are in {-1,0,+1}).
struct AlgebraVector {
  std::vector<BigInt> coords;

  explicit AlgebraVector(std::size_t dim) : coords(dim, BigInt(0)) {}
  std::size_t dim() const { return coords.size(); }
  bool operator==(const AlgebraVector&) const = default;
};

/// The signed Verlinde algebra V_{q/p} for odd coprime 0 < q < p.
///
/// The bilinear form eta is diagonal with eta_jj = (-1)^j eps_{j+1}; the
/// trilinear form omega is supported on the fusion-admissible triple set T_p
/// and carries the sign of a quantum-factorial ratio. The product determined
/// by omega(x,y,z) = eta(x*y, z) is commutative and associative with unit
/// e_0, and signatures of TQFT vector spaces are counit(Omega^g e_l1...e_ln).
class FrobeniusAlgebra {
 public:
  FrobeniusAlgebra(int64_t p, int64_t q);

  int64_t p() const { return p_; }
  int64_t q() const { return q_; }
  std::size_t dim() const { return static_cast<std::size_t>(p_ - 1); }

  int eps(int64_t j) const { return signs_.at(j); }      // 1 <= j <= p-1
  int eta_diag(int64_t j) const;                         // 0 <= j <= p-2
  int fact_sign(int64_t n) const;                        // sign of [n]!

  /// True iff (j,k,l) lies in T_p.
  bool in_triple_set(int64_t j, int64_t k, int64_t l) const;

  /// omega(e_j, e_k, e_l) in {-1, 0, +1}; symmetric in (j,k,l).
  int omega(int64_t j, int64_t k, int64_t l) const;

  AlgebraVector basis(int64_t j) const;
  AlgebraVector multiply(const AlgebraVector& u, const AlgebraVector& v) const;
  AlgebraVector omega_element() const;
  BigInt counit(const AlgebraVector& v) const { return v.coords.at(0); }

  /// sigma_{g,n}(q/p; lambdas) = counit(Omega^g e_{l1} ... e_{ln}),
  /// evaluated by repeated exact multiplication.
  BigInt signature_oracle(int64_t g, std::span<const int64_t> lambdas) const;

 private:
  int64_t p_, q_;
  numtheory::SignSequence signs_;
  std::vector<int> factsign_;  // factsign_[n] = sign of [n]!, 0 <= n <= p-1
  std::vector<int> eta_;       // eta_[j], 0 <= j <= p-2
};

/// sigma_1(q/p; 2k) as the explicit sign sum over n = k+1..p-1-k.
/// Equals signature_oracle(g=1, {2k}); returns 0 when the range is empty.
BigInt sigma1_punctured(int64_t q, int64_t p, int64_t k);

/// Counit of e_{l1}...e_{ln} in the genus-0 algebra V_theta (p = infinity),
/// computed in the truncation to colors 0..sum(lambdas). theta is given as an
/// exact rational (even denominator, to keep all quantum integers nonzero in
/// range) or by a continued fraction expansion.
BigInt counit_theta(const Rational& theta, std::span<const int64_t> lambdas);
BigInt counit_theta(const numtheory::CFExpansion& theta,
                    std::span<const int64_t> lambdas);

}  // namespace sigtqft::verlinde
