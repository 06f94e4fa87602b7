#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sigtqft/bigint.hpp"

namespace sigtqft::numtheory {

/// A regular continued fraction [a0; a1, a2, ...] with a_i >= 1 for i >= 1.
///
/// Finite expansions are kept in canonical form (last term >= 2 unless the
/// expansion is just [a0]), so that rational round trips are unique.
/// Irrational inputs are represented by a term generator; no floating-point
/// value is ever attached.
class CFExpansion {
 public:
  using Generator = std::function<BigInt(std::size_t)>;  // i >= 1 -> a_i

  static CFExpansion finite(BigInt a0, std::vector<BigInt> terms);
  static CFExpansion from_generator(BigInt a0, Generator gen,
                                    std::optional<BigInt> term_bound);
  static CFExpansion all_ones();  // [0; 1, 1, 1, ...], the golden-type angle
  static CFExpansion periodic(BigInt a0, std::vector<BigInt> pattern);

  bool is_finite() const { return !gen_; }
  /// Number of partial quotients a_1..a_n for a finite expansion.
  std::size_t length() const { return terms_.size(); }
  const BigInt& a0() const { return a0_; }
  bool has_term(std::size_t i) const;
  BigInt term(std::size_t i) const;  // i >= 1
  /// sup of a_i over all i >= 1 when known (used for diophantine tail bounds).
  std::optional<BigInt> term_bound() const { return bound_; }
  /// Exact value of a finite expansion.
  Rational value() const;

 private:
  CFExpansion() = default;
  BigInt a0_ = 0;
  std::vector<BigInt> terms_;
  Generator gen_;
  std::optional<BigInt> bound_;
};

struct Convergent {
  std::size_t k = 0;
  BigInt q;  // numerator q_k
  BigInt p;  // denominator p_k (> 0 for k >= 0)
};

/// Euclidean expansion of a rational; evaluating the result reproduces r.
CFExpansion cf_expand(const Rational& r);

/// Convergents q_k/p_k for k = 0..depth via the standard recursions with
/// seeds q_0 = a_0, q_{-1} = 1, p_0 = 1, p_{-1} = 0.
/// Throws "expansion exhausted" if a finite expansion has fewer terms.
std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t depth);

/// Pair (1/(p_k(p_k+p_{k+1})), 1/(p_k p_{k+1})) bracketing |theta - q_k/p_k|.
std::pair<Rational, Rational> convergent_gap_bounds(const CFExpansion& cf,
                                                    std::size_t k);

/// Zaremba-style lower bound 4/(p_k^2 (a_{i+1}+2)^2) for the product
/// sin^2(pi n / 2p_k) sin^2(q_k n pi / p_k), where p_i <= n < p_{i+1}, i < k.
Rational zaremba_denominator_bound(const CFExpansion& cf, std::size_t k,
                                   const BigInt& n);

/// floor(m * theta) for a generator-backed or finite expansion, decided by
/// bracketing theta between consecutive convergents. Throws
/// "insufficient expansion depth" when a finite expansion cannot decide, and
/// "quantum integer vanishes" if m * theta is an exact integer.
BigInt floor_multiple(const CFExpansion& cf, const BigInt& m);

}  // namespace sigtqft::numtheory
