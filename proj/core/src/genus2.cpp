#include "sigtqft/genus2.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "sigtqft/polytrace.hpp"
#include "sigtqft/signs.hpp"

namespace sigtqft::genus2 {

namespace {

void validate_pair(int64_t p, int64_t q) {
  if (p < 3) throw std::invalid_argument("genus2: p must be >= 3");
  if (q <= 0 || q >= p) throw std::invalid_argument("genus2: need 0 < q < p");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("genus2: gcd(q,p) != 1");
}

long initial_bits(int64_t p, const TrigEvalConfig& cfg) {
  const long scale = static_cast<long>(std::ceil(6.0 * std::log2(double(p)))) + 64;
  return std::max({cfg.mantissa_bits, scale, 128L});
}

}  // namespace

int64_t sigma2_lattice(int64_t p, int64_t q) {
  validate_pair(p, q);
  if (p > 2'000'000)
    throw std::invalid_argument("sigma2_lattice: p too large for the exact sum");
  const auto signs = numtheory::make_sign_sequence(p, BigInt(q));
  std::vector<int> eps(signs.eps.begin(), signs.eps.end());
  int64_t total = 0;
  for (int64_t j = 1; j < p; ++j) {
    for (int64_t k = j; k < p; ++k) {
      // Sorted triples j <= k <= l; only l < j+k and j+k+l < 2p can bind.
      const int64_t hi = std::min(j + k - 1, 2 * p - 1 - j - k);
      int64_t l = k + ((j + k + k) % 2 == 0 ? 1 : 0);  // parity: j+k+l odd
      const int ejk = eps[j] * eps[k];
      for (; l <= hi; l += 2) {
        const int64_t mult = (j == k) ? (k == l ? 1 : 3) : (k == l ? 3 : 6);
        total += mult * ejk * eps[l];
      }
    }
  }
  return total;
}

HPReal f_term(int64_t n, int64_t p, int64_t q, const TrigEvalConfig& cfg) {
  validate_pair(p, q);
  if (n < 1 || n > p - 2 || n % 2 == 0)
    throw std::invalid_argument("f_term: need odd 1 <= n <= p-2");
  const long bits = initial_bits(p, cfg);
  const HPReal base = HPReal::pi(bits) / (2 * p);
  auto s = [&](int64_t m, int64_t weight) {
    // sin(m * pi/(2p)) with the angle reduced mod 4p before evaluation
    const int64_t r = ((m % (4 * p)) + 4 * p) % (4 * p);
    return sin(base * r) * weight;
  };
  return s((2 * q - 1) * n, 3 * p - 3) + s((2 * q - 3) * n, p + 1) +
         s((2 * q + 3) * n, p - 1) + s((2 * q + 1) * n, 3 * p + 3);
}

HPReal sigma2_trig_value(int64_t p, int64_t q, const TrigEvalConfig& cfg) {
  validate_pair(p, q);
  const long bits = initial_bits(p, cfg);
  const HPReal pi = HPReal::pi(bits);
  const HPReal base = pi / (2 * p);
  HPReal acc(bits);
  for (int64_t n = 1; n <= p - 2; n += 2) {
    HPReal f(bits);
    {
      auto term = [&](int64_t m, int64_t weight) {
        const int64_t r = ((m % (4 * p)) + 4 * p) % (4 * p);
        f += sin(base * r) * weight;
      };
      term((2 * q - 1) * n, 3 * p - 3);
      term((2 * q - 3) * n, p + 1);
      term((2 * q + 3) * n, p - 1);
      term((2 * q + 1) * n, 3 * p + 3);
    }
    const HPReal s_half = sin(base * n);                      // sin(n pi / 2p)
    const HPReal s_q = sin(base * (((2 * q * n) % (4 * p)))); // sin(q n pi / p)
    acc += f / (s_half * s_half * s_half * s_q * s_q);
  }
  const HPReal lead =
      HPReal(make_rational(BigInt(1) - BigInt(p) * p, BigInt(6) * p * p), bits);
  return lead + acc / (4 * p * p);
}

CertifiedInteger sigma2_trig(int64_t p, int64_t q, TrigEvalConfig cfg) {
  validate_pair(p, q);
  double best = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    const HPReal v = sigma2_trig_value(p, q, cfg);
    const BigInt rounded = v.round_to_integer();
    const double residual = std::fabs((v - HPReal(rounded, v.bits())).to_double());
    if (residual < 0.25) return {rounded, residual, v.bits()};
    best = std::min(best, residual);
    cfg.mantissa_bits = std::max(cfg.mantissa_bits, initial_bits(p, cfg)) * 2;
  }
  throw CertificationError(
      "sigma2_trig: sum does not certify to an integer (best residual " +
          std::to_string(best) + ")",
      best);
}

BigInt sigma2_auto(int64_t p, int64_t q) {
  validate_pair(p, q);
  const bool odd_pair = (p % 2 == 1) && (q % 2 == 1);
  if (odd_pair) {
    if (p <= 2000) return polytrace::sigma_g_fast(p, q, 2);
    return sigma2_trig(p, q).value;
  }
  // Mixed parity: the trig expression is generally not integer-valued, so
  // the literal sign sum is the defining (and certifiable) computation.
  return BigInt(sigma2_lattice(p, q));
}

}  // namespace sigtqft::genus2
