#include "sigtqft/verlinde.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sigtqft::verlinde {

FrobeniusAlgebra::FrobeniusAlgebra(int64_t p, int64_t q) : p_(p), q_(q) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("FrobeniusAlgebra: p must be odd and >= 3");
  if (q <= 0 || q >= p || q % 2 == 0)
    throw std::invalid_argument("FrobeniusAlgebra: q must be odd with 0 < q < p");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("FrobeniusAlgebra: gcd(q, p) != 1");
  signs_ = numtheory::make_sign_sequence(p, BigInt(q));
  factsign_.assign(static_cast<std::size_t>(p), 1);
  for (int64_t n = 1; n <= p - 1; ++n)
    factsign_[n] = factsign_[n - 1] * signs_.at(n);
  eta_.assign(static_cast<std::size_t>(p - 1), 1);
  for (int64_t j = 0; j <= p - 2; ++j)
    eta_[j] = ((j % 2 == 0) ? 1 : -1) * signs_.at(j + 1);
}

int FrobeniusAlgebra::eta_diag(int64_t j) const {
  if (j < 0 || j > p_ - 2) throw std::out_of_range("eta_diag: color out of range");
  return eta_[static_cast<std::size_t>(j)];
}

int FrobeniusAlgebra::fact_sign(int64_t n) const {
  if (n < 0 || n > p_ - 1) throw std::out_of_range("fact_sign: out of range");
  return factsign_[static_cast<std::size_t>(n)];
}

bool FrobeniusAlgebra::in_triple_set(int64_t j, int64_t k, int64_t l) const {
  if (j < 0 || k < 0 || l < 0) return false;
  if (j > p_ - 2 || k > p_ - 2 || l > p_ - 2) return false;
  if ((j + k + l) % 2 != 0) return false;
  if (j + k + l > 2 * p_ - 4) return false;
  return l <= j + k && j <= k + l && k <= j + l;
}

int FrobeniusAlgebra::omega(int64_t j, int64_t k, int64_t l) const {
  if (j < 0 || j > p_ - 2 || k < 0 || k > p_ - 2 || l < 0 || l > p_ - 2)
    throw std::out_of_range("omega: color out of range");
  if (!in_triple_set(j, k, l)) return 0;
  const int64_t s = (j + k + l) / 2;
  int sign = (s % 2 == 0) ? 1 : -1;
  sign *= factsign_[s + 1];
  sign *= factsign_[(j + k - l) / 2];
  sign *= factsign_[(j + l - k) / 2];
  sign *= factsign_[(k + l - j) / 2];
  sign *= factsign_[j] * factsign_[k] * factsign_[l];
  return sign;
}

AlgebraVector FrobeniusAlgebra::basis(int64_t j) const {
  if (j < 0 || j > p_ - 2) throw std::out_of_range("basis: color out of range");
  AlgebraVector v(dim());
  v.coords[static_cast<std::size_t>(j)] = 1;
  return v;
}

AlgebraVector FrobeniusAlgebra::multiply(const AlgebraVector& u,
                                         const AlgebraVector& v) const {
  if (u.dim() != dim() || v.dim() != dim())
    throw std::invalid_argument("multiply: dimension mismatch");
  AlgebraVector out(dim());
  for (int64_t j = 0; j <= p_ - 2; ++j) {
    if (u.coords[j] == 0) continue;
    for (int64_t k = 0; k <= p_ - 2; ++k) {
      if (v.coords[k] == 0) continue;
      const BigInt uv = u.coords[j] * v.coords[k];
      // Support: |j-k| <= l <= min(j+k, 2p-4-j-k), same parity as j+k.
      const int64_t lo = std::abs(j - k);
      const int64_t hi = std::min(j + k, 2 * p_ - 4 - j - k);
      for (int64_t l = lo; l <= hi; l += 2) {
        const int w = omega(j, k, l);
        if (w == 0) continue;
        const int c = w * eta_[static_cast<std::size_t>(l)];
        if (c > 0)
          out.coords[static_cast<std::size_t>(l)] += uv;
        else
          out.coords[static_cast<std::size_t>(l)] -= uv;
      }
    }
  }
  return out;
}

AlgebraVector FrobeniusAlgebra::omega_element() const {
  // Omega = sum_j eta_jj^{-1} e_j e_j; the basis is eta-orthogonal with
  // eta_jj = +-1, so the inverse equals eta_jj itself.
  AlgebraVector omega_el(dim());
  for (int64_t j = 0; j <= p_ - 2; ++j) {
    const AlgebraVector sq = multiply(basis(j), basis(j));
    for (std::size_t l = 0; l < dim(); ++l) {
      if (eta_[j] > 0)
        omega_el.coords[l] += sq.coords[l];
      else
        omega_el.coords[l] -= sq.coords[l];
    }
  }
  return omega_el;
}

BigInt FrobeniusAlgebra::signature_oracle(int64_t g,
                                          std::span<const int64_t> lambdas) const {
  if (g < 0) throw std::invalid_argument("signature_oracle: g >= 0");
  for (const int64_t l : lambdas)
    if (l < 0 || l > p_ - 2)
      throw std::invalid_argument("signature_oracle: color out of range");
  AlgebraVector acc = basis(0);
  if (g > 0) {
    const AlgebraVector om = omega_element();
    for (int64_t i = 0; i < g; ++i) acc = multiply(acc, om);
  }
  for (const int64_t l : lambdas) acc = multiply(acc, basis(l));
  return counit(acc);
}

BigInt sigma1_punctured(int64_t q, int64_t p, int64_t k) {
  if (k < 0) throw std::invalid_argument("sigma1_punctured: k >= 0");
  FrobeniusAlgebra alg(p, q);
  BigInt total = 0;
  for (int64_t n = k + 1; n <= p - 1 - k; ++n) {
    int prod = 1;
    for (int64_t l = 1; l <= k; ++l) prod *= alg.eps(n + l) * alg.eps(n - l);
    total += prod;
  }
  return total;
}

namespace {

// Genus-0 algebra V_theta truncated to colors 0..cap. The sign data is the
// theta-analogue of the finite case: eps_m = (-1)^floor(m*theta).
class ThetaTruncation {
 public:
  ThetaTruncation(std::vector<int> eps, int64_t cap) : cap_(cap), eps_(std::move(eps)) {
    factsign_.assign(eps_.size() + 1, 1);
    for (std::size_t n = 1; n < factsign_.size(); ++n)
      factsign_[n] = factsign_[n - 1] * eps_[n - 1];
    eta_.assign(static_cast<std::size_t>(cap_) + 1, 1);
    for (int64_t j = 0; j <= cap_; ++j)
      eta_[j] = ((j % 2 == 0) ? 1 : -1) * eps_at(j + 1);
  }

  int eps_at(int64_t m) const { return eps_.at(static_cast<std::size_t>(m - 1)); }
  int fact(int64_t n) const { return factsign_.at(static_cast<std::size_t>(n)); }

  int omega(int64_t j, int64_t k, int64_t l) const {
    if ((j + k + l) % 2 != 0) return 0;
    if (l > j + k || j > k + l || k > j + l) return 0;
    const int64_t s = (j + k + l) / 2;
    int sign = (s % 2 == 0) ? 1 : -1;
    sign *= fact(s + 1) * fact((j + k - l) / 2) * fact((j + l - k) / 2) *
            fact((k + l - j) / 2);
    sign *= fact(j) * fact(k) * fact(l);
    return sign;
  }

  std::vector<BigInt> multiply_basis(const std::vector<BigInt>& u, int64_t k) const {
    std::vector<BigInt> out(u.size(), BigInt(0));
    for (int64_t j = 0; j <= cap_; ++j) {
      if (u[j] == 0) continue;
      const int64_t lo = std::abs(j - k);
      const int64_t hi = std::min(j + k, cap_);
      for (int64_t l = lo; l <= hi; l += 2) {
        const int w = omega(j, k, l);
        if (w == 0) continue;
        if (w * eta_[static_cast<std::size_t>(l)] > 0)
          out[l] += u[j];
        else
          out[l] -= u[j];
      }
    }
    return out;
  }

 private:
  int64_t cap_;
  std::vector<int> eps_;       // eps_m for m = 1..cap+1
  std::vector<int> factsign_;  // sign of [n]! for n = 0..cap+1
  std::vector<int> eta_;       // eta_jj for j = 0..cap
};

BigInt counit_theta_impl(const std::vector<int>& eps,
                         std::span<const int64_t> lambdas, int64_t cap) {
  ThetaTruncation alg(eps, cap);
  std::vector<BigInt> acc(static_cast<std::size_t>(cap) + 1, BigInt(0));
  acc[0] = 1;
  for (const int64_t l : lambdas) acc = alg.multiply_basis(acc, l);
  return acc[0];
}

int64_t color_cap(std::span<const int64_t> lambdas) {
  int64_t cap = 0;
  for (const int64_t l : lambdas) {
    if (l < 0) throw std::invalid_argument("counit_theta: negative color");
    cap += l;
  }
  return cap;
}

}  // namespace

BigInt counit_theta(const Rational& theta, std::span<const int64_t> lambdas) {
  const int64_t cap = color_cap(lambdas);
  std::vector<int> eps(static_cast<std::size_t>(cap) + 1);
  for (int64_t m = 1; m <= cap + 1; ++m) {
    const Rational x = Rational(m) * theta;
    if (x.get_den() == 1) throw std::domain_error("quantum integer vanishes");
    eps[m - 1] = is_even(floor_of(x)) ? 1 : -1;
  }
  return counit_theta_impl(eps, lambdas, cap);
}

BigInt counit_theta(const numtheory::CFExpansion& theta,
                    std::span<const int64_t> lambdas) {
  const int64_t cap = color_cap(lambdas);
  std::vector<int> eps(static_cast<std::size_t>(cap) + 1);
  for (int64_t m = 1; m <= cap + 1; ++m)
    eps[m - 1] = is_even(numtheory::floor_multiple(theta, m)) ? 1 : -1;
  return counit_theta_impl(eps, lambdas, cap);
}

}  // namespace sigtqft::verlinde
