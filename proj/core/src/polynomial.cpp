#include "sigtqft/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigtqft::polytrace {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<int64_t> coeffs) {
  c_.reserve(coeffs.size());
  for (const int64_t v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  IntPolynomial p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::x() { return IntPolynomial({0, 1}); }

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPolynomial::coeff(int64_t k) const {
  if (k < 0 || k > degree()) return kZero;
  return c_[static_cast<std::size_t>(k)];
}

const BigInt& IntPolynomial::leading() const {
  if (c_.empty()) throw std::domain_error("leading: zero polynomial");
  return c_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      out[i + j] += c_[i] * o.c_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> out(c_);
  for (auto& v : out) v = -v;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const BigInt& s) const {
  if (s == 0) return {};
  std::vector<BigInt> out(c_);
  for (auto& v : out) v *= s;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * BigInt(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::mod_monic(const IntPolynomial& q) const {
  if (!q.is_monic())
    throw std::invalid_argument("mod_monic: divisor must be monic");
  const int64_t dq = q.degree();
  if (degree() < dq) return *this;
  std::vector<BigInt> r(c_);
  for (int64_t d = degree(); d >= dq; --d) {
    BigInt lead = std::move(r[static_cast<std::size_t>(d)]);
    r[static_cast<std::size_t>(d)] = 0;
    if (lead == 0) continue;
    const int64_t shift = d - dq;
    for (int64_t i = 0; i < dq; ++i)
      r[static_cast<std::size_t>(shift + i)] -= lead * q.coeff(i);
  }
  r.resize(static_cast<std::size_t>(dq));
  return IntPolynomial(std::move(r));
}

int64_t IntPolynomial::max_coeff_bits() const {
  std::size_t best = 0;
  for (const auto& v : c_)
    best = std::max(best, mpz_sizeinbase(v.get_mpz_t(), 2));
  return static_cast<int64_t>(c_.empty() ? 0 : best);
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int64_t k = degree(); k >= 0; --k) {
    const BigInt& a = coeff(k);
    if (a == 0) continue;
    if (!s.empty()) s += (a > 0) ? " + " : " - ";
    else if (a < 0) s += "-";
    const BigInt mag = abs(a);
    if (k == 0) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += (k == 1) ? "x" : "x^" + std::to_string(k);
    }
  }
  return s;
}

}  // namespace sigtqft::polytrace
