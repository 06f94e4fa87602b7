#include "sigtqft/polytrace.hpp"

#include <numeric>
#include <stdexcept>

#include "sigtqft/signs.hpp"

namespace sigtqft::polytrace {

namespace {

void validate_pq(int64_t p, int64_t q) {
  if (p < 3 || p % 2 == 0 || q <= 0 || q >= p || q % 2 == 0 ||
      std::gcd(p, q) != 1)
    throw std::invalid_argument("polytrace: need odd coprime 0 < q < p");
}

constexpr int64_t kMaxGenus = 10;

void validate_genus(int64_t g) {
  if (g < 1 || g > kMaxGenus)
    throw std::invalid_argument("polytrace: genus must be in 1..10");
}

// Omega as a polynomial: (-iota * P') mod P.
IntPolynomial omega_poly(const CharpolyPair& cp) {
  return ((-cp.iota) * cp.P.derivative()).mod_monic(cp.P);
}

}  // namespace

std::vector<int> tridiag_superdiagonal(int64_t p, int64_t q) {
  validate_pq(p, q);
  std::vector<int> c(static_cast<std::size_t>(p - 2));
  for (int64_t i = 0; i + 2 <= p - 1; ++i) {
    const int e1 = numtheory::eps_sign(i + 1, q, p);
    const int e2 = numtheory::eps_sign(i + 2, q, p);
    c[static_cast<std::size_t>(i)] = -e1 * e2;
  }
  return c;
}

CharpolyPair charpoly_pair(int64_t p, int64_t q) {
  const std::vector<int> c = tridiag_superdiagonal(p, q);
  IntPolynomial d_prev = IntPolynomial::constant(1);  // D_0
  IntPolynomial d_cur = IntPolynomial::x();           // D_1
  const IntPolynomial x = IntPolynomial::x();
  for (int64_t k = 2; k <= p - 1; ++k) {
    IntPolynomial d_next = x * d_cur;
    if (c[static_cast<std::size_t>(k - 2)] > 0)
      d_next = d_next - d_prev;
    else
      d_next = d_next + d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  // Loop invariant leaves D_{p-1} in d_cur and D_{p-2} in d_prev.
  return {std::move(d_cur), std::move(d_prev)};
}

BigInt poly_mod_trace(const IntPolynomial& A, const IntPolynomial& Q) {
  if (!Q.is_monic() || Q.degree() < 1)
    throw std::invalid_argument("poly_mod_trace: Q must be monic of degree >= 1");
  const int64_t n = Q.degree();
  IntPolynomial r = A.mod_monic(Q);  // x^0 * A mod Q
  BigInt trace = r.coeff(0);
  const IntPolynomial x = IntPolynomial::x();
  for (int64_t k = 1; k < n; ++k) {
    r = (x * r).mod_monic(Q);
    trace += r.coeff(k);
  }
  return trace;
}

BigInt sigma_g_fast(int64_t p, int64_t q, int64_t g) {
  return sigma_g_fast_stats(p, q, g).value;
}

SigmaFastStats sigma_g_fast_stats(int64_t p, int64_t q, int64_t g) {
  validate_pq(p, q);
  validate_genus(g);
  const CharpolyPair cp = charpoly_pair(p, q);
  const IntPolynomial om = omega_poly(cp);
  IntPolynomial acc = IntPolynomial::constant(1);
  int64_t peak = om.max_coeff_bits();
  for (int64_t i = 1; i < g; ++i) {
    acc = mulmod(acc, om, cp.P);
    peak = std::max(peak, acc.max_coeff_bits());
  }
  return {poly_mod_trace(acc, cp.P), peak};
}

IntPolynomial basis_poly(int64_t j, int64_t p, int64_t q) {
  validate_pq(p, q);
  if (j < 0 || j > p - 2)
    throw std::invalid_argument("basis_poly: color out of range");
  if (j == 0) return IntPolynomial::constant(1);
  const std::vector<int> c = tridiag_superdiagonal(p, q);
  IntPolynomial e_prev = IntPolynomial::constant(1);
  IntPolynomial e_cur = IntPolynomial::x();
  const IntPolynomial x = IntPolynomial::x();
  for (int64_t i = 1; i < j; ++i) {
    IntPolynomial e_next = x * e_cur;
    if (c[static_cast<std::size_t>(i - 1)] > 0)
      e_next = e_next - e_prev;
    else
      e_next = e_next + e_prev;
    e_prev = std::move(e_cur);
    e_cur = std::move(e_next);
  }
  return e_cur;
}

BigInt sigma_gn_fast(int64_t p, int64_t q, int64_t g,
                     std::span<const int64_t> lambdas) {
  validate_pq(p, q);
  validate_genus(g);
  const CharpolyPair cp = charpoly_pair(p, q);
  IntPolynomial acc = IntPolynomial::constant(1);
  if (g > 1) {
    const IntPolynomial om = omega_poly(cp);
    for (int64_t i = 1; i < g; ++i) acc = mulmod(acc, om, cp.P);
  }
  for (const int64_t l : lambdas) {
    if (l < 0 || l > p - 2)
      throw std::invalid_argument("sigma_gn_fast: color out of range");
    if (l == 0) continue;  // E_0 = 1
    acc = mulmod(acc, basis_poly(l, p, q), cp.P);
  }
  return poly_mod_trace(acc, cp.P);
}

std::vector<BigInt> to_basis_coords(const IntPolynomial& A, int64_t p, int64_t q) {
  validate_pq(p, q);
  if (A.degree() > p - 2)
    throw std::invalid_argument("to_basis_coords: degree exceeds p-2");
  std::vector<BigInt> coords(static_cast<std::size_t>(p - 1), BigInt(0));
  IntPolynomial rem = A;
  // E_j is monic of degree j, so peel leading coefficients top-down.
  for (int64_t j = p - 2; j >= 0; --j) {
    if (rem.degree() < j) continue;
    const BigInt cj = rem.coeff(j);
    if (cj == 0) continue;
    coords[static_cast<std::size_t>(j)] = cj;
    rem = rem - basis_poly(j, p, q) * cj;
  }
  if (!rem.is_zero())
    throw std::logic_error("to_basis_coords: nonzero remainder");
  return coords;
}

}  // namespace sigtqft::polytrace
