#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sigtqft/polynomial.hpp"

namespace sigtqft::polytrace {

/// Super-diagonal signs c_i = (-1)^{1 + floor((i+1)q/p) + floor((i+2)q/p)}
/// of the (p-1)x(p-1) sign matrix whose sub-diagonal is all ones. The matrix
/// is the multiplication-by-e_1 operator of V_{q/p} in the standard basis.
std::vector<int> tridiag_superdiagonal(int64_t p, int64_t q);

struct CharpolyPair {
  IntPolynomial P;     // charpoly of the full matrix, monic of degree p-1
  IntPolynomial iota;  // charpoly of the leading (p-2)x(p-2) block
};

/// Characteristic polynomials via the three-term tridiagonal recurrence
/// D_k = x D_{k-1} - c_{k-2} D_{k-2}, D_0 = 1, D_1 = x.
CharpolyPair charpoly_pair(int64_t p, int64_t q);

/// Trace of the multiplication-by-A map on QQ[x]/Q for monic Q:
/// sum over k of the x^k-coefficient of x^k A mod Q.
BigInt poly_mod_trace(const IntPolynomial& A, const IntPolynomial& Q);

/// sigma_g(q/p) = trace of Omega^{g-1} on QQ[x]/P, with the handle element
/// realized as the polynomial (-iota * P') mod P. Requires 1 <= g <= 10.
BigInt sigma_g_fast(int64_t p, int64_t q, int64_t g);

/// Polynomial representative E_j of the basis vector e_j under x <-> e_1:
/// E_0 = 1, E_1 = x, E_{i+1} = x E_i - c_{i-1} E_{i-1}.
IntPolynomial basis_poly(int64_t j, int64_t p, int64_t q);

/// sigma_{g,n}(q/p; lambdas) = trace of Omega^{g-1} E_{l1} ... E_{ln} mod P.
BigInt sigma_gn_fast(int64_t p, int64_t q, int64_t g,
                     std::span<const int64_t> lambdas);

struct SigmaFastStats {
  BigInt value;
  int64_t max_coeff_bits = 0;  // peak coefficient size seen while reducing
};

SigmaFastStats sigma_g_fast_stats(int64_t p, int64_t q, int64_t g);

/// Coordinates of A (deg <= p-2) in the triangular basis E_0..E_{p-2}.
std::vector<BigInt> to_basis_coords(const IntPolynomial& A, int64_t p, int64_t q);

}  // namespace sigtqft::polytrace
