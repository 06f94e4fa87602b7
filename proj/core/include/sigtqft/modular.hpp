#pragma once

#include <cstdint>
#include <variant>

#include "sigtqft/bigint.hpp"
#include "sigtqft/contfrac.hpp"
#include "sigtqft/hpcomplex.hpp"

namespace sigtqft::modular {

/// sigma_k(n) = sum of d^k over divisors d of n; exact, k may be negative.
Rational divisor_sigma(int64_t k, int64_t n);

/// Dedekind eta(tau) = e^{i pi tau/12} prod (1 - e^{2 pi i n tau}),
/// truncated once the factors are below 2^{-B-32}.
HPComplex dedekind_eta(const HPComplex& tau, long bits);

/// theta(tau) = sum_{n in Z} e^{pi i n^2 tau}, symmetric truncation.
HPComplex jacobi_theta(const HPComplex& tau, long bits);

/// g(tau) = eta(tau)^2 / eta(2 tau); equals theta(2 tau - 1) on H.
HPComplex g_function(const HPComplex& tau, long bits);

/// -(2/pi) times the continuous argument of g(q/2p + it) at t = t_min,
/// tracked from t = 10 downward with geometric steps kept under pi/4 of
/// phase change each (adaptively refined). Converges to S(q/p) as t -> 0.
HPReal arg_g_boundary(int64_t q, int64_t p, double t_min, long bits);

struct EichlerResult {
  HPComplex value;
  HPReal tail;  // geometric bound on the truncated part
};

/// Eichler integral G(tau) = (i pi)^{-3} sum over odd n of
/// sigma_{-3}(n) e^{i pi n tau}, summed to n <= n_terms.
EichlerResult eichler_G(const HPComplex& tau, int64_t n_terms, long bits);

struct TailBound {
  HPReal value;
  int64_t n_truncated = 0;
};

struct LambdaResult {
  HPReal value;
  TailBound tail;
};

/// Lambda(theta) = (16/pi^3) sum over odd n of 1/(n^3 sin(n pi theta)),
/// truncated with a certified tail below eps_target.
///
/// Rational theta must have an even denominator (the sine then never
/// vanishes and admits the uniform bound sin(pi/b)). For a continued
/// fraction the per-term bound comes from the Lagrange inequality through
/// the convergent bracketing each n, which requires a known bound on the
/// partial quotients.
LambdaResult lambda_eval(const Rational& theta, double eps_target, long bits);
LambdaResult lambda_eval(const numtheory::CFExpansion& theta, double eps_target,
                         long bits);

/// Angle argument for Lambda and its transform: an exact rational or a
/// continued fraction expansion.
struct ThetaSpec {
  std::variant<Rational, numtheory::CFExpansion> v;

  static ThetaSpec rational(Rational r) { return {std::move(r)}; }
  static ThetaSpec continued_fraction(numtheory::CFExpansion cf) {
    return {std::move(cf)};
  }
};

LambdaResult lambda_eval(const ThetaSpec& theta, double eps_target, long bits);

/// G(tau) - G(tau/(2tau+1)) (2tau+1)^2 - (2tau^2+2tau+1)/32; identically
/// zero up to series truncation.
HPComplex period_residual(const HPComplex& tau, int64_t n_terms, long bits);

/// Lambda(theta/(2theta+1)) (2theta+1)^2 - Lambda(theta) - (2theta^2+2theta+1).
HPReal lambda_transform_residual(const ThetaSpec& theta, double eps, long bits);

}  // namespace sigtqft::modular
