#include "sigtqft/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sigtqft::modular {

namespace {

constexpr long kGuardBits = 32;

void require_upper_half(const HPComplex& tau) {
  if (tau.im.sign() <= 0)
    throw std::invalid_argument("modular: tau must satisfy Im(tau) > 0");
}

Rational rat_pow(const BigInt& base, int64_t k) {
  BigInt mag;
  mpz_pow_ui(mag.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::llabs(k)));
  if (k >= 0) return Rational(mag);
  return make_rational(1, mag);
}

}  // namespace

Rational divisor_sigma(int64_t k, int64_t n) {
  if (n < 1) throw std::invalid_argument("divisor_sigma: n >= 1");
  Rational total(0);
  for (int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += rat_pow(BigInt(d), k);
    const int64_t e = n / d;
    if (e != d) total += rat_pow(BigInt(e), k);
  }
  return total;
}

HPComplex dedekind_eta(const HPComplex& tau, long bits) {
  require_upper_half(tau);
  const long w = bits + kGuardBits;
  const HPReal pi = HPReal::pi(w);
  const HPComplex t = {tau.re.with_bits(w), tau.im.with_bits(w)};
  // q = e^{2 pi i tau}; |q| = e^{-2 pi Im tau}.
  const HPComplex q = exp(HPComplex(-(pi * 2) * t.im, (pi * 2) * t.re));
  const double log2_absq = -2.0 * M_PI * t.im.to_double() / M_LN2;
  const int64_t n_max =
      std::max<int64_t>(1, static_cast<int64_t>(std::ceil(-(bits + kGuardBits) / log2_absq)) + 1);
  HPComplex prod = {HPReal(1, w), HPReal(0, w)};
  HPComplex qn = {HPReal(1, w), HPReal(0, w)};
  const HPComplex one = {HPReal(1, w), HPReal(0, w)};
  for (int64_t n = 1; n <= n_max; ++n) {
    qn = qn * q;
    prod = prod * (one - qn);
  }
  const HPComplex phase = exp(HPComplex(-pi * t.im / 12, pi * t.re / 12));
  const HPComplex out = phase * prod;
  return {out.re.with_bits(bits), out.im.with_bits(bits)};
}

HPComplex jacobi_theta(const HPComplex& tau, long bits) {
  require_upper_half(tau);
  const long w = bits + kGuardBits;
  const HPReal pi = HPReal::pi(w);
  const HPComplex t = {tau.re.with_bits(w), tau.im.with_bits(w)};
  // w1 = e^{i pi tau}; terms w1^{n^2} with symmetric doubling.
  const HPComplex w1 = exp(HPComplex(-pi * t.im, pi * t.re));
  const HPComplex w2 = w1 * w1;
  HPComplex sum = {HPReal(1, w), HPReal(0, w)};
  HPComplex term = w1;        // w1^{n^2} for n = 1
  HPComplex odd_power = w1;   // w1^{2n-1}
  const HPReal cutoff = ldexp2(HPReal(1, w), -(bits + kGuardBits));
  // 1/(1-|w1|) enters the tail; fold it into the cutoff test.
  const HPReal gap = HPReal(1, w) - w1.abs();
  for (int64_t n = 1;; ++n) {
    sum = sum + term * HPReal(2, w);
    if (term.abs() < cutoff * gap) break;
    if (n > 100'000'000)
      throw std::runtime_error("jacobi_theta: series failed to converge");
    odd_power = odd_power * w2;
    term = term * odd_power;  // w1^{(n+1)^2} = w1^{n^2} * w1^{2n+1}
  }
  return {sum.re.with_bits(bits), sum.im.with_bits(bits)};
}

HPComplex g_function(const HPComplex& tau, long bits) {
  require_upper_half(tau);
  const long w = bits + kGuardBits;
  const HPComplex t = {tau.re.with_bits(w), tau.im.with_bits(w)};
  const HPComplex e1 = dedekind_eta(t, w);
  const HPComplex e2 = dedekind_eta({t.re * 2, t.im * 2}, w);
  const HPComplex out = (e1 * e1) / e2;
  return {out.re.with_bits(bits), out.im.with_bits(bits)};
}

namespace {

// g evaluated through theta(2 tau - 1): far fewer terms near the real axis
// than the eta products. The two routes are checked against each other in
// the test suite.
HPComplex g_via_theta(const HPReal& x, const HPReal& t, long bits) {
  return jacobi_theta({x * 2 - 1, t * 2}, bits);
}

}  // namespace

HPReal arg_g_boundary(int64_t q, int64_t p, double t_min, long bits) {
  if (p <= 0 || q % 2 == 0 || std::gcd(std::llabs(q), p) != 1)
    throw std::invalid_argument("arg_g_boundary: need q odd, p > 0, gcd(q,p)=1");
  if (t_min <= 0) throw std::invalid_argument("arg_g_boundary: t_min > 0");
  const long w = bits + kGuardBits;
  const HPReal pi = HPReal::pi(w);
  const HPReal quarter_pi = pi / 4;
  const HPReal x = HPReal(make_rational(BigInt(q), BigInt(2) * p), w);

  HPReal t_hi = HPReal(10, w);  // anchor near i*infinity, arg g ~ 0 there
  HPComplex g_hi = g_via_theta(x, t_hi, w);
  HPReal total_arg = g_hi.arg();

  const HPReal t_end = HPReal::from_double(t_min, w);
  // Advance from t_hi down to t_lo, bisecting geometrically whenever the
  // phase step reaches pi/4.
  const auto advance = [&](auto&& self, const HPReal& t_lo, int depth) -> void {
    const HPComplex g_lo = g_via_theta(x, t_lo, w);
    const HPReal delta = (g_lo * g_hi.conj()).arg();
    if (abs(delta) < quarter_pi) {
      total_arg += delta;
      g_hi = g_lo;
      t_hi = t_lo;
      return;
    }
    if (depth > 60)
      throw std::runtime_error("argument tracking unstable");
    const HPReal mid = sqrt(t_hi * t_lo);
    self(self, mid, depth + 1);
    self(self, t_lo, depth + 1);
  };

  const double ratio = 0.5;
  while (t_hi > t_end) {
    double next = t_hi.to_double() * ratio;
    if (next < t_min) next = t_min;
    advance(advance, HPReal::from_double(next, w), 0);
  }
  return (total_arg * -2 / pi).with_bits(bits);
}

EichlerResult eichler_G(const HPComplex& tau, int64_t n_terms, long bits) {
  require_upper_half(tau);
  if (n_terms < 1) throw std::invalid_argument("eichler_G: n_terms >= 1");
  if (n_terms > 1'000'000)
    throw std::invalid_argument("eichler_G: n_terms too large");
  const long w = bits + kGuardBits;
  const HPReal pi = HPReal::pi(w);
  const HPComplex t = {tau.re.with_bits(w), tau.im.with_bits(w)};

  // sigma_3 over odd n by an odd-divisor sieve.
  std::vector<int64_t> sig3(static_cast<std::size_t>(n_terms) + 1, 0);
  for (int64_t d = 1; d <= n_terms; d += 2) {
    const int64_t d3 = d * d * d;
    for (int64_t m = d; m <= n_terms; m += 2 * d) sig3[m] += d3;
  }

  const HPComplex w1 = exp(HPComplex(-pi * t.im, pi * t.re));  // e^{i pi tau}
  const HPComplex w2 = w1 * w1;
  HPComplex s = {HPReal(0, w), HPReal(0, w)};
  HPComplex wn = w1;
  for (int64_t n = 1; n <= n_terms; n += 2) {
    const Rational coeff = make_rational(sig3[n], BigInt(n) * n * n);
    s = s + wn * HPReal(coeff, w);
    wn = wn * w2;
  }
  // G = s / (i pi)^3 = (i / pi^3) s.
  const HPReal pi3 = pi * pi * pi;
  HPComplex value = {-s.im / pi3, s.re / pi3};

  // zeta(3) bounds sigma_{-3}; the rest is a geometric series in |w1|.
  const HPReal absw = w1.abs();
  const HPReal zeta3 = HPReal::from_double(1.2020569032, w);
  const HPReal tail =
      exp(log(absw) * (n_terms + 1)) / ((HPReal(1, w) - absw * absw) * pi3) * zeta3;
  return {{value.re.with_bits(bits), value.im.with_bits(bits)},
          tail.with_bits(bits)};
}

namespace {

struct ReducedAngle {
  Rational theta;  // in [0, 1)
  int sign;        // Lambda(original) = sign * Lambda(theta)
};

// Lambda(theta+2) = Lambda(theta), Lambda(theta+1) = -Lambda(theta); fold into
// [0,1) tracking the sign so the symmetry holds exactly in the evaluator.
ReducedAngle reduce_lambda_angle(const Rational& theta) {
  Rational r = theta - Rational(2) * Rational(floor_of(theta / 2));
  int sign = 1;
  if (r >= 1) {
    r -= 1;
    sign = -1;
  }
  return {r, sign};
}

HPReal sixteen_over_pi3(long w) {
  const HPReal pi = HPReal::pi(w);
  return HPReal(16, w) / (pi * pi * pi);
}

}  // namespace

LambdaResult lambda_eval(const Rational& theta, double eps_target, long bits) {
  if (eps_target <= 0) throw std::invalid_argument("lambda_eval: eps_target > 0");
  const auto [th, sign] = reduce_lambda_angle(theta);
  const BigInt b = th.get_den();
  if (is_odd(b))
    throw std::invalid_argument(
        "lambda_eval: rational theta must have an even denominator");
  if (!b.fits_slong_p() || b.get_si() > 1'000'000)
    throw std::invalid_argument("lambda_eval: denominator too large");
  const int64_t den = b.get_si();
  const int64_t num = floor_mod(th.get_num(), BigInt(2) * den).get_si();

  const long w = std::max(bits, 128L) + kGuardBits;
  const HPReal pi = HPReal::pi(w);
  const double sin_floor = std::sin(M_PI / double(den));
  const double front = 16.0 / (M_PI * M_PI * M_PI) / sin_floor;
  // Tail after N (odd terms only): front * 1/(4 N^2) <= eps.
  int64_t n_cut = static_cast<int64_t>(std::ceil(std::sqrt(front / (4.0 * eps_target)))) + 1;
  n_cut = std::max<int64_t>(n_cut, 8);

  // Table of 1/sin(j pi / den) over residues of n*num mod 2*den.
  std::vector<HPReal> inv_sin;
  inv_sin.reserve(static_cast<std::size_t>(2 * den));
  for (int64_t j = 0; j < 2 * den; ++j) {
    if (j % den == 0) {
      inv_sin.emplace_back(0, w);  // never hit: n*num stays off the lattice
      continue;
    }
    inv_sin.push_back(HPReal(1, w) / sin(pi * j / den));
  }

  HPReal acc(0, w);
  int64_t idx = num % (2 * den);
  const int64_t step = (2 * num) % (2 * den);
  for (int64_t n = 1; n <= n_cut; n += 2) {
    acc += inv_sin[static_cast<std::size_t>(idx)] / n / n / n;
    idx += step;
    if (idx >= 2 * den) idx -= 2 * den;
  }
  HPReal value = acc * sixteen_over_pi3(w);
  if (sign < 0) value = -value;
  const HPReal tail =
      HPReal::from_double(front / (4.0 * double(n_cut) * double(n_cut)), w);
  return {value.with_bits(bits), {tail.with_bits(bits), n_cut}};
}

LambdaResult lambda_eval(const numtheory::CFExpansion& theta, double eps_target,
                         long bits) {
  if (theta.is_finite()) return lambda_eval(theta.value(), eps_target, bits);
  if (!theta.term_bound())
    throw std::invalid_argument(
        "lambda_eval: continued fraction needs a partial-quotient bound "
        "to certify the tail");
  if (theta.a0() != 0)
    throw std::invalid_argument("lambda_eval: continued fraction theta must lie in (0,1)");
  const double A = theta.term_bound()->get_d();

  // |sin(n pi theta)| >= 2/((A+2) n), so odd-tail terms are below
  // (8(A+2)/pi^3)/n^2.
  const double unit = 8.0 * (A + 2.0) / (M_PI * M_PI * M_PI);
  int64_t n_cut = 8;
  auto tail_at = [&](int64_t m) { return unit * (1.0 / (2.0 * m) + 1.0 / (double(m) * m)); };
  while (tail_at(n_cut) > eps_target / 2 && n_cut < (int64_t(1) << 40)) n_cut *= 2;
  if (tail_at(n_cut) > eps_target / 2)
    throw std::invalid_argument("lambda_eval: eps_target unreachable");

  // Deepen convergents until the rational stand-in q_K/p_K keeps every
  // summand within eps/2: needs p_K > N and p_K p_{K+1} large against both
  // the interval bound 2(A+2)N^2 and the derivative bound.
  const double deriv_budget =
      (16.0 / (M_PI * M_PI)) * double(n_cut) * (A + 2.0) * (A + 2.0);
  std::size_t depth = 4;
  numtheory::Convergent ck, ck1;
  for (;; depth += 2) {
    const auto conv = numtheory::convergents(theta, depth + 1);
    ck = conv[depth];
    ck1 = conv[depth + 1];
    if (ck.p <= n_cut) continue;
    const double pkpk1 = BigInt(ck.p * ck1.p).get_d();
    if (pkpk1 < 2.0 * (A + 2.0) * double(n_cut) * double(n_cut)) continue;
    if (deriv_budget / pkpk1 > eps_target / 2) continue;
    break;
  }

  const long w = std::max(bits, 128L) + kGuardBits;
  const HPReal pi = HPReal::pi(w);
  const BigInt two_p = BigInt(2) * ck.p;
  const BigInt step = floor_mod(BigInt(2) * ck.q, two_p);
  BigInt res = floor_mod(ck.q, two_p);
  HPReal acc(0, w);
  for (int64_t n = 1; n <= n_cut; n += 2) {
    const HPReal angle = HPReal(make_rational(res, ck.p), w) * pi;
    acc += HPReal(1, w) / sin(angle) / n / n / n;
    res += step;
    if (res >= two_p) res -= two_p;
  }
  const HPReal value = acc * sixteen_over_pi3(w);
  const HPReal tail = HPReal::from_double(tail_at(n_cut) + eps_target / 2, w);
  return {value.with_bits(bits), {tail.with_bits(bits), n_cut}};
}

LambdaResult lambda_eval(const ThetaSpec& theta, double eps_target, long bits) {
  if (std::holds_alternative<Rational>(theta.v))
    return lambda_eval(std::get<Rational>(theta.v), eps_target, bits);
  return lambda_eval(std::get<numtheory::CFExpansion>(theta.v), eps_target, bits);
}

HPComplex period_residual(const HPComplex& tau, int64_t n_terms, long bits) {
  require_upper_half(tau);
  const long w = bits + kGuardBits;
  const HPComplex t = {tau.re.with_bits(w), tau.im.with_bits(w)};
  const HPComplex one = {HPReal(1, w), HPReal(0, w)};
  const HPComplex den = t * HPReal(2, w) + one;  // 2 tau + 1
  const HPComplex phi = t / den;
  const HPComplex g1 = eichler_G(t, n_terms, w).value;
  const HPComplex g2 = eichler_G(phi, n_terms, w).value;
  const HPComplex period =
      (t * t * HPReal(2, w) + t * HPReal(2, w) + one) * (HPReal(1, w) / HPReal(32, w));
  const HPComplex out = g1 - g2 * den * den - period;
  return {out.re.with_bits(bits), out.im.with_bits(bits)};
}

namespace {

// theta / (2 theta + 1) in each representation. For a continued fraction
// [0; a1, a2, ...] the image is [0; a1 + 2, a2, ...].
ThetaSpec apply_phi2(const ThetaSpec& theta) {
  if (std::holds_alternative<Rational>(theta.v)) {
    const Rational& r = std::get<Rational>(theta.v);
    const Rational d = Rational(2) * r + 1;
    if (d == 0)
      throw std::invalid_argument("lambda_transform_residual: theta = -1/2");
    return ThetaSpec::rational(r / d);
  }
  const auto& cf = std::get<numtheory::CFExpansion>(theta.v);
  if (cf.a0() != 0)
    throw std::invalid_argument(
        "lambda_transform_residual: cf theta must lie in (0,1)");
  if (cf.is_finite()) {
    std::vector<BigInt> terms;
    terms.reserve(cf.length());
    for (std::size_t i = 1; i <= cf.length(); ++i) terms.push_back(cf.term(i));
    if (terms.empty())
      throw std::invalid_argument("lambda_transform_residual: theta = 0");
    terms[0] += 2;
    return ThetaSpec::continued_fraction(
        numtheory::CFExpansion::finite(0, std::move(terms)));
  }
  const BigInt a1 = cf.term(1) + 2;
  BigInt bound = *cf.term_bound();
  if (a1 > bound) bound = a1;
  return ThetaSpec::continued_fraction(numtheory::CFExpansion::from_generator(
      0,
      [cf, a1](std::size_t i) { return i == 1 ? a1 : cf.term(i); },
      bound));
}

HPReal theta_to_real(const ThetaSpec& theta, long w) {
  if (std::holds_alternative<Rational>(theta.v))
    return HPReal(std::get<Rational>(theta.v), w);
  const auto& cf = std::get<numtheory::CFExpansion>(theta.v);
  if (cf.is_finite()) return HPReal(cf.value(), w);
  std::size_t depth = 4;
  for (;; depth += 2) {
    const auto conv = numtheory::convergents(cf, depth);
    const BigInt& p = conv[depth].p;
    if (mpz_sizeinbase(p.get_mpz_t(), 2) * 2 >= static_cast<std::size_t>(w + 4))
      return HPReal(make_rational(conv[depth].q, conv[depth].p), w);
  }
}

}  // namespace

HPReal lambda_transform_residual(const ThetaSpec& theta, double eps, long bits) {
  const long w = std::max(bits, 128L) + kGuardBits;
  const ThetaSpec image = apply_phi2(theta);
  const LambdaResult l_theta = lambda_eval(theta, eps / 4, w);
  const LambdaResult l_image = lambda_eval(image, eps / 4, w);
  const HPReal th = theta_to_real(theta, w);
  const HPReal den = th * 2 + 1;
  const HPReal expected = th * th * 2 + th * 2 + 1;
  const HPReal out = l_image.value * den * den - l_theta.value - expected;
  return out.with_bits(bits);
}

}  // namespace sigtqft::modular
