#include "sigtqft/contfrac.hpp"

#include <stdexcept>

namespace sigtqft::numtheory {

CFExpansion CFExpansion::finite(BigInt a0, std::vector<BigInt> terms) {
  for (const auto& t : terms) {
    if (t < 1) throw std::invalid_argument("CFExpansion: terms must be >= 1");
  }
  // Canonicalize a trailing 1: [..., a, 1] == [..., a+1].
  if (!terms.empty() && terms.back() == 1) {
    terms.pop_back();
    if (terms.empty()) {
      a0 += 1;
    } else {
      terms.back() += 1;
    }
  }
  CFExpansion cf;
  cf.a0_ = std::move(a0);
  cf.terms_ = std::move(terms);
  if (!cf.terms_.empty()) {
    BigInt mx = cf.terms_[0];
    for (const auto& t : cf.terms_)
      if (t > mx) mx = t;
    cf.bound_ = mx;
  }
  return cf;
}

CFExpansion CFExpansion::from_generator(BigInt a0, Generator gen,
                                        std::optional<BigInt> term_bound) {
  if (!gen) throw std::invalid_argument("CFExpansion: null generator");
  CFExpansion cf;
  cf.a0_ = std::move(a0);
  cf.gen_ = std::move(gen);
  cf.bound_ = std::move(term_bound);
  return cf;
}

CFExpansion CFExpansion::all_ones() {
  return from_generator(0, [](std::size_t) { return BigInt(1); }, BigInt(1));
}

CFExpansion CFExpansion::periodic(BigInt a0, std::vector<BigInt> pattern) {
  if (pattern.empty())
    throw std::invalid_argument("CFExpansion: empty periodic pattern");
  BigInt mx = pattern[0];
  for (const auto& t : pattern) {
    if (t < 1) throw std::invalid_argument("CFExpansion: terms must be >= 1");
    if (t > mx) mx = t;
  }
  return from_generator(
      std::move(a0),
      [pattern = std::move(pattern)](std::size_t i) {
        return pattern[(i - 1) % pattern.size()];
      },
      mx);
}

bool CFExpansion::has_term(std::size_t i) const {
  if (i == 0) return true;
  return gen_ ? true : i <= terms_.size();
}

BigInt CFExpansion::term(std::size_t i) const {
  if (i == 0) return a0_;
  if (gen_) return gen_(i);
  if (i > terms_.size()) throw std::out_of_range("expansion exhausted");
  return terms_[i - 1];
}

Rational CFExpansion::value() const {
  if (gen_)
    throw std::domain_error("CFExpansion: value() of an infinite expansion");
  Rational v(a0_);
  if (terms_.empty()) return v;
  // Fold from the tail: value = a0 + 1/(a1 + 1/(...)).
  Rational tail(terms_.back());
  for (std::size_t i = terms_.size() - 1; i-- > 0;) {
    tail = Rational(terms_[i]) + Rational(1) / tail;
  }
  return v + Rational(1) / tail;
}

CFExpansion cf_expand(const Rational& r) {
  BigInt num = r.get_num(), den = r.get_den();
  BigInt a0 = floor_div(num, den);
  std::vector<BigInt> terms;
  BigInt rem = num - a0 * den;  // 0 <= rem < den
  // Euclid on (den, rem); stops with last quotient >= 2 automatically.
  while (rem != 0) {
    BigInt q = floor_div(den, rem);
    BigInt r2 = den - q * rem;
    terms.push_back(q);
    den = rem;
    rem = r2;
  }
  return CFExpansion::finite(std::move(a0), std::move(terms));
}

std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t depth) {
  if (!cf.has_term(depth)) throw std::out_of_range("expansion exhausted");
  std::vector<Convergent> out;
  out.reserve(depth + 1);
  BigInt q_prev = 1, p_prev = 0;      // (q_{-1}, p_{-1})
  BigInt q_cur = cf.a0(), p_cur = 1;  // (q_0, p_0)
  out.push_back({0, q_cur, p_cur});
  for (std::size_t k = 1; k <= depth; ++k) {
    const BigInt a = cf.term(k);
    BigInt q_next = a * q_cur + q_prev;
    BigInt p_next = a * p_cur + p_prev;
    q_prev = std::move(q_cur);
    p_prev = std::move(p_cur);
    q_cur = std::move(q_next);
    p_cur = std::move(p_next);
    out.push_back({k, q_cur, p_cur});
  }
  return out;
}

std::pair<Rational, Rational> convergent_gap_bounds(const CFExpansion& cf,
                                                    std::size_t k) {
  if (k < 1) throw std::invalid_argument("convergent_gap_bounds: k >= 1");
  const auto conv = convergents(cf, k + 1);
  const BigInt& pk = conv[k].p;
  const BigInt& pk1 = conv[k + 1].p;
  return {make_rational(1, pk * (pk + pk1)), make_rational(1, pk * pk1)};
}

Rational zaremba_denominator_bound(const CFExpansion& cf, std::size_t k,
                                   const BigInt& n) {
  if (k < 2) throw std::invalid_argument("zaremba_denominator_bound: k >= 2");
  const auto conv = convergents(cf, k);
  if (n < 1 || n >= conv[k].p)
    throw std::out_of_range("zaremba_denominator_bound: need 1 <= n < p_k");
  // Smallest i with p_{i+1} > n; then p_i <= n < p_{i+1} and i < k.
  std::size_t i = 0;
  while (i + 1 < k && conv[i + 1].p <= n) ++i;
  const BigInt a_next = cf.term(i + 1);
  const BigInt& pk = conv[k].p;
  return make_rational(4, pk * pk * (a_next + 2) * (a_next + 2));
}

BigInt floor_multiple(const CFExpansion& cf, const BigInt& m) {
  if (cf.is_finite()) {
    const Rational v = cf.value() * Rational(m);
    if (v.get_den() == 1) throw std::domain_error("quantum integer vanishes");
    return floor_of(v);
  }
  // theta lies strictly between consecutive convergents; the floor is decided
  // once both brackets agree.
  constexpr std::size_t kMaxDepth = 40000;
  BigInt q_prev = 1, p_prev = 0;
  BigInt q_cur = cf.a0(), p_cur = 1;
  BigInt fa, fb;
  for (std::size_t k = 1; k <= kMaxDepth; ++k) {
    const BigInt a = cf.term(k);
    BigInt q_next = a * q_cur + q_prev;
    BigInt p_next = a * p_cur + p_prev;
    fa = floor_div(m * q_cur, p_cur);
    fb = floor_div(m * q_next, p_next);
    if (fa == fb) return fa;
    q_prev = std::move(q_cur);
    p_prev = std::move(p_cur);
    q_cur = std::move(q_next);
    p_cur = std::move(p_next);
  }
  throw std::runtime_error("insufficient expansion depth");
}

}  // namespace sigtqft::numtheory
