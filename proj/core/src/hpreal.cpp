#include "sigtqft/hpreal.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigtqft {

namespace {
long clamp_bits(long bits) { return std::max(bits, HPReal::kMinBits); }
}  // namespace

HPReal::HPReal(long bits) : bits_(clamp_bits(bits)) {
  mpfr_init2(v_, bits_);
  mpfr_set_zero(v_, 1);
}

HPReal::HPReal(long long value, long bits) : bits_(clamp_bits(bits)) {
  mpfr_init2(v_, bits_);
  mpfr_set_si(v_, static_cast<long>(value), MPFR_RNDN);
}

HPReal::HPReal(const BigInt& value, long bits) : bits_(clamp_bits(bits)) {
  mpfr_init2(v_, bits_);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

HPReal::HPReal(const Rational& value, long bits) : bits_(clamp_bits(bits)) {
  mpfr_init2(v_, bits_);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

HPReal HPReal::from_double(double v, long bits) {
  HPReal r(bits);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

HPReal HPReal::pi(long bits) {
  HPReal r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

HPReal::HPReal(const HPReal& o) : bits_(o.bits_) {
  mpfr_init2(v_, bits_);
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& o) noexcept : bits_(o.bits_) {
  mpfr_init2(v_, bits_);
  mpfr_swap(v_, o.v_);
}

HPReal& HPReal::operator=(const HPReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.bits_);
    bits_ = o.bits_;
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

HPReal& HPReal::operator=(HPReal&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    std::swap(bits_, o.bits_);
  }
  return *this;
}

HPReal::~HPReal() { mpfr_clear(v_); }

HPReal HPReal::with_bits(long bits) const {
  HPReal r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

#define SIGTQFT_HP_BINOP(op, fn)                        \
  HPReal HPReal::operator op(const HPReal& o) const {   \
    HPReal r(std::min(bits_, o.bits_));                 \
    fn(r.v_, v_, o.v_, MPFR_RNDN);                      \
    return r;                                           \
  }

SIGTQFT_HP_BINOP(+, mpfr_add)
SIGTQFT_HP_BINOP(-, mpfr_sub)
SIGTQFT_HP_BINOP(*, mpfr_mul)
SIGTQFT_HP_BINOP(/, mpfr_div)
#undef SIGTQFT_HP_BINOP

HPReal HPReal::operator-() const {
  HPReal r(bits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

HPReal& HPReal::operator+=(const HPReal& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  bits_ = std::min(bits_, o.bits_);
  return *this;
}

HPReal& HPReal::operator-=(const HPReal& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  bits_ = std::min(bits_, o.bits_);
  return *this;
}

HPReal& HPReal::operator*=(const HPReal& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  bits_ = std::min(bits_, o.bits_);
  return *this;
}

HPReal HPReal::operator+(long long s) const {
  HPReal r(bits_);
  mpfr_add_si(r.v_, v_, static_cast<long>(s), MPFR_RNDN);
  return r;
}

HPReal HPReal::operator-(long long s) const {
  HPReal r(bits_);
  mpfr_sub_si(r.v_, v_, static_cast<long>(s), MPFR_RNDN);
  return r;
}

HPReal HPReal::operator*(long long s) const {
  HPReal r(bits_);
  mpfr_mul_si(r.v_, v_, static_cast<long>(s), MPFR_RNDN);
  return r;
}

HPReal HPReal::operator/(long long s) const {
  HPReal r(bits_);
  mpfr_div_si(r.v_, v_, static_cast<long>(s), MPFR_RNDN);
  return r;
}

BigInt HPReal::round_to_integer() const {
  if (!is_finite()) throw std::domain_error("round_to_integer: non-finite value");
  mpfr_t t;
  mpfr_init2(t, bits_);
  mpfr_rint(t, v_, MPFR_RNDN);
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
  mpfr_clear(t);
  return z;
}

std::string HPReal::str(long digits) const {
  if (digits <= 0) digits = static_cast<long>(bits_ * 0.30103) + 2;
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_) < 0)
    throw std::runtime_error("HPReal::str: formatting failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

#define SIGTQFT_HP_UNFN(name, fn)       \
  HPReal name(const HPReal& x) {        \
    HPReal r(x.bits_);                  \
    fn(r.v_, x.v_, MPFR_RNDN);          \
    return r;                           \
  }

SIGTQFT_HP_UNFN(sin, mpfr_sin)
SIGTQFT_HP_UNFN(cos, mpfr_cos)
SIGTQFT_HP_UNFN(exp, mpfr_exp)
SIGTQFT_HP_UNFN(log, mpfr_log)
SIGTQFT_HP_UNFN(sqrt, mpfr_sqrt)
SIGTQFT_HP_UNFN(abs, mpfr_abs)
#undef SIGTQFT_HP_UNFN

HPReal atan2(const HPReal& y, const HPReal& x) {
  HPReal r(std::min(y.bits_, x.bits_));
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}

HPReal ldexp2(const HPReal& x, long e) {
  HPReal r(x.bits_);
  mpfr_mul_2si(r.v_, x.v_, e, MPFR_RNDN);
  return r;
}

}  // namespace sigtqft
