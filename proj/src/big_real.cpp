#include "leafsub/big_real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "leafsub/errors.hpp"

namespace leafsub {

namespace {

constexpr double kLog2Of10 = 3.3219280948873623;

mpfr_prec_t clamp_bits(long bits) {
  return static_cast<mpfr_prec_t>(std::clamp<long>(bits, MPFR_PREC_MIN, MPFR_PREC_MAX));
}

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
  return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}

}  // namespace

Precision Precision::from_digits(long d) {
  return Precision{static_cast<long>(std::ceil(static_cast<double>(std::max(1L, d)) * kLog2Of10)) + 1};
}

long Precision::digits() const { return static_cast<long>(std::floor(static_cast<double>(bits - 1) / kLog2Of10)); }

BigReal::BigReal(Precision p) {
  mpfr_init2(value_, clamp_bits(p.bits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long v, Precision p) {
  mpfr_init2(value_, clamp_bits(p.bits));
  mpfr_set_si(value_, v, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& v, Precision p) {
  mpfr_init2(value_, clamp_bits(p.bits));
  mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& v, Precision p) {
  mpfr_init2(value_, clamp_bits(p.bits));
  mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN);
}

BigReal BigReal::parse(const std::string& decimal, Precision p) {
  BigReal r(p);
  if (mpfr_set_str(r.value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    throw InvalidArgument("not a decimal number: '" + decimal + "'");
  }
  return r;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::with_precision(Precision p) const {
  BigReal r(p);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

mpz_class BigReal::floor() const {
  if (!mpfr_number_p(value_)) throw InvalidArgument("floor of a non-finite value");
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDD);
  return z;
}

long BigReal::exponent2() const {
  if (mpfr_zero_p(value_)) return 0;
  return static_cast<long>(mpfr_get_exp(value_));
}

std::string BigReal::to_string(long digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) < 0 ? "-inf" : "inf";
  digits = std::max(1L, digits);
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t e = 0;
  std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), value_, MPFR_RNDN),
                                             mpfr_free_str);
  std::string mant(raw.get());
  std::string sign;
  if (!mant.empty() && mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^e
  std::string out;
  if (e <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
  } else if (static_cast<std::size_t>(e) >= mant.size()) {
    out = mant + std::string(static_cast<std::size_t>(e) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<std::size_t>(e)) + "." + mant.substr(static_cast<std::size_t>(e));
  }
  return sign + out;
}

std::string BigReal::to_scientific(long digits) const {
  if (!mpfr_number_p(value_)) return to_string(digits);
  if (mpfr_zero_p(value_)) return "0";
  digits = std::max(1L, digits);
  mpfr_exp_t e = 0;
  std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), value_, MPFR_RNDN),
                                             mpfr_free_str);
  std::string mant(raw.get());
  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  return out + "e" + std::to_string(static_cast<long>(e) - 1);
}

BigReal& BigReal::operator+=(const BigReal& o) {
  mpfr_prec_round(value_, wider(*this, o), MPFR_RNDN);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  mpfr_prec_round(value_, wider(*this, o), MPFR_RNDN);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  mpfr_prec_round(value_, wider(*this, o), MPFR_RNDN);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  mpfr_prec_round(value_, wider(*this, o), MPFR_RNDN);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigReal operator-(BigReal a) {
  mpfr_neg(a.value_, a.value_, MPFR_RNDN);
  return a;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

BigReal abs(BigReal x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

BigReal log(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal log1p(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_log1p(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(Precision{std::max(x.precision().bits, y.precision().bits)});
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigReal root(const BigReal& x, unsigned long k) {
  BigReal r(x.precision());
#if MPFR_VERSION_MAJOR >= 4
  mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
#else
  mpfr_root(r.get(), x.get(), k, MPFR_RNDN);
#endif
  return r;
}

BigReal pow2(long e, Precision p) {
  BigReal r(1, p);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

BigReal log_of(const mpq_class& q, Precision p) {
  if (q <= 0) throw InvalidArgument("log of a nonpositive rational");
  return log(BigReal(mpz_class(q.get_num()), p)) - log(BigReal(mpz_class(q.get_den()), p));
}

}  // namespace leafsub
