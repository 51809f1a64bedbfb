#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace leafsub {

/// Working precision, held in bits.
struct Precision {
  long bits = 128;

  static Precision from_bits(long b) { return Precision{b}; }
  /// Enough bits to carry `d` significant decimal digits.
  static Precision from_digits(long d);
  /// Decimal digits carried by `bits` (rounded down).
  long digits() const;
};

/**
 * Arbitrary-precision binary float with an explicit precision, owned by
 * value. Results of binary operations carry the larger operand precision;
 * all rounding is to nearest.
 */
class BigReal {
 public:
  explicit BigReal(Precision p = {});
  BigReal(long v, Precision p);
  BigReal(const mpz_class& v, Precision p);
  BigReal(const mpq_class& v, Precision p);
  static BigReal parse(const std::string& decimal, Precision p);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  Precision precision() const { return Precision{static_cast<long>(mpfr_get_prec(value_))}; }
  /// Same value rounded to a new precision.
  BigReal with_precision(Precision p) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  mpz_class floor() const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  long exponent2() const;  // x = m * 2^e with 0.5 <= |m| < 1

  /// `digits` significant decimal digits, round-half-even, fixed notation.
  std::string to_string(long digits) const;
  /// `digits` significant digits as "d.ddde-N".
  std::string to_scientific(long digits) const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator-(BigReal a);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

 private:
  mpfr_t value_;
};

BigReal abs(BigReal x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
/// x^(1/k)
BigReal root(const BigReal& x, unsigned long k);
/// 2^e at precision p.
BigReal pow2(long e, Precision p);
/// log of a positive rational, as log(num) - log(den).
BigReal log_of(const mpq_class& q, Precision p);

}  // namespace leafsub
