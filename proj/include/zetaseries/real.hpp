#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace zetaseries {

using BigInt = mpz_class;
using Rational = mpq_class;

/*!
  Target output digits plus internal guard digits.

  Every computation runs at decimal_digits + guard_digits significant digits;
  results are reported rounded to decimal_digits.
*/
struct Precision {
  static constexpr unsigned kDefaultGuardDigits = 10;

  unsigned decimal_digits;
  unsigned guard_digits;

  explicit Precision(unsigned digits, unsigned guard = kDefaultGuardDigits);

  unsigned working_digits() const { return decimal_digits + guard_digits; }

  /// Binary precision covering working_digits decimal digits.
  mpfr_prec_t bits() const;
};

/// Bits needed to represent `digits` significant decimal digits.
mpfr_prec_t bits_for_digits(unsigned digits);

/*!
  Arbitrary-precision binary floating-point value (MPFR).

  Every operation is correctly rounded to nearest. Binary operations produce a
  result at the larger of the operand precisions; operations with machine
  integers keep the precision of the Real operand.
*/
class Real {
 public:
  Real();
  explicit Real(mpfr_prec_t bits);
  Real(long value, mpfr_prec_t bits);
  Real(const BigInt& value, mpfr_prec_t bits);
  Real(const Rational& value, mpfr_prec_t bits);

  /// Parses a decimal literal; throws std::invalid_argument on malformed text.
  static Real parse(std::string_view text, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  Real rounded_to(mpfr_prec_t bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// log10|x|, or -infinity for zero. Double accuracy only.
  double log10_abs() const;

  /// Fixed-point decimal with exactly `fractional_digits` digits after the
  /// point. A value that rounds to zero prints without a minus sign.
  std::string to_fixed(unsigned fractional_digits) const;

  /// Scientific notation with `significant` digits, e.g. "3.2e-41".
  std::string to_scientific(unsigned significant = 3) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(long a, const Real& b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b);
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  void widen_to(mpfr_prec_t bits);

  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);

/// Natural logarithm; throws NonPositiveArgument for x <= 0.
Real log(const Real& x);

/// Sine with exact argument reduction (MPFR reduces modulo 2π internally at
/// whatever precision the reduction requires).
Real sin(const Real& x);
Real cos(const Real& x);

Real pow(const Real& base, unsigned long exponent);
Real pow(const Real& base, long exponent);

/// 10^exponent at the given precision.
Real power_of_ten(long exponent, mpfr_prec_t bits);

Real const_pi(mpfr_prec_t bits);

/// True when |a - b| < tolerance.
bool within(const Real& a, const Real& b, const Real& tolerance);

}  // namespace zetaseries
