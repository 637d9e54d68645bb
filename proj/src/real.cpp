#include "zetaseries/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "zetaseries/errors.hpp"

namespace zetaseries {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;
constexpr mpfr_prec_t kDefaultBits = 64;

mpfr_prec_t wider(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

// Drops the sign of a fixed-point string whose digits are all zero.
std::string normalize_negative_zero(std::string text) {
  if (!text.empty() && text.front() == '-' &&
      text.find_first_not_of("0.", 1) == std::string::npos) {
    text.erase(0, 1);
  }
  return text;
}

std::string take_mpfr_string(char* raw) {
  if (raw == nullptr) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

}  // namespace

Precision::Precision(unsigned digits, unsigned guard)
    : decimal_digits(digits), guard_digits(guard) {
  if (digits < 1) {
    throw InvalidDomain("precision must be at least one decimal digit");
  }
}

mpfr_prec_t Precision::bits() const { return bits_for_digits(working_digits()); }

mpfr_prec_t bits_for_digits(unsigned digits) {
  // log2(10) = 3.3219...; four extra bits absorb the ceiling.
  const auto bits = static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 4;
  return std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN);
}

Real::Real() : Real(kDefaultBits) {}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, kRound);
}

Real::Real(const BigInt& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

Real::Real(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

Real Real::parse(std::string_view text, mpfr_prec_t bits) {
  Real out(bits);
  const std::string owned(text);
  char* end = nullptr;
  if (!owned.empty()) {
    mpfr_strtofr(out.value_, owned.c_str(), &end, 10, kRound);
  }
  if (owned.empty() || end == owned.c_str() || *end != '\0' || !out.is_finite()) {
    throw std::invalid_argument("not a decimal number: '" + owned + "'");
  }
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::rounded_to(mpfr_prec_t bits) const {
  Real out(bits);
  mpfr_set(out.value_, value_, kRound);
  return out;
}

double Real::log10_abs() const {
  if (is_zero()) {
    return -std::numeric_limits<double>::infinity();
  }
  // mantissa in [0.5, 1) times 2^exp keeps huge exponents out of double range.
  long exponent = 0;
  const double mantissa = mpfr_get_d_2exp(&exponent, value_, kRound);
  return std::log10(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log10(2.0);
}

std::string Real::to_fixed(unsigned fractional_digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*RNf", static_cast<int>(fractional_digits), value_);
  return normalize_negative_zero(take_mpfr_string(raw));
}

std::string Real::to_scientific(unsigned significant) const {
  const int after_point = significant > 0 ? static_cast<int>(significant) - 1 : 0;
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*RNe", after_point, value_);
  return take_mpfr_string(raw);
}

void Real::widen_to(mpfr_prec_t bits) {
  if (bits > precision()) {
    mpfr_prec_round(value_, bits, kRound);
  }
}

Real& Real::operator+=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, kRound);
  return *this;
}

Real& Real::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, kRound);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRound);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRound);
  return *this;
}

Real Real::operator-() const {
  Real out(precision());
  mpfr_neg(out.value_, value_, kRound);
  return out;
}

Real operator+(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_add(out.value_, a.value_, b.value_, kRound);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, kRound);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, kRound);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_div(out.value_, a.value_, b.value_, kRound);
  return out;
}

Real operator+(const Real& a, long b) {
  Real out(a.precision());
  mpfr_add_si(out.value_, a.value_, b, kRound);
  return out;
}

Real operator-(const Real& a, long b) {
  Real out(a.precision());
  mpfr_sub_si(out.value_, a.value_, b, kRound);
  return out;
}

Real operator*(const Real& a, long b) {
  Real out(a.precision());
  mpfr_mul_si(out.value_, a.value_, b, kRound);
  return out;
}

Real operator/(const Real& a, long b) {
  Real out(a.precision());
  mpfr_div_si(out.value_, a.value_, b, kRound);
  return out;
}

Real operator+(long a, const Real& b) { return b + a; }

Real operator-(long a, const Real& b) {
  Real out(b.precision());
  mpfr_si_sub(out.value_, a, b.value_, kRound);
  return out;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(long a, const Real& b) {
  Real out(b.precision());
  mpfr_si_div(out.value_, a, b.value_, kRound);
  return out;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.get(), x.get(), kRound);
  return out;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) {
    throw InvalidDomain("square root of a negative number");
  }
  Real out(x.precision());
  mpfr_sqrt(out.get(), x.get(), kRound);
  return out;
}

Real exp(const Real& x) {
  Real out(x.precision());
  mpfr_exp(out.get(), x.get(), kRound);
  return out;
}

Real log(const Real& x) {
  if (x.sign() <= 0) {
    throw NonPositiveArgument("logarithm requires a positive argument, got " + x.to_scientific(6));
  }
  Real out(x.precision());
  mpfr_log(out.get(), x.get(), kRound);
  return out;
}

Real sin(const Real& x) {
  Real out(x.precision());
  mpfr_sin(out.get(), x.get(), kRound);
  return out;
}

Real cos(const Real& x) {
  Real out(x.precision());
  mpfr_cos(out.get(), x.get(), kRound);
  return out;
}

Real pow(const Real& base, unsigned long exponent) {
  Real out(base.precision());
  mpfr_pow_ui(out.get(), base.get(), exponent, kRound);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out(base.precision());
  mpfr_pow_si(out.get(), base.get(), exponent, kRound);
  return out;
}

Real power_of_ten(long exponent, mpfr_prec_t bits) {
  Real out(bits);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent),
                 kRound);
  if (exponent < 0) {
    mpfr_ui_div(out.get(), 1, out.get(), kRound);
  }
  return out;
}

Real const_pi(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_pi(out.get(), kRound);
  return out;
}

bool within(const Real& a, const Real& b, const Real& tolerance) {
  return abs(a - b) < tolerance;
}

}  // namespace zetaseries
