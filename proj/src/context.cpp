#include "zetaseries/context.hpp"

namespace zetaseries {

EvalContext::EvalContext(Precision precision)
    : precision_(precision), bits_(precision.bits()) {}

Real EvalContext::epsilon() const {
  return power_of_ten(-static_cast<long>(precision_.working_digits()), bits_);
}

Real EvalContext::output_resolution() const {
  return power_of_ten(-static_cast<long>(precision_.decimal_digits), bits_);
}

Real EvalContext::pi() const {
  std::lock_guard lock(mutex_);
  if (!pi_) {
    pi_ = const_pi(bits_);
  }
  return *pi_;
}

Real EvalContext::ln2() const {
  std::lock_guard lock(mutex_);
  if (!ln2_) {
    Real value(bits_);
    mpfr_const_log2(value.get(), MPFR_RNDN);
    ln2_ = std::move(value);
  }
  return *ln2_;
}

Real EvalContext::ln_pi() const {
  const Real p = pi();
  std::lock_guard lock(mutex_);
  if (!ln_pi_) {
    ln_pi_ = log(p);
  }
  return *ln_pi_;
}

std::optional<Real> EvalContext::cached_odd_zeta(unsigned n) const {
  std::lock_guard lock(mutex_);
  if (auto it = odd_zeta_.find(n); it != odd_zeta_.end()) {
    return it->second;
  }
  return std::nullopt;
}

void EvalContext::remember_odd_zeta(unsigned n, const Real& value) const {
  std::lock_guard lock(mutex_);
  odd_zeta_.insert_or_assign(n, value.rounded_to(bits_));
}

std::optional<Real> EvalContext::cached_even_zeta(unsigned n) const {
  std::lock_guard lock(mutex_);
  if (auto it = even_zeta_.find(n); it != even_zeta_.end()) {
    return it->second;
  }
  return std::nullopt;
}

void EvalContext::remember_even_zeta(unsigned n, const Real& value) const {
  std::lock_guard lock(mutex_);
  even_zeta_.insert_or_assign(n, value.rounded_to(bits_));
}

}  // namespace zetaseries
