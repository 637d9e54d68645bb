#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string_view>

#include "zetaseries/real.hpp"

namespace zetaseries {

/*!
  Working precision plus the memo caches shared by one family of computations.

  Cached constants (π, ln 2, ln π) and zeta values are stored at the context's
  working precision. Cache access is serialized by an internal mutex, so a
  context may be shared between threads; values handed out are copies.
*/
class EvalContext {
 public:
  explicit EvalContext(Precision precision = Precision{30});

  EvalContext(const EvalContext&) = delete;
  EvalContext& operator=(const EvalContext&) = delete;

  const Precision& precision() const { return precision_; }
  mpfr_prec_t bits() const { return bits_; }

  Real real(long value) const { return Real(value, bits_); }
  Real real(const BigInt& value) const { return Real(value, bits_); }
  Real real(const Rational& value) const { return Real(value, bits_); }
  Real parse(std::string_view text) const { return Real::parse(text, bits_); }

  /// 10^-(decimal + guard digits): the relative stopping threshold for series.
  Real epsilon() const;

  /// 10^-(decimal digits): the reporting resolution.
  Real output_resolution() const;

  Real pi() const;
  Real ln2() const;
  Real ln_pi() const;

  std::optional<Real> cached_odd_zeta(unsigned n) const;
  void remember_odd_zeta(unsigned n, const Real& value) const;

  std::optional<Real> cached_even_zeta(unsigned n) const;
  void remember_even_zeta(unsigned n, const Real& value) const;

 private:
  Precision precision_;
  mpfr_prec_t bits_;

  mutable std::mutex mutex_;
  mutable std::optional<Real> pi_;
  mutable std::optional<Real> ln2_;
  mutable std::optional<Real> ln_pi_;
  mutable std::map<unsigned, Real> odd_zeta_;
  mutable std::map<unsigned, Real> even_zeta_;
};

/// π at the context's working precision.
inline Real const_pi(const EvalContext& ctx) { return ctx.pi(); }

}  // namespace zetaseries
