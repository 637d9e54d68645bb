#include "zetaseries/identities.hpp"

#include "zetaseries/errors.hpp"
#include "zetaseries/oracles.hpp"
#include "zetaseries/series_engine.hpp"
#include "zetaseries/special_numbers.hpp"

namespace zetaseries {

namespace {

void require_turns(unsigned n, const Rational& x) {
  if (n < 1) {
    throw InvalidDomain("generalized identity requires n >= 1");
  }
  if (x == 0 || abs(x) > 1) {
    throw InvalidDomain("generalized identity requires 0 < |x| <= 1");
  }
}

Real inverse_factorial(unsigned n, const EvalContext& ctx) {
  return ctx.real(Rational(BigInt(1), factorial(n)));
}

}  // namespace

Real generalized_identity_lhs(unsigned n, const Rational& x, const EvalContext& ctx, SineSeriesSign sign) {
  require_turns(n, x);
  const Real angle = 2 * ctx.pi() * ctx.real(x);
  const Real sine_series = clausen_direct_turns(n + 1, x, ctx).value;
  const Real ratio = sine_series / angle;
  const Real zeta = zeta_odd(n, ctx);
  return sign == SineSeriesSign::corrected ? zeta - ratio : zeta + ratio;
}

Real generalized_identity_rhs(unsigned n, const Rational& x, const EvalContext& ctx) {
  require_turns(n, x);
  const Real angle = 2 * ctx.pi() * ctx.real(x);
  const unsigned top = 2 * n + 1;

  Real bracket = (ctx.real(harmonic(top)) - log(abs(angle))) * inverse_factorial(top, ctx);
  for (unsigned k = 1; k < n; ++k) {
    Real term = zeta_odd(k, ctx) * inverse_factorial(2 * n - 2 * k + 1, ctx) /
                pow(angle, static_cast<unsigned long>(2 * k));
    bracket += (k % 2 == 0) ? term : -term;
  }
  bracket += 2 * master_series(MasterSeriesParams(n + 1, ctx.real(x)), ctx).value;

  const Real scale = pow(angle, static_cast<unsigned long>(2 * n));
  return (n % 2 == 1 ? scale : -scale) * bracket;
}

Real generalized_identity_residual(unsigned n, const Rational& x, const EvalContext& ctx,
                       SineSeriesSign sign) {
  return generalized_identity_lhs(n, x, ctx, sign) - generalized_identity_rhs(n, x, ctx);
}

Real half_quarter_residual(unsigned n, const EvalContext& ctx) {
  if (n < 1) {
    throw InvalidDomain("half_quarter_residual(n) requires n >= 1");
  }
  const Real pi = ctx.pi();
  const Real lhs = master_series(MasterSeriesParams(n, ctx.real(Rational(1, 2))), ctx).value -
                   master_series(MasterSeriesParams(n, ctx.real(Rational(1, 4))), ctx).value;

  BigInt two_power(1);
  two_power <<= (2 * n - 2);
  Real rhs = ctx.real(two_power) * beta_even(n, ctx) /
             pow(pi, static_cast<unsigned long>(2 * n - 1));
  if (n % 2 == 1) {
    rhs = -rhs;
  }
  rhs += ctx.real(Rational(BigInt(n), factorial(2 * n))) * ctx.ln2();
  Real odd_sum = ctx.real(0);
  for (unsigned m = 1; m < n; ++m) {
    BigInt weight(1);
    weight <<= 2 * m;
    weight -= 1;
    Real term = ctx.real(weight) * zeta_odd(m, ctx) /
                pow(pi, static_cast<unsigned long>(2 * m)) *
                inverse_factorial(2 * n - 2 * m - 1, ctx);
    odd_sum += (m % 2 == 0) ? term : -term;
  }
  rhs += odd_sum / 2;
  return lhs - rhs;
}

std::string to_string(DisplayedSpecialization which) {
  switch (which) {
    case DisplayedSpecialization::pi_over_3_m1:
      return "theta=pi/3,m=1";
    case DisplayedSpecialization::pi_over_3_m2:
      return "theta=pi/3,m=2";
    case DisplayedSpecialization::pi_over_4_m1:
      return "theta=pi/4,m=1";
    case DisplayedSpecialization::pi_over_4_m2:
      return "theta=pi/4,m=2";
  }
  return "unknown";
}

Real specialization_residual(DisplayedSpecialization which, const EvalContext& ctx) {
  const bool third = which == DisplayedSpecialization::pi_over_3_m1 ||
                     which == DisplayedSpecialization::pi_over_3_m2;
  const bool second_order = which == DisplayedSpecialization::pi_over_3_m2 ||
                            which == DisplayedSpecialization::pi_over_4_m2;
  const long divisor = third ? 3 : 4;  // theta = pi / divisor
  const unsigned m = second_order ? 2 : 1;
  const Rational turns(1, 2 * divisor);

  const Real pi = ctx.pi();
  // sum zeta(2k) / (k (2k+1) ...) x^{2k} is twice the master series.
  const Real lhs = 2 * master_series(MasterSeriesParams(m, ctx.real(turns)), ctx).value;
  const Real clausen = clausen_direct_turns(m, turns, ctx).value;
  const Real ln_theta = log(pi / divisor);

  Real rhs(ctx.bits());
  if (!second_order) {
    // ln(pi/d) - 1 + (d/pi) Cl_2(pi/d)
    rhs = ln_theta - 1 + ctx.real(divisor) / pi * clausen;
  } else {
    // (1/6) ln(pi/d) - 11/36 - (d^3/pi^3) Cl_4(pi/d) + (d^2/pi^2) zeta(3)
    const long d2 = divisor * divisor;
    rhs = ln_theta / 6 - ctx.real(Rational(11, 36)) -
          ctx.real(d2 * divisor) / pow(pi, 3UL) * clausen +
          ctx.real(d2) / pow(pi, 2UL) * zeta_odd(1, ctx);
  }
  return lhs - rhs;
}

}  // namespace zetaseries
