#pragma once

#include <string>

#include "zetaseries/context.hpp"
#include "zetaseries/real.hpp"

// Residuals of the zeta-series identities. Each residual combines engine
// output with oracle values, so a small residual is an independent check.

namespace zetaseries {

/// Sign in front of the sine series on the left of the generalized identity.
/// `plus_sign` reproduces the '+' of the earlier published statement,
/// which is wrong: its left side tends to 2 zeta(2n+1) as x -> 0.
enum class SineSeriesSign { corrected, plus_sign };

/*!
  Left side of the generalized identity,

      zeta(2n+1) -/+ (1 / (2 pi x)) sum_l sin(2 pi l x) / l^{2n+2},

  with the sine series (Cl_{2n+2}(2 pi x)) taken from the Clausen oracle.
  Requires 0 < |x| <= 1.
*/
Real generalized_identity_lhs(unsigned n, const Rational& x, const EvalContext& ctx,
                  SineSeriesSign sign = SineSeriesSign::corrected);

/// Right side: (-1)^{n-1} (2 pi x)^{2n} [ (H_{2n+1} - ln(2 pi |x|)) / (2n+1)!
///   + sum_{k=1}^{n-1} (-1)^k zeta(2k+1) / ((2n-2k+1)! (2 pi x)^{2k}) + 2 S(n+1, x) ].
Real generalized_identity_rhs(unsigned n, const Rational& x, const EvalContext& ctx);

/// LHS - RHS of the generalized identity.
Real generalized_identity_residual(unsigned n, const Rational& x, const EvalContext& ctx,
                       SineSeriesSign sign = SineSeriesSign::corrected);

/*!
  [S(n, 1/2) - S(n, 1/4)] minus

      (-1)^n 2^{2n-2} beta(2n) / pi^{2n-1} + n ln 2 / (2n)!
        + 1/2 sum_{m=1}^{n-1} (-1)^m (2^{2m} - 1) zeta(2m+1) / (pi^{2m} (2n-2m-1)!).
*/
Real half_quarter_residual(unsigned n, const EvalContext& ctx);

/// The four displayed closed forms at theta = pi/3 and pi/4 for m = 1, 2.
enum class DisplayedSpecialization { pi_over_3_m1, pi_over_3_m2, pi_over_4_m1, pi_over_4_m2 };

std::string to_string(DisplayedSpecialization which);

/// Left side (the zeta series, written with 1/(k(2k+1)...) coefficients)
/// minus the displayed right side, with Cl values from the Clausen oracle.
Real specialization_residual(DisplayedSpecialization which, const EvalContext& ctx);

}  // namespace zetaseries
