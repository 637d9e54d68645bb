#pragma once

#include "zetaseries/context.hpp"
#include "zetaseries/real.hpp"

namespace zetaseries {

/*!
  Exact Bernoulli number B_n with the B_1 = -1/2 convention.

  Generated by the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 and memoized in a
  process-wide table guarded by a mutex.
*/
Rational bernoulli(unsigned n);

/// sum_{j=0}^{n} C(n+1, j) B_j; exactly zero for every n >= 1.
Rational bernoulli_recurrence_residual(unsigned n);

/// Exact Euler number E_n (Taylor coefficients of sech z times n!). Odd
/// indices are zero; E_0 = 1, E_2 = -1, E_4 = 5.
BigInt euler_number(unsigned n);

/// H_n = 1 + 1/2 + ... + 1/n. Throws InvalidDomain for n = 0.
Rational harmonic(unsigned n);

/// Checks H_{2n+1} = -sum_{l=1}^{2n+1} (-1)^l C(2n+1, l) / l in exact arithmetic.
bool harmonic_binomial_identity_check(unsigned n);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/*!
  zeta(2n) for n >= 1.

  Uses Euler's closed form (-1)^{n-1} 2^{2n-1} B_{2n} pi^{2n} / (2n)! while
  2n <= working_digits / 3, and the direct sum sum_j j^{-2n} with a rigorous
  tail bound beyond that. Results are cached in the context.
*/
Real zeta_even(unsigned n, const EvalContext& ctx);

/// Euler's closed form for zeta(2n), regardless of the index threshold.
Real zeta_even_closed_form(unsigned n, const EvalContext& ctx);

/// sum_{j=1}^{J} j^{-2n} with J chosen so the tail is below the working epsilon.
Real zeta_even_direct_sum(unsigned n, const EvalContext& ctx);

/// beta(2n+1) = (-1)^n E_{2n} pi^{2n+1} / (2^{2n+2} (2n)!), n >= 0.
Real beta_odd(unsigned n, const EvalContext& ctx);

}  // namespace zetaseries
