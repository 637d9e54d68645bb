#pragma once

#include <cstddef>
#include <vector>

#include "zetaseries/context.hpp"
#include "zetaseries/real.hpp"
#include "zetaseries/series_engine.hpp"

// Reference implementations that share no series code with the engine: only
// the numeric kernel and the exact Bernoulli table are common.

namespace zetaseries {

/// A reference value with its reported error bound.
struct OracleEstimate {
  Real value;
  Real error_bound;
  std::size_t terms = 0;

  /// -log10(error_bound) relative to max(1, |value|), clipped at zero.
  double achieved_digits() const;
};

/*!
  Euler–Maclaurin knobs for the direct zeta and Hurwitz sums.

  direct_terms = 0 picks max(20, working digits + s); correction_terms = 0 adds
  corrections until the next one drops below the working epsilon. The reported
  error bound is the magnitude of the first omitted correction plus a rounding
  allowance.
*/
struct EulerMaclaurinOptions {
  std::size_t direct_terms = 0;
  std::size_t correction_terms = 0;
};

/// Hurwitz zeta sum_{k>=0} (k + a)^{-s} for integer s >= 2 and rational a > 0.
OracleEstimate hurwitz_direct(unsigned s, const Rational& a, const EvalContext& ctx,
                              const EulerMaclaurinOptions& options = {});

/// zeta(s) = sum_{k>=1} k^{-s}, s >= 2, by direct summation plus
/// Euler–Maclaurin tail.
Real zeta_direct(unsigned s, const EvalContext& ctx);
OracleEstimate zeta_direct_detailed(unsigned s, const EvalContext& ctx,
                                    const EulerMaclaurinOptions& options = {});

/// beta(s) = sum_{k>=0} (-1)^k (2k+1)^{-s}, s >= 1, accelerated with the
/// Cohen–Rodriguez Villegas–Zagier scheme. terms = 0 picks enough terms for the
/// working precision; the bound 2 / (3 + sqrt 8)^terms is reported.
Real beta_direct(unsigned s, const EvalContext& ctx);
OracleEstimate beta_direct_detailed(unsigned s, const EvalContext& ctx, std::size_t terms = 0);

/*!
  Clausen function sum_{k>=1} sin(k theta) / k^{2m} by brute force.

  Sums K terms where K is the smallest count whose tail bound
  sum_{k>K} k^{-2m} falls below the working epsilon, capped at `max_terms`;
  the bound actually achieved is reported.
*/
OracleEstimate clausen_direct(unsigned m, const Real& theta, const EvalContext& ctx,
                              std::size_t max_terms = 1'000'000);

/*!
  Clausen function at theta = 2 pi * turns for rational turns = p/q.

  The sine coefficients are periodic in k with period q, so the same series
  regroups exactly into q^{-2m} sum_{r=1}^{q} sin(2 pi p r / q) zeta(2m, r/q),
  each Hurwitz sum evaluated directly with an Euler–Maclaurin tail.
*/
OracleEstimate clausen_direct_turns(unsigned m, const Rational& turns, const EvalContext& ctx);

/// Apéry's central binomial series (5/2) sum_{k>=1} (-1)^{k+1} / (k^3 C(2k,k)).
SeriesEvaluation apery_series(const EvalContext& ctx, std::size_t max_terms);
PartialSums apery_partial_sums(const EvalContext& ctx, std::size_t max_terms);

/// Ramanujan's (pi/8) ln(2 + sqrt 3) + (3/8) sum_{n>=0} 1 / ((2n+1)^2 C(2n,n)).
SeriesEvaluation ramanujan_catalan(const EvalContext& ctx, std::size_t max_terms);
PartialSums ramanujan_partial_sums(const EvalContext& ctx, std::size_t max_terms);

/// Partial sums of sum_{k>=1} k^{-s} with no tail correction.
PartialSums naive_zeta_partial_sums(unsigned s, const EvalContext& ctx, std::size_t max_terms);

/*!
  beta(2n) from the polygamma identity

      beta(2n) = zeta(2n, 1/4) / (2 * 4^{2n-1}) - (2^{2n} - 1) |B_{2n}| pi^{2n} / (2 (2n)!)

  where psi^{(2n-1)}(1/4) / (2n-1)! has been replaced by the Hurwitz sum
  zeta(2n, 1/4) and |B_{2n}| = (-1)^{n-1} B_{2n}.
*/
Real kolbig_beta(unsigned n, const EvalContext& ctx);
OracleEstimate kolbig_beta_detailed(unsigned n, const EvalContext& ctx);

}  // namespace zetaseries
