#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zetaseries/context.hpp"
#include "zetaseries/real.hpp"

namespace zetaseries {

/*!
  Parameters of the master zeta series

      S(m, x) = sum_{k>=1} (2k-1)! / (2m+2k-1)! * zeta(2k) * x^{2k}

  with m >= 1 and 0 < |x| <= 1 (equivalently theta = 2 pi x, 0 < |theta| <= 2 pi).
*/
class MasterSeriesParams {
 public:
  /// Throws InvalidDomain when m = 0, x = 0 or |x| > 1.
  MasterSeriesParams(unsigned m, Real x);

  unsigned m() const { return m_; }
  const Real& x() const { return x_; }

 private:
  unsigned m_;
  Real x_;
};

enum class SeriesStatus {
  converged,        ///< tail bound fell below the working epsilon
  fixed_truncation, ///< caller asked for an exact number of terms
  term_cap_reached, ///< truncation warning: the max-term cap bound first
};

struct SeriesOptions {
  std::size_t max_terms = 1'000'000;
  /// When set, sum exactly this many terms and skip the stopping rule.
  std::optional<std::size_t> fixed_terms;
};

struct SeriesEvaluation {
  Real value;
  std::size_t terms_used = 0;
  Real last_term_magnitude;
  /// Upper bound on the omitted tail (geometric bound for |x| < 1, integral
  /// bound at |x| = 1).
  Real tail_bound;
  SeriesStatus status = SeriesStatus::converged;

  bool truncation_warning() const { return status == SeriesStatus::term_cap_reached; }
};

/*!
  Evaluates the master series.

  The coefficient (2k-1)!/(2m+2k-1)! = 1/[(2k)(2k+1)...(2k+2m-1)] is kept as an
  exact integer denominator updated term to term. Summation stops once the
  current term and the tail bound term * x^2/(1-x^2) both fall below
  epsilon * sum; every term is positive, so the partial sums increase.
*/
SeriesEvaluation master_series(const MasterSeriesParams& params, const EvalContext& ctx,
                               const SeriesOptions& options = {});

/// Successive partial sums of a series with the terms that produced them.
struct PartialSums {
  std::vector<Real> sums;
  std::vector<Real> terms;
};

/// Partial sums S_1, S_2, ... up to convergence or `max_terms`.
PartialSums master_partial_sums(const MasterSeriesParams& params, const EvalContext& ctx,
                                      std::size_t max_terms);

/// A constant obtained by solving one of the identities for it, together with
/// the master-series evaluation that fed the solve.
struct SolvedValue {
  Real value;
  SeriesEvaluation series;
  /// Tail bound propagated through the solve plus a rounding allowance.
  Real error_estimate;
};

// --- identity solves for a given master-series value ------------------------

/// zeta(2n+1) from the theta = pi instance of the Clausen identity with
/// m = n + 1, given S(n+1, 1/2).
Real solve_zeta_odd(unsigned n, const Real& series_value, const EvalContext& ctx);

/// beta(2n) from the second zeta-series identity, given S(n, 1/4).
Real solve_beta_even(unsigned n, const Real& series_value, const EvalContext& ctx);

/// Cl_{2m}(theta) from the Clausen identity, given S(m, theta / 2pi).
Real solve_clausen_even(unsigned m, const Real& theta, const Real& series_value,
                        const EvalContext& ctx);

/// Multiplier applied to S in the Clausen solve: 2 |theta|^{2m-1}.
Real clausen_series_sensitivity(unsigned m, const Real& theta);

// --- constants --------------------------------------------------------------

/// zeta(2n+1), n >= 1, computed bottom-up and cached in the context.
Real zeta_odd(unsigned n, const EvalContext& ctx);
SolvedValue zeta_odd_detailed(unsigned n, const EvalContext& ctx,
                              const SeriesOptions& options = {});

/// zeta(2n+1) from the first zeta-series identity rearranged as stated
/// (ln pi, H_{2n+1}, alternating lower odd zetas). Independent coding of the
/// same specialization used by zeta_odd.
Real zeta_odd_first_series(unsigned n, const EvalContext& ctx);

/// beta(2n), n >= 1.
Real beta_even(unsigned n, const EvalContext& ctx);
SolvedValue beta_even_detailed(unsigned n, const EvalContext& ctx,
                               const SeriesOptions& options = {});

/// Cl_{2m}(theta) for 0 < |theta| <= 2 pi.
Real clausen_even(unsigned m, const Real& theta, const EvalContext& ctx);
SolvedValue clausen_even_detailed(unsigned m, const Real& theta, const EvalContext& ctx,
                                  const SeriesOptions& options = {});

}  // namespace zetaseries
