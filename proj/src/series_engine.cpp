#include "zetaseries/series_engine.hpp"

#include <algorithm>
#include <string>

#include "zetaseries/errors.hpp"
#include "zetaseries/special_numbers.hpp"

namespace zetaseries {

namespace {

Real signed_unit(unsigned exponent, const EvalContext& ctx) {
  return ctx.real(exponent % 2 == 0 ? 1L : -1L);
}

Real reciprocal_factorial(unsigned n, const EvalContext& ctx) {
  return ctx.real(Rational(BigInt(1), factorial(n)));
}

// The bracket of the Clausen identity
//   (ln|theta| - H_{2m-1})/(2m-1)! - sum_{k=1}^{top} (-1)^k zeta(2k+1)/((2m-2k-1)! theta^{2k}) - 2S
// with top = m - 1 for Clausen values and top = m - 2 when zeta(2m-1) is the unknown.
Real clausen_bracket(unsigned m, const Real& theta, const Real& series_value, unsigned top,
                     const EvalContext& ctx) {
  const unsigned odd = 2 * m - 1;
  Real bracket = (log(abs(theta)) - ctx.real(harmonic(odd))) * reciprocal_factorial(odd, ctx);
  for (unsigned k = 1; k <= top; ++k) {
    const Real term = zeta_odd(k, ctx) * reciprocal_factorial(odd - 2 * k, ctx) /
                      pow(theta, static_cast<unsigned long>(2 * k));
    if (k % 2 == 0) {
      bracket -= term;
    } else {
      bracket += term;
    }
  }
  bracket -= 2 * series_value;
  return bracket;
}

// Bound on the sum over j > k of (2j)^{-2m} zeta(2j), used when |x| = 1.
Real polynomial_tail_bound(unsigned m, std::size_t k, const Real& zeta_k, const EvalContext& ctx) {
  Real base = ctx.real(static_cast<long>(2 * k));
  return zeta_k / (pow(base, static_cast<unsigned long>(2 * m - 1)) * static_cast<long>(2 * (2 * m - 1)));
}

Real rounding_allowance(const Real& sensitivity, unsigned terms, const EvalContext& ctx) {
  Real scale = abs(sensitivity);
  if (scale < 1) {
    scale = ctx.real(1);
  }
  return ctx.epsilon() * scale * static_cast<long>(terms + 2);
}

void require_positive(unsigned n, const char* what) {
  if (n < 1) {
    throw InvalidDomain(std::string(what) + " requires n >= 1");
  }
}

}  // namespace

MasterSeriesParams::MasterSeriesParams(unsigned m, Real x) : m_(m), x_(std::move(x)) {
  if (m_ < 1) {
    throw InvalidDomain("master series order m must be >= 1");
  }
  if (x_.is_zero() || !x_.is_finite()) {
    throw InvalidDomain("master series argument x must be non-zero");
  }
  if (abs(x_) > 1) {
    throw InvalidDomain("master series argument must satisfy |x| <= 1, got " +
                        x_.to_scientific(10));
  }
}

namespace {

// Walks the series; `visit` sees each partial sum. Returns the evaluation.
template <typename Visit>
SeriesEvaluation walk_master_series(const MasterSeriesParams& params, const EvalContext& ctx,
                                    const SeriesOptions& options, Visit&& visit) {
  const unsigned m = params.m();
  const Real x = params.x().rounded_to(ctx.bits());
  const Real x2 = x * x;
  const bool endpoint = x2 == 1;
  const Real geometric_factor = endpoint ? ctx.real(0) : x2 / (1 - x2);
  const Real eps = ctx.epsilon();

  const std::size_t cap =
      options.fixed_terms ? std::min(*options.fixed_terms, options.max_terms) : options.max_terms;
  if (cap < 1) {
    throw InvalidDomain("master series needs at least one term");
  }

  // denominator = (2k)(2k+1)...(2k+2m-1), starting at k = 1: (2m+1)!.
  BigInt denominator = factorial(2 * m + 1);
  Real power = x2;
  Real sum = ctx.real(0);
  Real term = ctx.real(0);
  Real tail = ctx.real(0);
  std::size_t k = 1;
  SeriesStatus status = SeriesStatus::term_cap_reached;

  for (;; ++k) {
    const Real zeta = zeta_even(static_cast<unsigned>(k), ctx);
    term = zeta * power / ctx.real(denominator);
    sum += term;
    visit(sum, term);

    tail = endpoint ? polynomial_tail_bound(m, k, zeta, ctx) : term * geometric_factor;
    if (options.fixed_terms && k == *options.fixed_terms) {
      status = SeriesStatus::fixed_truncation;
      break;
    }
    if (!options.fixed_terms) {
      const Real threshold = eps * sum;
      if (term < threshold && tail < threshold) {
        status = SeriesStatus::converged;
        break;
      }
    }
    if (k >= cap) {
      status = SeriesStatus::term_cap_reached;
      break;
    }

    power *= x2;
    const unsigned long two_k = 2 * k;
    denominator *= (two_k + 2 * m) * (two_k + 2 * m + 1);
    mpz_divexact_ui(denominator.get_mpz_t(), denominator.get_mpz_t(), two_k * (two_k + 1));
  }

  return SeriesEvaluation{std::move(sum), k, std::move(term), std::move(tail), status};
}

}  // namespace

SeriesEvaluation master_series(const MasterSeriesParams& params, const EvalContext& ctx,
                               const SeriesOptions& options) {
  return walk_master_series(params, ctx, options, [](const Real&, const Real&) {});
}

PartialSums master_partial_sums(const MasterSeriesParams& params, const EvalContext& ctx,
                                std::size_t max_terms) {
  PartialSums out;
  SeriesOptions options;
  options.max_terms = max_terms;
  walk_master_series(params, ctx, options, [&](const Real& sum, const Real& term) {
    out.sums.push_back(sum);
    out.terms.push_back(term);
  });
  return out;
}

Real solve_zeta_odd(unsigned n, const Real& series_value, const EvalContext& ctx) {
  require_positive(n, "zeta_odd(n) (zeta(1) is the simple pole at s = 1)");
  const Real bracket = clausen_bracket(n + 1, ctx.pi(), series_value, n - 1, ctx);
  return signed_unit(n, ctx) * pow(ctx.pi(), static_cast<unsigned long>(2 * n)) * bracket;
}

Real solve_clausen_even(unsigned m, const Real& theta, const Real& series_value,
                        const EvalContext& ctx) {
  require_positive(m, "clausen_even(m, theta)");
  const Real bracket = clausen_bracket(m, theta, series_value, m - 1, ctx);
  return signed_unit(m, ctx) * pow(theta, static_cast<unsigned long>(2 * m - 1)) * bracket;
}

Real clausen_series_sensitivity(unsigned m, const Real& theta) {
  return 2 * pow(abs(theta), static_cast<unsigned long>(2 * m - 1));
}

Real solve_beta_even(unsigned n, const Real& series_value, const EvalContext& ctx) {
  require_positive(n, "beta_even(n)");
  const Real half_pi = ctx.pi() / 2;
  const Real two_over_pi = 2 / ctx.pi();
  const unsigned odd = 2 * n - 1;

  Real bracket = (log(half_pi) - ctx.real(harmonic(odd))) * reciprocal_factorial(odd, ctx);
  for (unsigned m = 1; m < n; ++m) {
    const Real term = signed_unit(m, ctx) * pow(two_over_pi, static_cast<unsigned long>(2 * m)) *
                      zeta_odd(m, ctx) * reciprocal_factorial(2 * n - 2 * m - 1, ctx);
    bracket -= term;
  }
  bracket -= 2 * series_value;
  return signed_unit(n, ctx) * pow(half_pi, static_cast<unsigned long>(odd)) * bracket;
}

SolvedValue zeta_odd_detailed(unsigned n, const EvalContext& ctx, const SeriesOptions& options) {
  require_positive(n, "zeta_odd(n) (zeta(1) is the simple pole at s = 1)");
  // Lower odd zetas first so the recursion runs bottom-up through the cache.
  for (unsigned k = 1; k < n; ++k) {
    zeta_odd(k, ctx);
  }
  SeriesEvaluation series =
      master_series(MasterSeriesParams(n + 1, ctx.real(Rational(1, 2))), ctx, options);
  Real value = solve_zeta_odd(n, series.value, ctx);
  const Real sensitivity = 2 * pow(ctx.pi(), static_cast<unsigned long>(2 * n));
  Real error = sensitivity * series.tail_bound + rounding_allowance(sensitivity, n + 2, ctx);
  if (series.status == SeriesStatus::fixed_truncation) {
    // A caller-imposed truncation is only bounded by the omitted tail.
    error = sensitivity * series.tail_bound;
  }
  return SolvedValue{std::move(value), std::move(series), std::move(error)};
}

Real zeta_odd(unsigned n, const EvalContext& ctx) {
  require_positive(n, "zeta_odd(n) (zeta(1) is the simple pole at s = 1)");
  if (auto cached = ctx.cached_odd_zeta(n)) {
    return *cached;
  }
  Real value = zeta_odd_detailed(n, ctx).value;
  ctx.remember_odd_zeta(n, value);
  return value;
}

Real zeta_odd_first_series(unsigned n, const EvalContext& ctx) {
  require_positive(n, "zeta_odd(n) (zeta(1) is the simple pole at s = 1)");
  const Real pi = ctx.pi();
  const Real ln_pi = log(pi);
  // Private bottom-up recursion, independent of the context cache.
  std::vector<Real> odd_zetas;  // odd_zetas[j-1] = zeta(2j+1)
  for (unsigned level = 1; level <= n; ++level) {
    const unsigned top = 2 * level + 1;
    const Real series =
        master_series(MasterSeriesParams(level + 1, ctx.real(Rational(1, 2))), ctx).value;
    Real rest = 2 * series - (ln_pi - ctx.real(harmonic(top))) * reciprocal_factorial(top, ctx);
    for (unsigned j = 1; j < level; ++j) {
      // (-1)^{j+1} zeta(2j+1) / (pi^{2j} (2level-2j+1)!)
      const Real term = odd_zetas[j - 1] / pow(pi, static_cast<unsigned long>(2 * j)) *
                        reciprocal_factorial(2 * level - 2 * j + 1, ctx);
      if (j % 2 == 1) {
        rest -= term;
      } else {
        rest += term;
      }
    }
    odd_zetas.push_back(signed_unit(level + 1, ctx) *
                        pow(pi, static_cast<unsigned long>(2 * level)) * rest);
  }
  return odd_zetas.back();
}

SolvedValue beta_even_detailed(unsigned n, const EvalContext& ctx, const SeriesOptions& options) {
  require_positive(n, "beta_even(n)");
  SeriesEvaluation series =
      master_series(MasterSeriesParams(n, ctx.real(Rational(1, 4))), ctx, options);
  Real value = solve_beta_even(n, series.value, ctx);
  const Real sensitivity = 2 * pow(ctx.pi() / 2, static_cast<unsigned long>(2 * n - 1));
  Real error = sensitivity * series.tail_bound;
  if (series.status != SeriesStatus::fixed_truncation) {
    error += rounding_allowance(sensitivity, n + 2, ctx);
  }
  return SolvedValue{std::move(value), std::move(series), std::move(error)};
}

Real beta_even(unsigned n, const EvalContext& ctx) { return beta_even_detailed(n, ctx).value; }

SolvedValue clausen_even_detailed(unsigned m, const Real& theta, const EvalContext& ctx,
                                  const SeriesOptions& options) {
  require_positive(m, "clausen_even(m, theta)");
  const Real two_pi = 2 * ctx.pi();
  if (theta.is_zero() || !theta.is_finite() || abs(theta) > two_pi) {
    throw InvalidDomain("clausen_even requires 0 < |theta| <= 2 pi");
  }
  Real x = theta.rounded_to(ctx.bits()) / two_pi;
  if (abs(x) > 1) {
    x = ctx.real(x.sign() > 0 ? 1L : -1L);
  }
  SeriesEvaluation series = master_series(MasterSeriesParams(m, std::move(x)), ctx, options);
  Real value = solve_clausen_even(m, theta.rounded_to(ctx.bits()), series.value, ctx);
  const Real sensitivity = clausen_series_sensitivity(m, theta);
  Real error = sensitivity * series.tail_bound;
  if (series.status != SeriesStatus::fixed_truncation) {
    error += rounding_allowance(sensitivity, m + 2, ctx);
  }
  return SolvedValue{std::move(value), std::move(series), std::move(error)};
}

Real clausen_even(unsigned m, const Real& theta, const EvalContext& ctx) {
  return clausen_even_detailed(m, theta, ctx).value;
}

}  // namespace zetaseries
