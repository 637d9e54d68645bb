#include "zetaseries/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetaseries/errors.hpp"
#include "zetaseries/special_numbers.hpp"

namespace zetaseries {

namespace {

constexpr std::size_t kMaxCorrections = 500;

// log10 of the bound (K+1)^{-s} (1 + (K+1)/(s-1)) on sum_{k>K} k^{-s}.
double log10_power_tail(std::size_t last, unsigned s) {
  const double next = static_cast<double>(last) + 1.0;
  return -static_cast<double>(s) * std::log10(next) +
         std::log10(1.0 + next / static_cast<double>(s - 1));
}

Real reciprocal_power(const Real& base, unsigned s) {
  Real out = pow(base, static_cast<unsigned long>(s));
  mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

// Accumulates partial sums of a series given by successive terms until the
// term drops below epsilon * |sum| or `max_terms` terms have been added.
template <typename NextTerm>
PartialSums accumulate_partials(const Real& offset, const EvalContext& ctx, std::size_t max_terms,
                                NextTerm&& next_term) {
  PartialSums out;
  Real sum = offset;
  const Real eps = ctx.epsilon();
  for (std::size_t k = 0; k < max_terms; ++k) {
    Real term = next_term(k);
    sum += term;
    out.sums.push_back(sum);
    const bool small = abs(term) < eps * abs(sum);
    out.terms.push_back(std::move(term));
    if (small) {
      break;
    }
  }
  return out;
}

SeriesEvaluation evaluation_from_partials(const PartialSums& partials, const Rational& tail_ratio,
                                          const EvalContext& ctx) {
  SeriesEvaluation out;
  out.terms_used = partials.sums.size();
  out.value = partials.sums.back();
  out.last_term_magnitude = abs(partials.terms.back());
  out.tail_bound = out.last_term_magnitude * ctx.real(tail_ratio);
  const bool converged = out.last_term_magnitude < ctx.epsilon() * abs(out.value);
  out.status = converged ? SeriesStatus::converged : SeriesStatus::term_cap_reached;
  return out;
}

}  // namespace

double OracleEstimate::achieved_digits() const {
  const double scale = std::max(0.0, value.log10_abs());
  const double digits = scale - error_bound.log10_abs();
  return std::max(0.0, digits);
}

OracleEstimate hurwitz_direct(unsigned s, const Rational& a, const EvalContext& ctx,
                              const EulerMaclaurinOptions& options) {
  if (s < 2) {
    throw InvalidDomain("Hurwitz zeta sum requires s >= 2");
  }
  if (a <= 0) {
    throw InvalidDomain("Hurwitz zeta sum requires a > 0");
  }
  const std::size_t direct =
      options.direct_terms > 0
          ? options.direct_terms
          : std::max<std::size_t>(20, ctx.precision().working_digits() + s);

  const Real shift = ctx.real(a);
  Real sum = ctx.real(0);
  for (std::size_t k = direct; k-- > 0;) {
    sum += reciprocal_power(shift + static_cast<long>(k), s);
  }

  // Tail from k = direct onward: integral, half end term, Bernoulli corrections.
  const Real b = shift + static_cast<long>(direct);
  const Real b_inverse_squared = 1 / (b * b);
  Real b_power = reciprocal_power(b, s);  // b^{-s}
  sum += b_power * b / static_cast<long>(s - 1);
  sum += b_power / 2;

  b_power /= b;                           // b^{-s-1}
  BigInt rising(s);                       // (s)_{2j-1}
  const Real eps = ctx.epsilon();
  Real error = ctx.real(0);
  Real previous = ctx.real(0);
  bool stopped = false;
  for (std::size_t j = 1; j <= kMaxCorrections; ++j) {
    Rational coefficient = bernoulli(static_cast<unsigned>(2 * j)) * Rational(rising) /
                           Rational(factorial(static_cast<unsigned>(2 * j)));
    coefficient.canonicalize();
    const Real correction = ctx.real(coefficient) * b_power;
    const Real magnitude = abs(correction);
    const bool fixed = options.correction_terms > 0;
    if (fixed ? j > options.correction_terms : magnitude < eps * abs(sum)) {
      error = magnitude;
      stopped = true;
      break;
    }
    if (!fixed && j > 1 && magnitude > previous) {
      // Asymptotic series has started to diverge; the smallest term bounds it.
      error = previous;
      stopped = true;
      break;
    }
    sum += correction;
    previous = magnitude;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    b_power *= b_inverse_squared;
  }
  if (!stopped) {
    error = previous;
  }
  error += eps * abs(sum) * 4;
  return OracleEstimate{std::move(sum), std::move(error), direct};
}

OracleEstimate zeta_direct_detailed(unsigned s, const EvalContext& ctx,
                                    const EulerMaclaurinOptions& options) {
  if (s < 2) {
    throw InvalidDomain("zeta_direct(s) requires s >= 2 (s = 1 is the pole)");
  }
  return hurwitz_direct(s, Rational(1), ctx, options);
}

Real zeta_direct(unsigned s, const EvalContext& ctx) {
  return zeta_direct_detailed(s, ctx).value;
}

OracleEstimate beta_direct_detailed(unsigned s, const EvalContext& ctx, std::size_t terms) {
  if (s < 1) {
    throw InvalidDomain("beta_direct(s) requires s >= 1");
  }
  const auto n = static_cast<long>(
      terms > 0 ? terms
                : static_cast<std::size_t>(std::ceil(1.31 * ctx.precision().working_digits())) + 5);

  const Real base = 3 + sqrt(ctx.real(8));
  Real d = pow(base, static_cast<unsigned long>(n));
  const Real bound = 2 / d;
  d = (d + 1 / d) / 2;
  Real b = ctx.real(-1);
  Real c = -d;
  Real sum = ctx.real(0);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    sum += c * reciprocal_power(ctx.real(2 * k + 1), s);
    // b *= (k+n)(k-n) / ((k+1/2)(k+1))
    b *= 2 * (k + n) * (k - n);
    b /= (2 * k + 1) * (k + 1);
  }
  Real value = sum / d;
  Real error = bound + ctx.epsilon() * 4;
  return OracleEstimate{std::move(value), std::move(error), static_cast<std::size_t>(n)};
}

Real beta_direct(unsigned s, const EvalContext& ctx) {
  return beta_direct_detailed(s, ctx).value;
}

OracleEstimate clausen_direct(unsigned m, const Real& theta, const EvalContext& ctx,
                              std::size_t max_terms) {
  if (m < 1) {
    throw InvalidDomain("clausen_direct requires m >= 1");
  }
  const unsigned s = 2 * m;
  const double target = -static_cast<double>(ctx.precision().working_digits());
  std::size_t terms = 1;
  while (terms < max_terms && log10_power_tail(terms, s) >= target) {
    terms = std::min(max_terms, terms < 64 ? terms + 1 : terms + terms / 8);
  }

  const Real angle = theta.rounded_to(ctx.bits());
  Real sum = ctx.real(0);
  for (std::size_t k = terms; k >= 1; --k) {
    const Real kk = ctx.real(static_cast<long>(k));
    sum += sin(angle * kk) * reciprocal_power(kk, s);
  }
  Real error =
      power_of_ten(static_cast<long>(std::floor(log10_power_tail(terms, s))) + 1, ctx.bits());
  error += ctx.epsilon() * static_cast<long>(4);
  return OracleEstimate{std::move(sum), std::move(error), terms};
}

OracleEstimate clausen_direct_turns(unsigned m, const Rational& turns, const EvalContext& ctx) {
  if (m < 1) {
    throw InvalidDomain("clausen_direct requires m >= 1");
  }
  Rational reduced = turns;
  reduced.canonicalize();
  const BigInt& q_big = reduced.get_den();
  if (!q_big.fits_ulong_p() || q_big > 1'000'000) {
    throw InvalidDomain("clausen_direct_turns supports denominators up to 10^6");
  }
  const unsigned long q = q_big.get_ui();
  BigInt p_mod = reduced.get_num() % q_big;
  if (p_mod < 0) {
    p_mod += q_big;
  }
  const unsigned long p = p_mod.get_ui();
  const unsigned s = 2 * m;

  const Real two_pi = 2 * ctx.pi();
  Real sum = ctx.real(0);
  Real error = ctx.real(0);
  std::size_t terms = 0;
  for (unsigned long r = 1; r <= q; ++r) {
    const unsigned long phase = (p * r) % q;  // sin(2 pi phase / q)
    if ((2 * phase) % q == 0) {
      continue;
    }
    const Real sine = sin(two_pi * static_cast<long>(phase) / static_cast<long>(q));
    const OracleEstimate part = hurwitz_direct(s, Rational(r, q), ctx);
    sum += sine * part.value;
    error += part.error_bound;
    terms += part.terms;
  }
  const Real scale = reciprocal_power(ctx.real(static_cast<long>(q)), s);
  Real value = sum * scale;
  Real total_error = error * scale + ctx.epsilon() * static_cast<long>(4);
  return OracleEstimate{std::move(value), std::move(total_error), terms};
}

PartialSums apery_partial_sums(const EvalContext& ctx, std::size_t max_terms) {
  BigInt central(1);  // C(2k, k), starts at k = 0
  return accumulate_partials(
      ctx.real(0), ctx, max_terms, [&](std::size_t index) {
        const unsigned long k = index + 1;
        central *= 2 * (2 * k - 1);
        mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(), k);
        BigInt denominator = central * k * k * k;
        Rational term(BigInt(5), denominator * 2);
        term.canonicalize();
        if (k % 2 == 0) {
          term = -term;
        }
        return ctx.real(term);
      });
}

SeriesEvaluation apery_series(const EvalContext& ctx, std::size_t max_terms) {
  if (max_terms < 1) {
    throw InvalidDomain("apery_series needs max_terms >= 1");
  }
  // Alternating with term ratio below 1/4: the next term bounds the error.
  return evaluation_from_partials(apery_partial_sums(ctx, max_terms), Rational(1, 4), ctx);
}

PartialSums ramanujan_partial_sums(const EvalContext& ctx, std::size_t max_terms) {
  const Real offset = ctx.pi() / 8 * log(2 + sqrt(ctx.real(3)));
  BigInt central(1);  // C(2n, n)
  return accumulate_partials(offset, ctx, max_terms, [&](std::size_t n) {
    if (n > 0) {
      central *= 2 * (2 * n - 1);
      mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(), n);
    }
    const unsigned long odd = 2 * n + 1;
    Rational term(BigInt(3), central * odd * odd * 8);
    term.canonicalize();
    return ctx.real(term);
  });
}

SeriesEvaluation ramanujan_catalan(const EvalContext& ctx, std::size_t max_terms) {
  if (max_terms < 1) {
    throw InvalidDomain("ramanujan_catalan needs max_terms >= 1");
  }
  // Positive terms with ratio below 1/4: tail <= term / 3.
  return evaluation_from_partials(ramanujan_partial_sums(ctx, max_terms), Rational(1, 3), ctx);
}

PartialSums naive_zeta_partial_sums(unsigned s, const EvalContext& ctx, std::size_t max_terms) {
  if (s < 2) {
    throw InvalidDomain("naive zeta sum requires s >= 2");
  }
  return accumulate_partials(ctx.real(0), ctx, max_terms, [&](std::size_t index) {
    return reciprocal_power(ctx.real(static_cast<long>(index + 1)), s);
  });
}

OracleEstimate kolbig_beta_detailed(unsigned n, const EvalContext& ctx) {
  if (n < 1) {
    throw InvalidDomain("kolbig_beta(n) requires n >= 1");
  }
  const unsigned s = 2 * n;
  const OracleEstimate hurwitz = hurwitz_direct(s, Rational(1, 4), ctx);

  BigInt four_power(1);
  four_power <<= 2 * (s - 1);  // 4^{2n-1}
  const Real first = hurwitz.value / ctx.real(BigInt(four_power * 2));

  Rational abs_bernoulli = bernoulli(s);
  if (n % 2 == 0) {
    abs_bernoulli = -abs_bernoulli;  // (-1)^{n-1} B_{2n}
  }
  BigInt two_power(1);
  two_power <<= s;
  Rational coefficient = Rational(two_power - 1) * abs_bernoulli / Rational(factorial(s) * 2);
  coefficient.canonicalize();
  const Real second = ctx.real(coefficient) * pow(ctx.pi(), static_cast<unsigned long>(s));

  Real value = first - second;
  Real error = hurwitz.error_bound / ctx.real(BigInt(four_power * 2)) + ctx.epsilon() * static_cast<long>(4);
  return OracleEstimate{std::move(value), std::move(error), hurwitz.terms};
}

Real kolbig_beta(unsigned n, const EvalContext& ctx) { return kolbig_beta_detailed(n, ctx).value; }

}  // namespace zetaseries
