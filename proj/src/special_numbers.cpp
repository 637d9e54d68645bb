#include "zetaseries/special_numbers.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "zetaseries/errors.hpp"

namespace zetaseries {

namespace {

// Above this index zeta(2n) is so close to 1 that caching buys nothing.
constexpr unsigned kEvenZetaCacheLimit = 4096;
constexpr unsigned long kDirectSumTermLimit = 10'000'000;

std::mutex& table_mutex() {
  static std::mutex mutex;
  return mutex;
}

std::vector<Rational>& bernoulli_table() {
  static std::vector<Rational> table{Rational(1)};
  return table;
}

std::vector<BigInt>& euler_table() {
  // Even-index Euler numbers only: entry k holds E_{2k}.
  static std::vector<BigInt> table{BigInt(1)};
  return table;
}

// log10 of the bound (J+1)^{-s} (1 + (J+1)/(s-1)) on sum_{j>J} j^{-s}.
double log10_tail_bound(unsigned long last_term, unsigned s) {
  const double next = static_cast<double>(last_term) + 1.0;
  return -static_cast<double>(s) * std::log10(next) +
         std::log10(1.0 + next / static_cast<double>(s - 1));
}

unsigned long direct_sum_length(unsigned s, double target_log10) {
  unsigned long hi = 1;
  while (log10_tail_bound(hi, s) >= target_log10) {
    if (hi > kDirectSumTermLimit) {
      throw NoConvergence("direct zeta sum would need more than 10^7 terms");
    }
    hi *= 2;
  }
  unsigned long lo = hi / 2;  // bound(lo) fails unless lo == 0
  if (lo == 0) {
    return hi;
  }
  while (hi - lo > 1) {
    const unsigned long mid = lo + (hi - lo) / 2;
    (log10_tail_bound(mid, s) < target_log10 ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational bernoulli(unsigned n) {
  std::lock_guard lock(table_mutex());
  auto& table = bernoulli_table();
  for (auto i = static_cast<unsigned>(table.size()); i <= n; ++i) {
    if (i > 1 && i % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    Rational sum(0);
    for (unsigned j = 0; j < i; ++j) {
      if (table[j] != 0) {
        sum += Rational(binomial(i + 1, j)) * table[j];
      }
    }
    Rational value = -sum / Rational(i + 1);
    value.canonicalize();
    table.push_back(std::move(value));
  }
  return table[n];
}

Rational bernoulli_recurrence_residual(unsigned n) {
  Rational sum(0);
  for (unsigned j = 0; j <= n; ++j) {
    sum += Rational(binomial(n + 1, j)) * bernoulli(j);
  }
  sum.canonicalize();
  return sum;
}

BigInt euler_number(unsigned n) {
  if (n % 2 == 1) {
    return BigInt(0);
  }
  const unsigned half = n / 2;
  std::lock_guard lock(table_mutex());
  auto& table = euler_table();
  // sum_{j=0}^{k} C(2k, 2j) E_{2j} = 0 for k >= 1.
  for (auto k = static_cast<unsigned>(table.size()); k <= half; ++k) {
    BigInt sum(0);
    for (unsigned j = 0; j < k; ++j) {
      sum += binomial(2 * k, 2 * j) * table[j];
    }
    table.push_back(-sum);
  }
  return table[half];
}

Rational harmonic(unsigned n) {
  if (n == 0) {
    throw InvalidDomain("harmonic number H_n requires n >= 1");
  }
  Rational sum(0);
  for (unsigned k = 1; k <= n; ++k) {
    sum += Rational(1, k);
  }
  sum.canonicalize();
  return sum;
}

bool harmonic_binomial_identity_check(unsigned n) {
  if (n == 0) {
    throw InvalidDomain("harmonic-binomial identity is stated for n >= 1");
  }
  const unsigned top = 2 * n + 1;
  Rational sum(0);
  for (unsigned l = 1; l <= top; ++l) {
    Rational term(binomial(top, l), BigInt(l));
    term.canonicalize();
    sum += (l % 2 == 0) ? term : Rational(-term);
  }
  sum.canonicalize();
  return harmonic(top) == -sum;
}

Real zeta_even_closed_form(unsigned n, const EvalContext& ctx) {
  if (n == 0) {
    throw InvalidDomain("zeta_even(n) requires n >= 1");
  }
  const unsigned s = 2 * n;
  BigInt two_power(1);
  two_power <<= (s - 1);
  Rational coefficient = Rational(two_power) * bernoulli(s) / Rational(factorial(s));
  coefficient.canonicalize();
  if (n % 2 == 0) {
    coefficient = -coefficient;
  }
  return ctx.real(coefficient) * pow(ctx.pi(), static_cast<unsigned long>(s));
}

Real zeta_even_direct_sum(unsigned n, const EvalContext& ctx) {
  if (n == 0) {
    throw InvalidDomain("zeta_even(n) requires n >= 1");
  }
  const unsigned s = 2 * n;
  const double target = -static_cast<double>(ctx.precision().working_digits() + 1);
  const unsigned long terms = direct_sum_length(s, target);

  Real sum = ctx.real(0);
  Real term(ctx.bits());
  // Smallest terms first.
  for (unsigned long j = terms; j >= 1; --j) {
    mpfr_ui_pow_ui(term.get(), j, s, MPFR_RNDN);
    mpfr_ui_div(term.get(), 1, term.get(), MPFR_RNDN);
    sum += term;
  }
  return sum;
}

Real zeta_even(unsigned n, const EvalContext& ctx) {
  if (n == 0) {
    throw InvalidDomain("zeta_even(n) requires n >= 1");
  }
  if (auto cached = ctx.cached_even_zeta(n)) {
    return *cached;
  }
  const bool use_direct = 3 * (2 * n) > ctx.precision().working_digits();
  Real value = use_direct ? zeta_even_direct_sum(n, ctx) : zeta_even_closed_form(n, ctx);
  if (n <= kEvenZetaCacheLimit) {
    ctx.remember_even_zeta(n, value);
  }
  return value;
}

Real beta_odd(unsigned n, const EvalContext& ctx) {
  const unsigned s = 2 * n;
  BigInt denominator = factorial(s);
  denominator <<= (s + 2);
  Rational coefficient(euler_number(s), denominator);
  coefficient.canonicalize();
  if (n % 2 == 1) {
    coefficient = -coefficient;
  }
  return ctx.real(coefficient) * pow(ctx.pi(), static_cast<unsigned long>(s + 1));
}

}  // namespace zetaseries
