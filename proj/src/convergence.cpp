#include "zetaseries/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "zetaseries/errors.hpp"
#include "zetaseries/oracles.hpp"

namespace zetaseries {

namespace {

// log10 of the model envelope; doubles are plenty for locating a crossing.
double log10_envelope(std::size_t k, unsigned n, double log10_abs_x) {
  const double two_k = 2.0 * static_cast<double>(k);
  return two_k * log10_abs_x - (2.0 * n + 2.0) * std::log10(two_k);
}

std::string rational_label(const Rational& x) { return x.get_str(); }

// Maps a master-series value to the constant the identity solves for.
std::function<Real(const Real&, const EvalContext&)> master_solver(unsigned m, const Rational& x) {
  if (x == Rational(1, 2) && m >= 2) {
    return [m](const Real& s, const EvalContext& ctx) { return solve_zeta_odd(m - 1, s, ctx); };
  }
  if (x == Rational(1, 4)) {
    return [m](const Real& s, const EvalContext& ctx) { return solve_beta_even(m, s, ctx); };
  }
  return [m, x](const Real& s, const EvalContext& ctx) {
    return solve_clausen_even(m, 2 * ctx.pi() * ctx.real(x), s, ctx);
  };
}

SeriesHandle solved_master_handle(std::string id, unsigned m, const Rational& x,
                                  std::function<Real(const EvalContext&)> reference) {
  SeriesHandle handle;
  handle.id = std::move(id);
  auto solve = master_solver(m, x);
  handle.partials = [m, x, solve](const EvalContext& ctx, std::size_t max_terms) {
    PartialSums trace = master_partial_sums(MasterSeriesParams(m, ctx.real(x)), ctx, max_terms);
    for (auto& sum : trace.sums) {
      sum = solve(sum, ctx);
    }
    return trace;
  };
  handle.reference = std::move(reference);
  handle.model_order = m - 1;
  handle.model_x = x;
  return handle;
}

}  // namespace

Real predicted_magnitude(std::size_t k, unsigned n, const Real& x) {
  if (k < 1) {
    throw InvalidDomain("predicted_magnitude requires k >= 1");
  }
  const Real two_k(static_cast<long>(2 * k), x.precision());
  return pow(x, static_cast<unsigned long>(2 * k)) /
         pow(two_k, static_cast<unsigned long>(2 * n + 2));
}

std::size_t predicted_terms(unsigned digits, unsigned n, const Real& x, std::size_t cap) {
  if (x.is_zero() || abs(x) > 1) {
    throw InvalidDomain("predicted_terms requires 0 < |x| <= 1");
  }
  const double log10_x = x.log10_abs();
  const double target = -static_cast<double>(digits);
  auto below = [&](std::size_t k) { return log10_envelope(k, n, log10_x) < target; };
  if (!below(cap)) {
    return cap;
  }
  // The envelope decreases in k, so bracket and bisect.
  std::size_t hi = 1;
  while (!below(hi)) {
    hi = std::min(cap, hi * 2);
  }
  std::size_t lo = hi / 2;
  if (lo == 0) {
    return hi;
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (below(mid) ? hi : lo) = mid;
  }
  return hi;
}

bool agrees_to_digits(const Real& value, const Real& reference, unsigned digits) {
  Real scale = abs(reference);
  if (scale < 1) {
    scale = Real(1, reference.precision());
  }
  const Real tolerance =
      power_of_ten(-static_cast<long>(digits), std::max(value.precision(), reference.precision())) *
      scale / 2;
  return abs(value - reference) < tolerance;
}

SeriesHandle master_series_handle(unsigned m, const Rational& x, MasterTarget target) {
  if (target == MasterTarget::solved_constant) {
    auto solve = master_solver(m, x);
    return solved_master_handle(
        "master(m=" + std::to_string(m) + ",x=" + rational_label(x) + ")", m, x,
        [m, x, solve](const EvalContext& ctx) {
          return solve(master_series(MasterSeriesParams(m, ctx.real(x)), ctx).value, ctx);
        });
  }
  SeriesHandle handle;
  handle.id = "master-series(m=" + std::to_string(m) + ",x=" + rational_label(x) + ")";
  handle.partials = [m, x](const EvalContext& ctx, std::size_t max_terms) {
    return master_partial_sums(MasterSeriesParams(m, ctx.real(x)), ctx, max_terms);
  };
  handle.reference = [m, x](const EvalContext& ctx) {
    return master_series(MasterSeriesParams(m, ctx.real(x)), ctx).value;
  };
  handle.model_order = m - 1;
  handle.model_x = x;
  return handle;
}

SeriesHandle master_zeta3_handle() {
  return solved_master_handle("paper-zeta3", 2, Rational(1, 2),
                              [](const EvalContext& ctx) { return zeta_direct(3, ctx); });
}

SeriesHandle master_catalan_handle() {
  return solved_master_handle("paper-catalan", 1, Rational(1, 4),
                              [](const EvalContext& ctx) { return beta_direct(2, ctx); });
}

SeriesHandle apery_handle(std::size_t max_terms) {
  SeriesHandle handle;
  handle.id = "apery";
  handle.partials = [](const EvalContext& ctx, std::size_t cap) {
    return apery_partial_sums(ctx, cap);
  };
  handle.reference = [](const EvalContext& ctx) { return zeta_direct(3, ctx); };
  handle.max_terms = max_terms;
  return handle;
}

SeriesHandle ramanujan_handle(std::size_t max_terms) {
  SeriesHandle handle;
  handle.id = "ramanujan";
  handle.partials = [](const EvalContext& ctx, std::size_t cap) {
    return ramanujan_partial_sums(ctx, cap);
  };
  handle.reference = [](const EvalContext& ctx) { return beta_direct(2, ctx); };
  handle.max_terms = max_terms;
  return handle;
}

SeriesHandle naive_zeta3_handle(std::size_t max_terms) {
  SeriesHandle handle;
  handle.id = "naive-zeta3";
  handle.partials = [](const EvalContext& ctx, std::size_t cap) {
    return naive_zeta_partial_sums(3, ctx, cap);
  };
  handle.reference = [](const EvalContext& ctx) { return zeta_direct(3, ctx); };
  handle.max_terms = max_terms;
  return handle;
}

ConvergenceReport measure_convergence(const SeriesHandle& series, unsigned target_digits,
                                      const EvalContext& ctx) {
  if (ctx.precision().working_digits() < target_digits + 5) {
    throw InvalidDomain("measure_convergence needs at least 5 working digits beyond the target");
  }
  const PartialSums trace = series.partials(ctx, series.max_terms);
  const Real reference = series.reference(ctx);

  // Last truncation that disagrees; everything after it agrees.
  std::size_t first_good = trace.sums.size();
  while (first_good > 0 && agrees_to_digits(trace.sums[first_good - 1], reference, target_digits)) {
    --first_good;
  }
  if (first_good == trace.sums.size()) {
    throw NoConvergence(series.id + ": no agreement to " + std::to_string(target_digits) +
                        " digits within " + std::to_string(trace.sums.size()) + " terms");
  }

  ConvergenceReport report;
  report.series_id = series.id;
  report.target_digits = target_digits;
  report.measured_terms = first_good + 1;
  report.per_term_magnitudes.reserve(trace.terms.size());
  for (const Real& term : trace.terms) {
    report.per_term_magnitudes.push_back(term.log10_abs());
  }
  if (series.model_order && series.model_x) {
    report.predicted_terms =
        predicted_terms(target_digits, *series.model_order, ctx.real(*series.model_x));
  }
  return report;
}

std::vector<ComparisonRow> compare(const std::vector<SeriesHandle>& series,
                                   unsigned target_digits, const Precision& precision) {
  std::vector<ComparisonRow> rows;
  rows.reserve(series.size());
  for (const SeriesHandle& handle : series) {
    ComparisonRow row;
    row.series_id = handle.id;
    try {
      const EvalContext ctx(precision);
      row.report = measure_convergence(handle, target_digits, ctx);
    } catch (const NoConvergence& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    if (a.report.has_value() != b.report.has_value()) {
      return a.report.has_value();
    }
    return a.report && a.report->measured_terms < b.report->measured_terms;
  });
  return rows;
}

SeriesHandle handle_by_name(const std::string& name) {
  if (name == "paper-zeta3") return master_zeta3_handle();
  if (name == "paper-catalan") return master_catalan_handle();
  if (name == "apery") return apery_handle();
  if (name == "ramanujan") return ramanujan_handle();
  if (name == "naive-zeta3") return naive_zeta3_handle();

  // master:M:P/Q (solved constant) or master-series:M:P/Q (raw series value)
  for (const auto& [prefix, target] :
       {std::pair{std::string("master:"), MasterTarget::solved_constant},
        std::pair{std::string("master-series:"), MasterTarget::series_value}}) {
    if (name.rfind(prefix, 0) != 0) {
      continue;
    }
    const std::string rest = name.substr(prefix.size());
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
      break;
    }
    try {
      const unsigned long m = std::stoul(rest.substr(0, colon));
      Rational x(rest.substr(colon + 1));
      x.canonicalize();
      if (m < 1 || x == 0 || abs(x) > 1) {
        break;
      }
      return master_series_handle(static_cast<unsigned>(m), x, target);
    } catch (const std::invalid_argument&) {
      break;
    }
  }
  throw std::invalid_argument("unknown series '" + name +
                              "' (expected paper-zeta3, paper-catalan, apery, ramanujan, "
                              "naive-zeta3, master:M:P/Q or master-series:M:P/Q)");
}

}  // namespace zetaseries
