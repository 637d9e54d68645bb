#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zetaseries/context.hpp"
#include "zetaseries/real.hpp"
#include "zetaseries/series_engine.hpp"

namespace zetaseries {

/*!
  Stirling envelope of the k-th master-series term,

      S_k ~ x^{2k} / (2k)^{2n+2},

  where n indexes the factorial shift (2n+2k+1)! of the generalized identity,
  i.e. n = m - 1 for master order m. An asymptotic model, not a bound.
*/
Real predicted_magnitude(std::size_t k, unsigned n, const Real& x);

/// Smallest k with predicted_magnitude(k, n, x) < 10^-digits, or `cap` when
/// the model never gets there (|x| = 1 with large digit targets).
std::size_t predicted_terms(unsigned digits, unsigned n, const Real& x,
                            std::size_t cap = 1'000'000);

/// |value - reference| < 0.5 * 10^-digits * max(1, |reference|).
bool agrees_to_digits(const Real& value, const Real& reference, unsigned digits);

/// A truncatable series: successive values of the quantity it approximates and
/// an independently obtained converged value.
struct SeriesHandle {
  std::string id;
  std::function<PartialSums(const EvalContext&, std::size_t max_terms)> partials;
  std::function<Real(const EvalContext&)> reference;
  /// Stirling model parameters, when the series belongs to the master family.
  std::optional<unsigned> model_order;
  std::optional<Rational> model_x;
  std::size_t max_terms = 1'000'000;
};

/// What a master-series handle measures.
enum class MasterTarget {
  series_value,     ///< S(m, x) itself
  solved_constant,  ///< zeta(2m-1) at x = 1/2 (m >= 2), beta(2m) at x = 1/4, else Cl_{2m}(2 pi x)
};

SeriesHandle master_series_handle(unsigned m, const Rational& x,
                                  MasterTarget target = MasterTarget::solved_constant);

/// zeta(3) solved from S(2, 1/2), measured against zeta_direct(3). Race name paper-zeta3.
SeriesHandle master_zeta3_handle();
/// G solved from S(1, 1/4), measured against beta_direct(2). Race name paper-catalan.
SeriesHandle master_catalan_handle();
SeriesHandle apery_handle(std::size_t max_terms = 10'000);
SeriesHandle ramanujan_handle(std::size_t max_terms = 10'000);
/// sum 1/k^3 without tail correction, capped.
SeriesHandle naive_zeta3_handle(std::size_t max_terms = 10'000);

struct ConvergenceReport {
  std::string series_id;
  unsigned target_digits = 0;
  std::optional<std::size_t> predicted_terms;
  std::size_t measured_terms = 0;
  /// log10 |term_k| for k = 1, 2, ...
  std::vector<double> per_term_magnitudes;
};

/*!
  Smallest truncation whose value agrees with the reference to target_digits
  and keeps agreeing for every longer truncation that was computed.

  Throws InvalidDomain when the context does not carry at least five digits
  beyond the target, and NoConvergence when the term cap binds first.
*/
ConvergenceReport measure_convergence(const SeriesHandle& series, unsigned target_digits,
                                      const EvalContext& ctx);

struct ComparisonRow {
  std::string series_id;
  std::optional<ConvergenceReport> report;
  std::string error;  ///< set when the row failed (e.g. NoConvergence)
};

/// Measures every handle in its own context and sorts rows by measured_terms;
/// failed rows keep their relative order after the successful ones.
std::vector<ComparisonRow> compare(const std::vector<SeriesHandle>& series,
                                   unsigned target_digits, const Precision& precision);

/// Looks up a handle by its race name: paper-zeta3, paper-catalan, apery,
/// ramanujan, naive-zeta3, master:M:P/Q (solved constant) or
/// master-series:M:P/Q (series value). Throws std::invalid_argument.
SeriesHandle handle_by_name(const std::string& name);

}  // namespace zetaseries
