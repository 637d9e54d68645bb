#include "zetaseries/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "zetaseries/context.hpp"
#include "zetaseries/convergence.hpp"
#include "zetaseries/errors.hpp"
#include "zetaseries/identities.hpp"
#include "zetaseries/oracles.hpp"
#include "zetaseries/series_engine.hpp"
#include "zetaseries/special_numbers.hpp"

namespace zetaseries {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct GlobalOptions {
  Format format = Format::text;
  unsigned digits = 30;
  std::optional<std::size_t> max_terms;
};

/// Usage-level failure that should exit with code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned long parse_index(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
  }
  try {
    return std::stoul(text);
  } catch (const std::out_of_range&) {
    throw UsageError(what + " is out of range: '" + text + "'");
  }
}

Real parse_theta(const std::string& token, const EvalContext& ctx) {
  std::string body = token;
  long sign = 1;
  if (!body.empty() && body.front() == '-') {
    sign = -1;
    body.erase(0, 1);
  }
  const Real pi = ctx.pi();
  if (body == "pi") return pi * sign;
  if (body == "2pi") return pi * (2 * sign);
  if (body == "pi/2") return pi * sign / 2;
  if (body == "pi/3") return pi * sign / 3;
  if (body == "pi/4") return pi * sign / 4;
  try {
    return ctx.parse(token);
  } catch (const std::invalid_argument&) {
    throw UsageError("THETA must be pi, pi/2, pi/3, pi/4, 2pi or a decimal, got '" + token + "'");
  }
}

struct OutputRecord {
  std::string constant;
  unsigned digits = 0;
  std::string value;
  std::size_t terms_used = 0;
  std::string method;
  std::string error_estimate;
};

void emit(const OutputRecord& record, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      json j{{"constant", record.constant},   {"digits", record.digits},
             {"value", record.value},         {"terms_used", record.terms_used},
             {"method", record.method},       {"error_estimate", record.error_estimate}};
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "constant,digits,value,terms_used,method,error_estimate\n"
          << '"' << record.constant << "\"," << record.digits << ',' << record.value << ','
          << record.terms_used << ',' << record.method << ',' << record.error_estimate << '\n';
      break;
    case Format::text:
      out << "constant        " << record.constant << '\n'
          << "digits          " << record.digits << '\n'
          << "value           " << record.value << '\n'
          << "terms_used      " << record.terms_used << '\n'
          << "method          " << record.method << '\n'
          << "error_estimate  " << record.error_estimate << '\n';
      break;
  }
}

OutputRecord from_solved(std::string constant, std::string method, const SolvedValue& solved,
                         unsigned digits, std::ostream& err) {
  if (solved.series.truncation_warning()) {
    err << "warning: term cap reached after " << solved.series.terms_used
        << " terms; the value may be short of " << digits << " digits\n";
  }
  return OutputRecord{std::move(constant), digits, solved.value.to_fixed(digits),
                      solved.series.terms_used, std::move(method),
                      solved.error_estimate.to_scientific(3)};
}

OutputRecord from_closed_form(std::string constant, std::string method, const Real& value,
                              const EvalContext& ctx, unsigned digits) {
  Real scale = abs(value);
  if (scale < 1) {
    scale = ctx.real(1);
  }
  return OutputRecord{std::move(constant), digits, value.to_fixed(digits), 0, std::move(method),
                      (ctx.epsilon() * scale).to_scientific(3)};
}

int cmd_compute(const GlobalOptions& global, const std::string& kind,
                const std::vector<std::string>& values, std::ostream& out, std::ostream& err) {
  auto expect = [&](std::size_t count, const std::string& usage) {
    if (values.size() != count) {
      throw UsageError("usage: compute " + kind + " " + usage);
    }
  };
  const EvalContext ctx{Precision(global.digits)};
  SeriesOptions options;
  if (global.max_terms) {
    options.max_terms = *global.max_terms;
  }
  const unsigned digits = global.digits;

  OutputRecord record;
  if (kind == "zeta-odd") {
    expect(1, "N");
    const auto n = parse_index(values[0], "N");
    if (n == 0) {
      throw InvalidDomain("zeta-odd N requires N >= 1; N = 0 is zeta(1), a simple pole at s = 1");
    }
    record = from_solved("zeta_odd(" + std::to_string(2 * n + 1) + ")", "master-series:theta=pi",
                         zeta_odd_detailed(static_cast<unsigned>(n), ctx, options), digits, err);
  } else if (kind == "beta-even") {
    expect(1, "N");
    const auto n = parse_index(values[0], "N");
    if (n == 0) {
      throw InvalidDomain("beta-even N requires N >= 1");
    }
    record = from_solved("beta_even(" + std::to_string(2 * n) + ")", "master-series:x=1/4",
                         beta_even_detailed(static_cast<unsigned>(n), ctx, options), digits, err);
  } else if (kind == "clausen") {
    expect(2, "M THETA");
    const auto m = parse_index(values[0], "M");
    if (m == 0) {
      throw InvalidDomain("clausen M THETA requires M >= 1");
    }
    const Real theta = parse_theta(values[1], ctx);
    record = from_solved("clausen(" + std::to_string(2 * m) + ", " + values[1] + ")",
                         "master-series:clausen",
                         clausen_even_detailed(static_cast<unsigned>(m), theta, ctx, options),
                         digits, err);
  } else if (kind == "zeta-even") {
    expect(1, "N");
    const auto n = parse_index(values[0], "N");
    if (n == 0) {
      throw InvalidDomain("zeta-even N requires N >= 1");
    }
    const bool direct = 6 * n > ctx.precision().working_digits();
    record = from_closed_form("zeta_even(" + std::to_string(2 * n) + ")",
                              direct ? "direct-sum" : "bernoulli-closed-form",
                              zeta_even(static_cast<unsigned>(n), ctx), ctx, digits);
  } else if (kind == "beta-odd") {
    expect(1, "N");
    const auto n = parse_index(values[0], "N");
    record = from_closed_form("beta_odd(" + std::to_string(2 * n + 1) + ")", "euler-closed-form",
                              beta_odd(static_cast<unsigned>(n), ctx), ctx, digits);
  } else {
    throw UsageError("unknown constant kind '" + kind +
                     "' (expected zeta-odd, beta-even, clausen, zeta-even or beta-odd)");
  }
  emit(record, global.format, out);
  return 0;
}

struct Check {
  std::string identity;
  Real residual;
  bool passed = false;
};

int cmd_verify(const GlobalOptions& global, unsigned n_max, bool katsurada_sign,
               std::ostream& out) {
  if (n_max == 0) {
    throw UsageError("--n-max must be at least 1");
  }
  const EvalContext ctx{Precision(global.digits)};
  const Real threshold = power_of_ten(-static_cast<long>(global.digits) + 5, ctx.bits());
  const SineSeriesSign sign =
      katsurada_sign ? SineSeriesSign::plus_sign : SineSeriesSign::corrected;

  std::vector<Check> checks;
  auto record = [&](std::string identity, Real residual) {
    const bool passed = abs(residual) < threshold;
    checks.push_back(Check{std::move(identity), std::move(residual), passed});
  };
  auto record_exact = [&](std::string identity, bool holds) {
    checks.push_back(Check{std::move(identity), ctx.real(holds ? 0 : 1), holds});
  };

  const std::vector<Rational> grid{Rational(1, 2), Rational(1, 4),  Rational(1, 6),
                                   Rational(1, 8), Rational(-1, 3), Rational(9, 10)};
  for (unsigned n = 1; n <= n_max; ++n) {
    for (const Rational& x : grid) {
      record("generalized-identity n=" + std::to_string(n) + " x=" + x.get_str(),
             generalized_identity_residual(n, x, ctx, sign));
    }
  }
  for (unsigned n = 1; n <= n_max; ++n) {
    record("half-quarter-difference n=" + std::to_string(n), half_quarter_residual(n, ctx));
  }
  for (auto which : {DisplayedSpecialization::pi_over_3_m1, DisplayedSpecialization::pi_over_3_m2,
                     DisplayedSpecialization::pi_over_4_m1, DisplayedSpecialization::pi_over_4_m2}) {
    record("specialization " + to_string(which), specialization_residual(which, ctx));
  }
  const Real pi = ctx.pi();
  for (unsigned m = 1; m <= n_max; ++m) {
    record("clausen(" + std::to_string(2 * m) + ", pi) = 0", clausen_even(m, pi, ctx));
    record("clausen(" + std::to_string(2 * m) + ", pi/2) = beta_even(" + std::to_string(2 * m) +
               ")",
           clausen_even(m, pi / 2, ctx) - beta_even(m, ctx));
  }
  for (unsigned n = 2; n <= std::max(n_max, 2u); ++n) {
    record("kolbig beta_even(" + std::to_string(2 * n) + ")",
           kolbig_beta(n, ctx) - beta_even(n, ctx));
  }
  for (unsigned n = 1; n <= 20; ++n) {
    record_exact("harmonic-binomial n=" + std::to_string(n), harmonic_binomial_identity_check(n));
  }
  for (unsigned n = 1; n <= 60; ++n) {
    record_exact("bernoulli-recurrence n=" + std::to_string(n),
                 bernoulli_recurrence_residual(n) == 0);
  }

  const auto worst = std::max_element(checks.begin(), checks.end(), [](const Check& a, const Check& b) {
    if (a.passed != b.passed) {
      return a.passed;  // failures rank above passes
    }
    return abs(a.residual) < abs(b.residual);
  });
  const bool all_passed =
      std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });

  switch (global.format) {
    case Format::json: {
      json rows = json::array();
      for (const Check& c : checks) {
        rows.push_back({{"identity", c.identity},
                        {"residual", c.residual.to_scientific(3)},
                        {"passed", c.passed}});
      }
      json j{{"digits", global.digits},
             {"threshold", threshold.to_scientific(3)},
             {"passed", all_passed},
             {"checks", rows},
             {"worst", {{"identity", worst->identity}, {"residual", worst->residual.to_scientific(3)}}}};
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "identity,residual,threshold,passed\n";
      for (const Check& c : checks) {
        out << '"' << c.identity << "\"," << c.residual.to_scientific(3) << ','
            << threshold.to_scientific(3) << ',' << (c.passed ? "true" : "false") << '\n';
      }
      break;
    case Format::text:
      for (const Check& c : checks) {
        out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(48) << c.identity
            << " residual " << c.residual.to_scientific(3) << '\n';
      }
      out << (all_passed ? "all " : "FAILED: ") << checks.size() << " checks, threshold "
          << threshold.to_scientific(3) << "; worst " << worst->identity << " residual "
          << worst->residual.to_scientific(3) << '\n';
      break;
  }
  return all_passed ? 0 : 1;
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> names;
  std::stringstream stream(list);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) {
      names.push_back(item);
    }
  }
  return names;
}

int cmd_race(const GlobalOptions& global, const std::string& series_list, std::ostream& out) {
  std::vector<SeriesHandle> handles;
  for (const std::string& name : split_names(series_list)) {
    try {
      handles.push_back(handle_by_name(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (global.max_terms) {
      handles.back().max_terms = *global.max_terms;
    }
  }
  if (handles.empty()) {
    throw UsageError("--series needs at least one series name");
  }
  const auto rows = compare(handles, global.digits, Precision(global.digits));

  auto optional_count = [](const std::optional<std::size_t>& v) -> std::string {
    return v ? std::to_string(*v) : "";
  };
  bool any_failed = false;
  switch (global.format) {
    case Format::json: {
      json list = json::array();
      for (const ComparisonRow& row : rows) {
        json j{{"series", row.series_id}};
        j["predicted_terms"] = row.report && row.report->predicted_terms
                                   ? json(*row.report->predicted_terms)
                                   : json(nullptr);
        j["measured_terms"] = row.report ? json(row.report->measured_terms) : json(nullptr);
        j["error"] = row.error;
        list.push_back(j);
        any_failed |= !row.report;
      }
      out << json{{"digits", global.digits}, {"rows", list}}.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "series,digits,predicted_terms,measured_terms,error\n";
      for (const ComparisonRow& row : rows) {
        out << '"' << row.series_id << "\"," << global.digits << ','
            << (row.report ? optional_count(row.report->predicted_terms) : "") << ','
            << (row.report ? std::to_string(row.report->measured_terms) : "") << ",\""
            << row.error << "\"\n";
        any_failed |= !row.report;
      }
      break;
    case Format::text:
      out << "target " << global.digits << " digits\n"
          << std::left << std::setw(6) << "rank" << std::setw(28) << "series" << std::setw(12)
          << "predicted" << "measured\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const ComparisonRow& row = rows[i];
        out << std::left << std::setw(6) << (i + 1) << std::setw(28) << row.series_id;
        if (row.report) {
          const std::string predicted = optional_count(row.report->predicted_terms);
          out << std::setw(12) << (predicted.empty() ? "-" : predicted)
              << row.report->measured_terms << '\n';
        } else {
          out << std::setw(12) << "-" << "failed: " << row.error << '\n';
          any_failed = true;
        }
      }
      break;
  }
  return any_failed ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"High-precision odd zeta, even beta and Clausen values from zeta series",
               "zetaseries"};
  app.require_subcommand(1);

  GlobalOptions global;
  std::string format = "text";
  std::size_t max_terms = 0;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--digits", global.digits, "Decimal digits of the result")
      ->envname("ZETASERIES_DIGITS")
      ->check(CLI::Range(1u, 100000u));
  auto* max_terms_option =
      app.add_option("--max-terms", max_terms, "Cap on series terms")->check(CLI::PositiveNumber);

  auto* compute = app.add_subcommand("compute", "Compute one constant");
  compute->fallthrough();
  std::string kind;
  std::vector<std::string> values;
  compute->add_option("kind", kind, "zeta-odd N | beta-even N | clausen M THETA | zeta-even N | beta-odd N")
      ->required();
  compute->add_option("values", values, "N, or M THETA for clausen");

  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  verify->fallthrough();
  unsigned n_max = 4;
  bool katsurada = false;
  verify->add_option("--n-max", n_max, "Largest identity index checked");
  verify->add_flag("--simulate-katsurada-sign", katsurada,
                   "Use '+' in front of the sine series of the generalized identity");

  auto* race = app.add_subcommand("race", "Compare terms needed to reach --digits");
  race->fallthrough();
  std::string series_list = "paper-zeta3,paper-catalan,apery,ramanujan";
  race->add_option("--series", series_list,
                   "Comma-separated: paper-zeta3, paper-catalan, apery, ramanujan, naive-zeta3, "
                   "master:M:P/Q, master-series:M:P/Q");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  global.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  if (*max_terms_option) {
    global.max_terms = max_terms;
  }

  try {
    if (*compute) {
      return cmd_compute(global, kind, values, out, err);
    }
    if (*verify) {
      return cmd_verify(global, n_max, katsurada, out);
    }
    return cmd_race(global, series_list, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace zetaseries
