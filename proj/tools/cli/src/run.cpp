/*
Copyright 2026 The dirichlet-j Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dirichlet/cli.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/identities.hpp"
#include "dirichlet/jfun.hpp"
#include "dirichlet/special.hpp"

namespace dirichlet::cli {

namespace {

constexpr const char* kGrammar =
    "usage:\n"
    "  dirichlet-j compute <lambda|beta|J> <arg> [--method M] [--digits D]\n"
    "  dirichlet-j verify <thm1|thm2|thm4|remark1|collapse|lemmas|fourier|all>\n"
    "              [--range a..b] [--tol T] [--seed S] [--deep] [--format F] [-o PATH]\n"
    "  dirichlet-j table <lambda|beta|J> --range a..b [--format F] [-o PATH]\n"
    "methods: auto closed series quadrature euler_series riemann\n"
    "formats: text json csv\n"
    "env: DIRICHLET_J_DIGITS sets the default for --digits (15..60)\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Format> kFormats = {
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

bool as_integer(double s, std::int64_t& out) {
  if (std::floor(s) != s || std::fabs(s) > 1e15) return false;
  out = static_cast<std::int64_t>(s);
  return true;
}

// Evaluates lambda, beta or J at s with the requested method.
EvalResult evaluate(const std::string& fn, double s, const std::string& method,
                    int digits) {
  std::int64_t n = 0;
  const bool integral = as_integer(s, n);
  const auto closed = [&](const exact::PiPoly& p) {
    const exact::Approx a = exact::pipoly_eval(p, digits);
    return EvalResult{a.value, a.error_estimate, Method::closed_form, 0};
  };
  const auto unavailable = [&]() -> EvalResult {
    throw UsageError("method '" + method + "' is not available for " + fn +
                     "(" + format(s, 17) + ")");
  };

  if (fn == "lambda") {
    const bool has_closed = integral && n >= 2 && n % 2 == 0;
    if (method == "closed" || (method == "auto" && has_closed)) {
      if (!has_closed) return unavailable();
      return closed(special::lambda_even_closed(static_cast<unsigned>(n / 2)));
    }
    if (method == "auto" || method == "series") {
      return special::lambda_numeric(Real(s), digits);
    }
    return unavailable();
  }
  if (fn == "beta") {
    const bool has_closed = integral && n >= 1 && n % 2 == 1;
    if (method == "closed" || (method == "auto" && has_closed)) {
      if (!has_closed) return unavailable();
      return closed(special::beta_odd_closed(static_cast<unsigned>((n + 1) / 2)));
    }
    if (method == "auto" || method == "series") {
      return special::beta_numeric(Real(s), digits);
    }
    return unavailable();
  }

  // J: quadrature is double precision, so integer orders switch to the
  // closed forms when more digits are asked for.
  const bool has_closed = integral && n >= 1;
  const auto closed_j = [&] {
    const auto k = static_cast<unsigned>(n);
    return k % 2 == 1 ? jfun::j_closed_odd((k + 1) / 2, digits)
                      : jfun::j_closed_even(k / 2, digits);
  };
  // Beyond 15 digits the double-precision quadrature cannot deliver, and
  // says so through ConvergenceError.
  const auto quadrature = [s, digits] {
    jfun::QuadratureConfig cfg;
    cfg.target_rel_tol = digits > 15 ? std::pow(10.0, -digits) : 1e-14;
    if (digits > 15) cfg.target_abs_tol = std::numeric_limits<double>::min();
    return jfun::j_quadrature(s, cfg);
  };
  // The series tolerance is absolute; the terms are all positive, so a
  // first pass gives the scale for a relative target.
  const auto euler = [&] {
    const double rel = std::pow(10.0, -digits);
    EvalResult r = jfun::j_euler_series(static_cast<unsigned>(n), rel);
    const double scaled = rel * r.approx();
    if (!(scaled > std::numeric_limits<double>::min())) {
      throw ConvergenceError("J(" + std::to_string(n) +
                                 "): value too small for a relative target "
                                 "in double tolerance",
                             static_cast<double>(n), r.error_estimate);
    }
    if (scaled < rel) {
      r = jfun::j_euler_series(static_cast<unsigned>(n), scaled);
    }
    return r;
  };
  if (method == "auto") {
    if (!(has_closed && digits > 15)) return quadrature();
    // The closed forms cancel badly at large orders.
    EvalResult r = closed_j();
    if (r.error_estimate <= std::pow(10.0, -digits) * std::fabs(r.approx())) {
      return r;
    }
    return euler();
  }
  if (method == "closed") {
    if (!has_closed) return unavailable();
    return closed_j();
  }
  if (method == "quadrature") return quadrature();
  if (method == "euler_series") {
    if (!has_closed) return unavailable();
    return euler();
  }
  if (method == "riemann") {
    EvalResult r;
    r.value = Real(jfun::j_riemann_sum(s, 10000));
    r.error_estimate = std::nan("");
    r.method = Method::riemann_sum;
    r.work = 10000;
    return r;
  }
  return unavailable();
}

std::string error_text(double e) {
  return std::isnan(e) ? "none" : format(e, 3);
}

struct TableRow {
  std::int64_t s;
  EvalResult r;
};

std::string emit_table(const std::string& fn, const std::vector<TableRow>& rows,
                       Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      if (rows.empty()) return "[]\n";
      os << "[\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const EvalResult& r = rows[i].r;
        os << "  {\"function\": " << nlohmann::json(fn).dump()
           << ", \"s\": " << rows[i].s << ", \"value\": " << format(r.approx(), 17)
           << ", \"method\": \"" << to_string(r.method) << "\""
           << ", \"error_estimate\": "
           << (std::isnan(r.error_estimate) ? "null" : format(r.error_estimate, 17))
           << ", \"work\": " << r.work << "}" << (i + 1 < rows.size() ? ",\n" : "\n");
      }
      os << "]\n";
      break;
    }
    case Format::csv:
      os << "function,s,value,method,error_estimate,work\n";
      for (const TableRow& row : rows) {
        os << fn << ',' << row.s << ',' << format(row.r.approx(), 17) << ','
           << to_string(row.r.method) << ',' << format(row.r.error_estimate, 17)
           << ',' << row.r.work << '\n';
      }
      break;
    case Format::text:
      os << "s     value                    method              error\n";
      for (const TableRow& row : rows) {
        std::string s = std::to_string(row.s);
        std::string v = format(row.r.approx(), 17);
        std::string m(to_string(row.r.method));
        s.resize(std::max<std::size_t>(s.size(), 6), ' ');
        v.resize(std::max<std::size_t>(v.size(), 25), ' ');
        m.resize(std::max<std::size_t>(m.size(), 20), ' ');
        os << s << v << m << error_text(row.r.error_estimate) << '\n';
      }
      break;
  }
  return os.str();
}

void write_output(const std::string& text, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
}

}  // namespace

std::optional<std::pair<std::int64_t, std::int64_t>> parse_range(
    std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return std::nullopt;
  std::int64_t a = 0;
  std::int64_t b = 0;
  const char* first = text.data();
  const char* mid = first + dots;
  const char* last = first + text.size();
  auto ra = std::from_chars(first, mid, a);
  auto rb = std::from_chars(mid + 2, last, b);
  if (ra.ec != std::errc() || ra.ptr != mid || rb.ec != std::errc() ||
      rb.ptr != last || a > b) {
    return std::nullopt;
  }
  return std::pair{a, b};
}

int run(std::span<const std::string> argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dirichlet lambda/beta and J(s) evaluator and identity checker",
               "dirichlet-j"};
  app.require_subcommand(1);

  std::string fn;
  std::string arg;
  std::string method = "auto";
  int digits = 15;
  std::string suite;
  std::string range_text;
  std::optional<double> tol;
  std::string seed_text = "0x5EED";
  bool deep = false;
  std::string format_name = "text";
  std::string output_path;

  const std::vector<std::string> functions = {"lambda", "beta", "J"};
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("-o", output_path, "write output to PATH");
  };

  CLI::App* compute = app.add_subcommand("compute", "evaluate one value");
  compute->add_option("function", fn)->required()->check(CLI::IsMember(functions));
  compute->add_option("arg", arg)->required();
  compute->add_option("--method", method)
      ->check(CLI::IsMember(
          {"auto", "closed", "series", "quadrature", "euler_series", "riemann"}));
  CLI::Option* digits_opt = compute->add_option("--digits", digits)
      ->check(CLI::Range(kMinDigits, kMaxDigits));

  CLI::App* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--range", range_text, "a..b");
  verify->add_option("--tol", tol)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed_text);
  verify->add_flag("--deep", deep, "run the 10^6-term partial sums");
  add_format(verify);

  CLI::App* table = app.add_subcommand("table", "tabulate integer arguments");
  table->add_option("function", fn)->required()->check(CLI::IsMember(functions));
  table->add_option("--range", range_text, "a..b")->required();
  add_format(table);

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << kGrammar;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << kGrammar;
    return 2;
  }

  try {
    if (const char* env = std::getenv("DIRICHLET_J_DIGITS");
        env != nullptr && digits_opt->count() == 0) {
      const std::string text(env);
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), digits);
      if (ec != std::errc() || ptr != text.data() + text.size() ||
          digits < kMinDigits || digits > kMaxDigits) {
        throw UsageError("DIRICHLET_J_DIGITS must be an integer in [15, 60]");
      }
    }
    const Format out_format = kFormats.at(format_name);
    SuiteOptions opt;
    if (!range_text.empty()) {
      opt.range = parse_range(range_text);
      if (!opt.range) throw UsageError("malformed range '" + range_text + "'");
    }

    if (*compute) {
      double s = 0;
      std::size_t used = 0;
      try {
        s = std::stod(arg, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != arg.size() || !std::isfinite(s)) {
        throw UsageError("argument '" + arg + "' is not a real number");
      }
      const EvalResult r = evaluate(fn, s, method, digits);
      out << fn << "(" << arg << ") = " << format(r.value, digits) << '\n'
          << "method: " << to_string(r.method) << '\n'
          << "error_estimate: " << error_text(r.error_estimate) << '\n'
          << "work: " << r.work << '\n';
      return 0;
    }

    if (*verify) {
      std::size_t used = 0;
      try {
        opt.seed = std::stoull(seed_text, &used, 0);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != seed_text.size()) {
        throw UsageError("malformed seed '" + seed_text + "'");
      }
      opt.tol = tol;
      opt.deep = deep;
      const std::vector<IdentityReport> reports = run_suite(suite, opt);
      write_output(emit_report(reports, out_format), output_path, out);
      const bool ok = std::all_of(reports.begin(), reports.end(),
                                  [](const IdentityReport& r) { return r.pass; });
      return ok ? 0 : 1;
    }

    std::vector<TableRow> rows;
    for (std::int64_t s = opt.range->first; s <= opt.range->second; ++s) {
      rows.push_back({s, evaluate(fn, static_cast<double>(s), "auto", digits)});
    }
    write_output(emit_table(fn, rows, out_format), output_path, out);
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << kGrammar;
    return 2;
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << " (argument "
        << format(e.argument(), 17) << ", achieved error "
        << format(e.achieved(), 3) << ")\n";
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace dirichlet::cli
