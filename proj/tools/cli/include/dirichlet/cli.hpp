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

#ifndef DIRICHLET_CLI_HPP
#define DIRICHLET_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dirichlet/report.hpp"

namespace dirichlet::cli {

enum class Format { text, json, csv };

/// Serializes reports in the given order. Floats use 17 significant digits;
/// json is an array of objects keyed identity_id, params, lhs, rhs,
/// abs_diff, exact, pass, and csv has a header row with the same names.
std::string emit_report(std::span<const IdentityReport> reports, Format format);

struct SuiteOptions {
  std::optional<std::pair<std::int64_t, std::int64_t>> range;
  std::optional<double> tol;
  std::uint64_t seed = 0x5EED;
  bool deep = false;
};

/// Names accepted by `verify`.
const std::vector<std::string>& suite_names();

/// Runs one verification suite and returns its reports sorted by
/// (identity_id, params). Throws ConvergenceError from the evaluators and
/// DomainError for unknown names or empty ranges.
std::vector<IdentityReport> run_suite(std::string_view name,
                                      const SuiteOptions& opt);

/// Parses "a..b" with a <= b.
std::optional<std::pair<std::int64_t, std::int64_t>> parse_range(
    std::string_view text);

/// Entry point. argv[0] is the program name. Exit codes: 0 success,
/// 1 failed identity, 2 usage error, 3 convergence failure.
int run(std::span<const std::string> argv, std::ostream& out,
        std::ostream& err);

}  // namespace dirichlet::cli

#endif  // DIRICHLET_CLI_HPP
