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

#ifndef DIRICHLET_REPORT_HPP
#define DIRICHLET_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dirichlet/exact.hpp"

namespace dirichlet {

// Declaration order is the output order of a verification run.
enum class IdentityId {
  thm1,
  thm1_literal,
  thm2,
  thm4_odd,
  thm4_even,
  remark1_a,
  remark1_b,
  eq_a2,
  eq_a3,
  eq_a4,
  collapse,
  lemma1_cos,
  lemma1_sin,
  lemma2_altcos,
  lemma3,
  lemma4,
  lemma5,
  lemma7,
  lemma8,
  periodic,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

/// One side of a checked identity: a floating value, an exact constant, or
/// a list of exact coefficients (used by the coefficient-collapse check).
using ReportValue =
    std::variant<double, exact::PiPoly, std::vector<exact::PiPoly>>;

std::string render(const ReportValue& v);

struct IdentityReport {
  IdentityId identity_id = IdentityId::thm1;
  std::vector<std::int64_t> params;
  ReportValue lhs = 0.0;
  ReportValue rhs = 0.0;
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool exact = false;
  bool pass = false;
  std::string note;
};

/// Numeric report; pass iff abs_diff <= tol.
IdentityReport numeric_report(IdentityId id, std::vector<std::int64_t> params,
                              double lhs, double rhs, double tol);

/// Exact report; pass iff lhs == rhs term by term.
IdentityReport exact_report(IdentityId id, std::vector<std::int64_t> params,
                            ReportValue lhs, ReportValue rhs);

/// Orders by (identity_id, params).
bool report_order(const IdentityReport& a, const IdentityReport& b);

}  // namespace dirichlet

#endif  // DIRICHLET_REPORT_HPP
