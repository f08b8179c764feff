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

#include "dirichlet/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace dirichlet {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 20> kNames{{
    {IdentityId::thm1, "thm1"},
    {IdentityId::thm1_literal, "thm1_literal"},
    {IdentityId::thm2, "thm2"},
    {IdentityId::thm4_odd, "thm4_odd"},
    {IdentityId::thm4_even, "thm4_even"},
    {IdentityId::remark1_a, "remark1_a"},
    {IdentityId::remark1_b, "remark1_b"},
    {IdentityId::eq_a2, "eq_a2"},
    {IdentityId::eq_a3, "eq_a3"},
    {IdentityId::eq_a4, "eq_a4"},
    {IdentityId::collapse, "collapse"},
    {IdentityId::lemma1_cos, "lemma1_cos"},
    {IdentityId::lemma1_sin, "lemma1_sin"},
    {IdentityId::lemma2_altcos, "lemma2_altcos"},
    {IdentityId::lemma3, "lemma3"},
    {IdentityId::lemma4, "lemma4"},
    {IdentityId::lemma5, "lemma5"},
    {IdentityId::lemma7, "lemma7"},
    {IdentityId::lemma8, "lemma8"},
    {IdentityId::periodic, "periodic"},
}};

double exact_distance(const exact::PiPoly& a, const exact::PiPoly& b) {
  return std::fabs(exact::pipoly_eval(a - b, kMinDigits).value.convert_to<double>());
}

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [key, name] : kNames)
    if (key == id) return name;
  return "unknown";
}

std::optional<IdentityId> identity_from_string(std::string_view name) {
  for (const auto& [key, n] : kNames)
    if (n == name) return key;
  return std::nullopt;
}

std::string render(const ReportValue& v) {
  struct Visitor {
    std::string operator()(double d) const { return format(d, 17); }
    std::string operator()(const exact::PiPoly& p) const { return p.str(); }
    std::string operator()(const std::vector<exact::PiPoly>& ps) const {
      std::string out = "[";
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += "; ";
        out += ps[i].str();
      }
      return out + "]";
    }
  };
  return std::visit(Visitor{}, v);
}

IdentityReport numeric_report(IdentityId id, std::vector<std::int64_t> params,
                              double lhs, double rhs, double tol) {
  IdentityReport r;
  r.identity_id = id;
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_diff = std::fabs(lhs - rhs);
  r.tolerance = tol;
  r.exact = false;
  r.pass = std::isfinite(r.abs_diff) && r.abs_diff <= tol;
  return r;
}

IdentityReport exact_report(IdentityId id, std::vector<std::int64_t> params,
                            ReportValue lhs, ReportValue rhs) {
  IdentityReport r;
  r.identity_id = id;
  r.params = std::move(params);
  r.exact = true;
  r.tolerance = 0.0;
  r.pass = lhs == rhs;
  if (!r.pass) {
    // Numeric size of the mismatch, for the report only.
    if (std::holds_alternative<exact::PiPoly>(lhs) &&
        std::holds_alternative<exact::PiPoly>(rhs)) {
      r.abs_diff = exact_distance(std::get<exact::PiPoly>(lhs),
                                  std::get<exact::PiPoly>(rhs));
    } else if (std::holds_alternative<std::vector<exact::PiPoly>>(lhs) &&
               std::holds_alternative<std::vector<exact::PiPoly>>(rhs)) {
      const auto& a = std::get<std::vector<exact::PiPoly>>(lhs);
      const auto& b = std::get<std::vector<exact::PiPoly>>(rhs);
      r.abs_diff = a.size() == b.size() ? 0.0
                                        : std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        r.abs_diff = std::max(r.abs_diff, exact_distance(a[i], b[i]));
    } else {
      r.abs_diff = std::numeric_limits<double>::infinity();
    }
    // A nonzero exact difference can evaluate to a tiny double; never
    // report it as zero.
    if (r.abs_diff == 0.0) r.abs_diff = std::numeric_limits<double>::min();
  }
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

bool report_order(const IdentityReport& a, const IdentityReport& b) {
  if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
  if (a.params != b.params) return a.params < b.params;
  return a.note < b.note;
}

}  // namespace dirichlet
