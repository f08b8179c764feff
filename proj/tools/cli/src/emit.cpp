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
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dirichlet/cli.hpp"

namespace dirichlet::cli {

namespace {

std::string json_number(double d) {
  if (!std::isfinite(d)) return "null";
  return format(d, 17);
}

std::string json_value(const ReportValue& v) {
  if (const double* d = std::get_if<double>(&v)) return json_number(*d);
  return nlohmann::json(render(v)).dump();
}

std::string params_text(const std::vector<std::int64_t>& params,
                        const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(params[i]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string emit_json(std::span<const IdentityReport> reports) {
  if (reports.empty()) return "[]\n";
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const IdentityReport& r = reports[i];
    os << "  {\"identity_id\": \"" << to_string(r.identity_id) << "\", "
       << "\"params\": [" << params_text(r.params, ", ") << "], "
       << "\"lhs\": " << json_value(r.lhs) << ", "
       << "\"rhs\": " << json_value(r.rhs) << ", "
       << "\"abs_diff\": " << json_number(r.abs_diff) << ", "
       << "\"exact\": " << (r.exact ? "true" : "false") << ", "
       << "\"pass\": " << (r.pass ? "true" : "false") << "}"
       << (i + 1 < reports.size() ? ",\n" : "\n");
  }
  os << "]\n";
  return os.str();
}

std::string emit_csv(std::span<const IdentityReport> reports) {
  std::string out = "identity_id,params,lhs,rhs,abs_diff,exact,pass\n";
  for (const IdentityReport& r : reports) {
    out += std::string(to_string(r.identity_id));
    out += ',' + csv_field(params_text(r.params, ";"));
    out += ',' + csv_field(render(r.lhs));
    out += ',' + csv_field(render(r.rhs));
    out += ',' + format(r.abs_diff, 17);
    out += r.exact ? ",true" : ",false";
    out += r.pass ? ",true\n" : ",false\n";
  }
  return out;
}

// Text output only; json and csv always carry full values.
std::string clip(std::string s) {
  constexpr std::size_t kMax = 40;
  if (s.size() > kMax) s = s.substr(0, kMax - 3) + "...";
  return s;
}

std::string emit_text(std::span<const IdentityReport> reports) {
  struct Row {
    std::string cells[5];
  };
  std::vector<Row> rows;
  rows.push_back({{"identity", "params", "lhs", "rhs", "abs_diff"}});
  double max_diff = 0;
  std::size_t failed = 0;
  for (const IdentityReport& r : reports) {
    rows.push_back({{std::string(to_string(r.identity_id)),
                     params_text(r.params, ","), clip(render(r.lhs)), clip(render(r.rhs)),
                     format(r.abs_diff, 3)}});
    if (std::isnan(r.abs_diff) || r.abs_diff > max_diff) max_diff = r.abs_diff;
    if (!r.pass) ++failed;
  }
  std::size_t width[5] = {};
  for (const Row& row : rows) {
    for (int c = 0; c < 5; ++c) width[c] = std::max(width[c], row.cells[c].size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == 0) {
      os << "  ";
    } else {
      os << (reports[i - 1].pass ? "✓ " : "✗ ");
    }
    for (int c = 0; c < 5; ++c) {
      const std::string& cell = rows[i].cells[c];
      os << cell;
      if (c < 4) os << std::string(width[c] - cell.size() + 2, ' ');
    }
    os << '\n';
  }
  os << reports.size() << " checks, " << failed << " failed, max abs_diff "
     << format(max_diff, 3) << '\n';
  return os.str();
}

}  // namespace

std::string emit_report(std::span<const IdentityReport> reports, Format format) {
  switch (format) {
    case Format::json:
      return emit_json(reports);
    case Format::csv:
      return emit_csv(reports);
    case Format::text:
      break;
  }
  return emit_text(reports);
}

}  // namespace dirichlet::cli
