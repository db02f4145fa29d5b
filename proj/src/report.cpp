// Copyright 2026 The ekr-verify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ekr/report.hpp"

#include <ostream>
#include <stdexcept>

#include "ekr/digest.hpp"

namespace ekr {

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format '" + name + "'");
}

std::string cell(Flag f) {
  switch (f) {
    case Flag::yes: return "Yes";
    case Flag::no: return "No";
    case Flag::unknown: return "?";
    case Flag::not_applicable: return "N/A";
    case Flag::not_tried: return "--";
  }
  return "?";
}

std::string cell(Verdict v) {
  switch (v) {
    case Verdict::yes: return "Yes";
    case Verdict::no: return "No";
    case Verdict::unknown: return "?";
  }
  return "?";
}

nlohmann::json to_json(const EkrReport& r) {
  nlohmann::json j;
  j["key"] = r.key;
  j["degree"] = r.degree;
  j["order"] = r.order;
  j["d"] = r.d;
  j["least_eigenvalue"] = r.tau;
  j["least_standard"] = to_string(r.least_standard);
  j["n_clique"] = to_string(r.n_clique);
  j["ekr"] = {{"verdict", to_string(r.ekr)}, {"reason", r.ekr_reason}};
  j["unique"] = to_string(r.unique);
  j["module_by_clique"] = to_string(r.module_by_clique);
  j["rank"] = {{"full", to_string(r.rank_full)}, {"mode", r.rank_mode}};
  j["strict"] = {{"verdict", to_string(r.strict)}, {"reason", r.strict_reason}};
  j["certificates"] = nlohmann::json::array();
  for (const Certificate& c : r.certificates)
    j["certificates"].push_back({{"kind", c.kind}, {"digest", c.digest}, {"detail", c.detail}});
  j["timings"] = r.timings;
  j["notes"] = r.notes;
  if (!r.annotation.empty()) j["annotation"] = r.annotation;
  j["partial"] = r.partial;
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void emit_report(const std::vector<EkrReport>& reports, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const EkrReport& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
  } else {
    out << "n,Group,size,least,n-clique,EKR,unique,module-by-clique,rank,strict\n";
    for (const EkrReport& r : reports)
      out << r.degree << ',' << csv_field(r.key) << ',' << r.order << ',' << cell(r.least_standard) << ','
          << cell(r.n_clique) << ',' << cell(r.ekr) << ',' << cell(r.unique) << ',' << cell(r.module_by_clique) << ','
          << cell(r.rank_full) << ',' << cell(r.strict) << '\n';
  }
  if (!out) throw std::runtime_error("failed to write report");
}

std::string report_digest(const EkrReport& report) {
  nlohmann::json j = to_json(report);
  j.erase("timings");
  return digest_hex(j.dump());
}

}  // namespace ekr
