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

#include <doctest.h>

#include <sstream>

#include "ekr/group_library.hpp"
#include "ekr/report.hpp"

using namespace ekr;

TEST_CASE("empty reports still carry a header") {
  std::ostringstream csv;
  emit_report({}, ReportFormat::csv, csv);
  CHECK(csv.str() == "n,Group,size,least,n-clique,EKR,unique,module-by-clique,rank,strict\n");
  std::ostringstream json;
  emit_report({}, ReportFormat::json, json);
  CHECK(nlohmann::json::parse(json.str()) == nlohmann::json::array());
}

TEST_CASE("report fields") {
  const EkrReport r = classify(catalog_group("F20"));
  const nlohmann::json j = to_json(r);
  CHECK(j["key"] == "F20");
  CHECK(j["degree"] == 5);
  CHECK(j["order"] == 20);
  CHECK(j["d"] == 4);
  CHECK(j["least_eigenvalue"] == -1);
  CHECK(j["ekr"]["verdict"] == "yes");
  CHECK(j["strict"]["verdict"] == "no");
  CHECK(j["strict"]["reason"] == "complete-union");
  CHECK(j["rank"]["full"] == "no");
  CHECK(j.contains("certificates"));
  CHECK(j.contains("timings"));

  std::ostringstream csv;
  emit_report({r}, ReportFormat::csv, csv);
  std::istringstream lines(csv.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(row == "5,F20,20,Yes,Yes,Yes,Yes,--,No,No");
}

TEST_CASE("digests ignore timings") {
  EkrReport r = classify(catalog_group("AGL(1,7)"));
  const std::string before = report_digest(r);
  r.timings["group"] += 10;
  CHECK(report_digest(r) == before);
  r.notes.push_back("changed");
  CHECK(report_digest(r) != before);
}

TEST_CASE("cells and formats") {
  CHECK(cell(Flag::yes) == "Yes");
  CHECK(cell(Flag::no) == "No");
  CHECK(cell(Flag::unknown) == "?");
  CHECK(cell(Flag::not_applicable) == "N/A");
  CHECK(cell(Flag::not_tried) == "--");
  CHECK(cell(Verdict::unknown) == "?");
  CHECK(parse_format("json") == ReportFormat::json);
  CHECK(parse_format("csv") == ReportFormat::csv);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
