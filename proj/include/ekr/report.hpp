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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ekr/pipeline.hpp"

namespace ekr {

enum class ReportFormat { json, csv };

/// Throws std::invalid_argument for anything but "json" or "csv".
ReportFormat parse_format(const std::string& name);

nlohmann::json to_json(const EkrReport& report);

/// JSON: an array with one object per report. CSV: the columns
/// n, Group, size, least, n-clique, EKR, unique, module-by-clique, rank, strict,
/// with Yes / No / ? / -- / N/A cells; the header is always written.
void emit_report(const std::vector<EkrReport>& reports, ReportFormat format, std::ostream& out);

/// Digest of the JSON form without timings.
std::string report_digest(const EkrReport& report);

/// Table cell for a flag: Yes, No, ?, -- or N/A.
std::string cell(Flag f);
std::string cell(Verdict v);

}  // namespace ekr
