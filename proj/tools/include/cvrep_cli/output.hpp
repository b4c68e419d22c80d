// Copyright 2026 The cvrepeater Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Record serialisation shared by the cvrep commands.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvrep/montecarlo.hpp"
#include "cvrep/rates.hpp"

namespace cvrep::cli {

// 17 significant digits; "nan", "inf" and "-inf" for non-finite values.
std::string format_double(double x);

const std::vector<std::string>& record_columns();
void write_csv_header(std::ostream& out, const std::vector<std::string>& columns);
void write_csv_row(std::ostream& out, const RateRecord& r);

// Non-finite numbers: NaN becomes null, infinities the strings "inf"/"-inf".
nlohmann::ordered_json json_number(double x);
nlohmann::ordered_json record_json(const RateRecord& r);
nlohmann::ordered_json stats_json(const SummaryStats& s);

const char* status_name(RateRecord::Status s);

}  // namespace cvrep::cli
