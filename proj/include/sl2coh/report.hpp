// Copyright 2026 The sl2coh Authors
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

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace sl2coh {

enum class ExitStatus : int { ok = 0, violations_found = 1, usage_error = 2 };

using FieldValue = std::variant<std::int64_t, std::uint64_t, std::string>;

struct Field {
  std::string key;
  FieldValue value;
};

using Row = std::vector<Field>;

struct RunReport {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<Row> rows;
  std::vector<std::string> violations;
  ExitStatus status = ExitStatus::ok;
};

/// Header is the union of row keys in first-seen order; absent fields are blank.
void write_csv(const RunReport& report, std::ostream& out);

/// Array of flat objects, one per row, keys in row order.
void write_json(const RunReport& report, std::ostream& out);

}  // namespace sl2coh
