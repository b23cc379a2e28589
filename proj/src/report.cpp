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

#include "sl2coh/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace sl2coh {

namespace {

std::string text(const FieldValue& v) {
  if (auto s = std::get_if<std::string>(&v)) return *s;
  if (auto i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::to_string(std::get<std::uint64_t>(v));
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

void write_csv(const RunReport& report, std::ostream& out) {
  std::vector<std::string> header;
  for (const auto& row : report.rows)
    for (const auto& f : row)
      if (std::find(header.begin(), header.end(), f.key) == header.end()) header.push_back(f.key);
  if (header.empty()) return;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out << ',';
      auto it = std::find_if(row.begin(), row.end(), [&](const Field& f) { return f.key == header[i]; });
      if (it != row.end()) out << csv_cell(text(it->value));
    }
    out << '\n';
  }
}

void write_json(const RunReport& report, std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& f : row) std::visit([&](const auto& v) { obj[f.key] = v; }, f.value);
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

}  // namespace sl2coh
