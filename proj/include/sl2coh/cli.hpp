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

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sl2coh/verify.hpp"

namespace sl2coh {

/// Parses "lo..hi" (inclusive) or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text);

/// Exit code for a verify run: 1 if any non-informational check failed, else 0.
int verify_exit_code(const std::vector<CheckResult>& results);

/// Runs the command line (without the program name) and returns the exit
/// status: 0 ok, 1 violations found, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl2coh
