// Copyright 2026 The qmlab Authors
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

// Command-line front end. Every subcommand builds a report of named checks
// plus a result payload, printed as canonical JSON with --json and as text
// otherwise.

#ifndef QMLAB_CLI_HPP_
#define QMLAB_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "qmlab/battery.hpp"
#include "qmlab/scheme_io.hpp"

namespace qmlab {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunReport {
  std::string command;
  Json field;  // null when the command spans several fields
  std::vector<CheckResult> checks;
  Json result = Json::object();
  std::string text;  // extra text-mode rendering, e.g. a table grid

  bool pass() const;
};

// {command, field, checks, pass, result}; no timing, so equal inputs give
// equal bytes.
Json report_to_json(const RunReport& r);

// args excludes the program name. Returns 0 when every check passes, 1 when
// a check fails and 2 on a usage error.
int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err);

}  // namespace qmlab

#endif  // QMLAB_CLI_HPP_
