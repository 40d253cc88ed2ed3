// Copyright 2026 The tspan Authors.
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

// Command-line front end. Run() does everything except touching the process
// streams, so tests can drive it directly.

#ifndef TSPAN_CLI_H_
#define TSPAN_CLI_H_

#include <string>
#include <string_view>
#include <vector>

namespace tspan {

enum class CommandStatus { kFound, kNotFound, kInvalidInput, kBudgetExhausted };

// 0, 1, 2 and 3 respectively.
int ExitCode(CommandStatus status);
std::string_view ToString(CommandStatus status);

struct CommandResult {
  CommandStatus status = CommandStatus::kInvalidInput;
  std::string payload;      // for stdout
  std::string diagnostics;  // for stderr
  int exit_code() const { return ExitCode(status); }
};

// args excludes the program name.
CommandResult RunCli(const std::vector<std::string>& args);

}  // namespace tspan

#endif  // TSPAN_CLI_H_
