// Copyright 2026 The Anonybench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared plumbing for the anonybench subcommands.

#ifndef ANONYBENCH_TOOLS_ANONYBENCH_COMMANDS_H_
#define ANONYBENCH_TOOLS_ANONYBENCH_COMMANDS_H_

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace anonybench::tools {

// Deferred actions; the selected subcommand stores its handler here and
// main() runs it inside one error boundary.
using Action = std::function<void()>;

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& content);
// Writes to `path`, or to stdout when path is empty or "-".
void Emit(const std::string& path, const std::string& content);

void AddSourceCommands(CLI::App& app, Action& action);
void AddModelCommands(CLI::App& app, Action& action);
void AddEvalCommands(CLI::App& app, Action& action);

}  // namespace anonybench::tools

#endif  // ANONYBENCH_TOOLS_ANONYBENCH_COMMANDS_H_
