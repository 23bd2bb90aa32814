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

// Pluggable anonymization techniques, including external commands.

#ifndef ANONYBENCH_NORMALIZE_TRANSFORMER_H_
#define ANONYBENCH_NORMALIZE_TRANSFORMER_H_

#include <chrono>
#include <string>
#include <string_view>

#include "anonybench/corpus/corpus.h"
#include "anonybench/normalize/clues.h"
#include "anonybench/normalize/rules.h"

namespace anonybench::normalize {

enum class TransformerKind { kIdentity, kBuiltinNormalize, kClueElimination, kExternalCommand };

struct TransformerSpec {
  TransformerKind kind = TransformerKind::kIdentity;
  // Shell command; "{in}" and "{out}" are replaced by quoted file paths.
  // Without "{in}" the source arrives on stdin, without "{out}" the result
  // is read from stdout.
  std::string command_template;
  std::chrono::milliseconds timeout{60000};
  NormalizeOptions normalize;
  ClueOptions clues;
};

// "identity", "normalize", "declue" or "cmd:<template>".
TransformerSpec ParseTechnique(std::string_view text);
std::string TechniqueName(const TransformerSpec& spec);

// Only the builtin techniques can be applied to training files in the
// augmenting scenario.
bool IsBuiltin(const TransformerSpec& spec);

// Applies the technique to preprocessed source. Builtin techniques return
// canonical text; external output is returned verbatim. Throws
// Error(kTransformer) on failure.
std::string TransformSource(const std::string& source, const TransformerSpec& spec);

// As TransformSource with stage = transformed.
corpus::Program Transform(const corpus::Program& program, const TransformerSpec& spec);

struct CommandResult {
  int exit_code = 0;
  bool timed_out = false;
  std::string stdout_text;
  std::string stderr_text;
};

// Runs `/bin/sh -c command` in `workdir` with `input` on stdin.
CommandResult RunCommand(const std::string& command, const std::string& input,
                         const std::string& workdir,
                         std::chrono::milliseconds timeout);

// Single-quotes `s` for /bin/sh.
std::string ShellQuote(const std::string& s);

}  // namespace anonybench::normalize

#endif  // ANONYBENCH_NORMALIZE_TRANSFORMER_H_
