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

// Command line front end for the anonybench library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "anonybench/error.h"
#include "anonybench/version.h"
#include "commands.h"

namespace anonybench::tools {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIngestion, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIngestion, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorKind::kIngestion, "failed writing " + path.string());
}

void Emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  WriteFile(path, content);
}

}  // namespace anonybench::tools

int main(int argc, char** argv) {
  using anonybench::tools::Action;
  CLI::App app{"Authorship attribution benchmark for anonymized C code"};
  app.set_version_flag("--version", std::string(anonybench::kVersion));
  app.require_subcommand(1);
  Action action;
  anonybench::tools::AddSourceCommands(app, action);
  anonybench::tools::AddModelCommands(app, action);
  anonybench::tools::AddEvalCommands(app, action);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    if (action) action();
  } catch (const anonybench::Error& e) {
    std::fprintf(stderr, "anonybench: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "anonybench: %s\n", e.what());
    return 1;
  }
  return 0;
}
