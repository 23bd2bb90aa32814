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

#include "anonybench/features/analyze.h"

#include "anonybench/cparse/lexer.h"
#include "anonybench/cparse/parser.h"
#include "anonybench/cparse/printer.h"
#include "anonybench/error.h"

namespace anonybench::features {

ProgramView AnalyzeSource(std::string_view source) {
  ProgramView view;
  try {
    view.text = cparse::Print(cparse::ParseSource(source));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kParse && e.kind() != ErrorKind::kLex) throw;
    view.text = std::string(source);
    view.features = ExtractLexical(cparse::Lex(view.text));
    return view;
  }
  auto tokens = cparse::Lex(view.text);
  view.features = Extract(cparse::Parse(tokens), tokens);
  view.parsed = true;
  return view;
}

}  // namespace anonybench::features
