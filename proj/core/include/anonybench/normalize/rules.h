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

// Semantics-preserving normalization rules over the C subset.

#ifndef ANONYBENCH_NORMALIZE_RULES_H_
#define ANONYBENCH_NORMALIZE_RULES_H_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "anonybench/cparse/ast.h"

namespace anonybench::normalize {

enum class Rule {
  kBraces,
  kMultidecl,
  kCompoundAssign,
  kComma,
  kSwitch2If,
  kFlattenIf,
  kIfElse,
  kUnnecessaryReturn,
  kVoidReturn,
  kMainParams,
  kTypes,
  kRenaming,
  kParen,
};

// The order in which one normalization pass applies the rules.
inline constexpr std::array<Rule, 13> kRuleOrder = {
    Rule::kBraces,     Rule::kMultidecl,         Rule::kCompoundAssign,
    Rule::kComma,      Rule::kSwitch2If,         Rule::kFlattenIf,
    Rule::kIfElse,     Rule::kUnnecessaryReturn, Rule::kVoidReturn,
    Rule::kMainParams, Rule::kTypes,             Rule::kRenaming,
    Rule::kParen};

std::string_view RuleName(Rule rule);
// Accepts the names returned by RuleName, ignoring case, "-" and "_".
Rule ParseRule(std::string_view name);

// Maps a type-specifier spelling to its canonical spelling. Keys are
// matched as word multisets, so "long unsigned int" hits "unsigned long int".
using TypeTable = std::map<std::string, std::string>;

// Canonical spellings for an LP64 target.
const TypeTable& Lp64TypeTable();

struct NormalizeOptions {
  TypeTable types = Lp64TypeTable();
  int max_iterations = 10;
};

// Rules never fail: a rule that does not apply returns its input unchanged.
cparse::Ast ApplyRule(const cparse::Ast& ast, Rule rule,
                      const NormalizeOptions& options = {});

// Applies every rule in kRuleOrder, repeating until a pass changes nothing.
// Throws Error(kInternal) if no fixed point is reached within
// options.max_iterations passes.
cparse::Ast Normalize(const cparse::Ast& ast,
                      const NormalizeOptions& options = {});

// Parse, normalize and print.
std::string NormalizeSource(const std::string& source,
                            const NormalizeOptions& options = {});

struct RenameEntry {
  int scope = 0;     // 0 = file scope; other ids are unique per block
  std::string kind;  // "variable", "function", "type", "tag", "field"
  std::string original;
  std::string renamed;
};

// The Renaming rule with a record of every binding it introduced.
cparse::Ast RenameIdentifiers(const cparse::Ast& ast,
                              std::vector<RenameEntry>* log);

}  // namespace anonybench::normalize

#endif  // ANONYBENCH_NORMALIZE_RULES_H_
