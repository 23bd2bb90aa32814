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

// Targeted removal of residual attribution clues.

#ifndef ANONYBENCH_NORMALIZE_CLUES_H_
#define ANONYBENCH_NORMALIZE_CLUES_H_

#include <filesystem>
#include <string>
#include <vector>

#include "anonybench/cparse/ast.h"

namespace anonybench::normalize {

// The C89 library headers plus <stdint.h> and <inttypes.h>.
const std::vector<std::string>& StandardHeaderSuperset();

struct ClueOptions {
  bool pad_strings = true;
  int min_string_len = 32;
  bool replace_headers = true;
  std::vector<std::string> headers = StandardHeaderSuperset();
  // Function prototypes such as "size_t strlen(const char *s);".
  std::vector<std::string> decoys;
  bool strip_cast_params = true;
};

// Pads a plain string literal spelling (possibly several adjacent pieces)
// with "\0" and '#' filler until its decoded length reaches min_len.
// Prefixed (wide or UTF) literals are returned unchanged.
std::string PadStringLiteral(const std::string& spelling, int min_len);

// Number of characters a string literal spelling denotes, without the
// terminating NUL.
int DecodedLength(const std::string& spelling);

// One signature per non-blank line; lines starting with "//" are skipped.
std::vector<std::string> ParseDecoyList(const std::string& text);
std::vector<std::string> LoadDecoyList(const std::filesystem::path& path);

// Throws Error(kParameter) for a decoy signature that cannot be called with
// zero-valued arguments.
cparse::Ast EliminateClues(const cparse::Ast& ast,
                           const ClueOptions& options = {});

std::string EliminateCluesSource(const std::string& source,
                                 const ClueOptions& options = {});

}  // namespace anonybench::normalize

#endif  // ANONYBENCH_NORMALIZE_CLUES_H_
