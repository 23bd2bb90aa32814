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

#ifndef ANONYBENCH_CORPUS_PREPROCESS_H_
#define ANONYBENCH_CORPUS_PREPROCESS_H_

#include <string>
#include <string_view>

#include "anonybench/corpus/corpus.h"

namespace anonybench::corpus {

// Removes comments, substitutes object-like #define macros textually and
// keeps #include lines verbatim. Function-like macros and conditional
// directives raise Error(kUnsupportedConstruct) naming the line.
std::string PreprocessSource(std::string_view source);

// PreprocessSource on a raw program; the result has stage kPreprocessed.
Program Preprocess(const Program& program);

}  // namespace anonybench::corpus

#endif  // ANONYBENCH_CORPUS_PREPROCESS_H_
