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

#ifndef ANONYBENCH_CPARSE_SOURCE_SPAN_H_
#define ANONYBENCH_CPARSE_SOURCE_SPAN_H_

#include <cstddef>
#include <string>

namespace anonybench::cparse {

// Half-open byte range [byte_start, byte_end) into the analysed text, plus the
// 1-based lines of its first and last byte.
struct SourceSpan {
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;
  int line_start = 1;
  int line_end = 1;

  bool Contains(const SourceSpan& other) const {
    return byte_start <= other.byte_start && other.byte_end <= byte_end;
  }
  bool empty() const { return byte_start == byte_end; }

  static SourceSpan Cover(const SourceSpan& first, const SourceSpan& last) {
    return {first.byte_start, last.byte_end, first.line_start, last.line_end};
  }

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

std::string ToString(const SourceSpan& span);

}  // namespace anonybench::cparse

#endif  // ANONYBENCH_CPARSE_SOURCE_SPAN_H_
