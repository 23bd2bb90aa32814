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

#ifndef ANONYBENCH_ERROR_H_
#define ANONYBENCH_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace anonybench {

enum class ErrorKind {
  kIngestion,
  kSchema,
  kUnsupportedConstruct,
  kLex,
  kParse,
  kParameter,
  kState,
  kTraining,
  kInput,
  kTransformer,
  kUnsupportedExplainer,
  kInternal,
};

std::string_view ErrorKindName(ErrorKind kind);

// All library failures are reported through this exception type. The kind
// tells callers which contract was violated; the message is human readable.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace anonybench

#endif  // ANONYBENCH_ERROR_H_
