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

#include "anonybench/error.h"

namespace anonybench {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIngestion: return "ingestion error";
    case ErrorKind::kSchema: return "schema error";
    case ErrorKind::kUnsupportedConstruct: return "unsupported construct";
    case ErrorKind::kLex: return "lex error";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kParameter: return "parameter error";
    case ErrorKind::kState: return "state error";
    case ErrorKind::kTraining: return "training error";
    case ErrorKind::kInput: return "input error";
    case ErrorKind::kTransformer: return "transformer error";
    case ErrorKind::kUnsupportedExplainer: return "unsupported explainer";
    case ErrorKind::kInternal: return "internal error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace anonybench
