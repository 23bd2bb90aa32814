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

#ifndef ANONYBENCH_SRC_INTERNAL_JSON_CODEC_H_
#define ANONYBENCH_SRC_INTERNAL_JSON_CODEC_H_

// JSON value codecs shared by the model and report writers. Not installed.

#include "anonybench/features/pipeline.h"
#include "json.hpp"

namespace anonybench::internal {

nlohmann::json PipelineToValue(const features::FeaturePipeline& pipeline);
features::FeaturePipeline PipelineFromValue(const nlohmann::json& value);

// Wraps nlohmann parse errors into Error(kSchema).
nlohmann::json ParseJson(const std::string& text, const char* what);

}  // namespace anonybench::internal

#endif  // ANONYBENCH_SRC_INTERNAL_JSON_CODEC_H_
