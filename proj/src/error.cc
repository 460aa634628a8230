// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "abcc/error.h"

namespace abcc {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownRelation:
      return "UnknownRelation";
    case ErrorCode::kArityMismatch:
      return "ArityMismatch";
    case ErrorCode::kTypeError:
      return "TypeError";
    case ErrorCode::kSyntaxError:
      return "SyntaxError";
    case ErrorCode::kUnsafeVariable:
      return "UnsafeVariable";
    case ErrorCode::kUnknownCandidate:
      return "UnknownCandidate";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInputFormat:
      return "InputFormat";
    case ErrorCode::kUndefinedScore:
      return "UndefinedScore";
    case ErrorCode::kInstanceTooLarge:
      return "InstanceTooLarge";
    case ErrorCode::kModelMismatch:
      return "ModelMismatch";
    case ErrorCode::kPatternViolation:
      return "PatternViolation";
  }
  return "Unknown";
}

}  // namespace abcc
