// Copyright 2026 The SpecAug Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPECAUG_ERRORS_H_
#define SPECAUG_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace specaug {

// Classifies data errors: problems with inputs coming from outside the
// program (files, manifests, policy text, user-supplied names).
enum class ErrorCode {
  kBadMagic,
  kUnsupportedVersion,
  kSizeMismatch,
  kNonFinite,
  kMalformedHeader,
  kUnsupportedFormat,
  kTruncated,
  kEmptyInput,
  kDimension,
  kUnknownPreset,
  kPolicySyntax,
  kPairing,
  kManifest,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Thrown for bad data. Callers that process many inputs (the pipeline, the
// CLI) catch this and record or report it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when a caller violates a documented precondition. This is a bug in
// the calling code, not a problem with the data.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace specaug

#endif  // SPECAUG_ERRORS_H_
