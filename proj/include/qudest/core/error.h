// Copyright 2026 The Qudest Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qudest {

/// Failure categories reported by every module. The CLI serializes these
/// names verbatim into its error JSON.
enum class ErrorCode {
    kInvalidDimension,
    kShapeError,
    kIncompleteCoefficients,
    kIndexError,
    kInvalidArgument,
    kNormalizationError,
    kWiringError,
    kLayoutMismatch,
    kBasisUnavailable,
    kInvalidDistribution,
    kInsufficientData,
    kOutOfRegime,
    kInvalidModel,
    kLabelMismatch,
    kInvalidParameters,
    kNonStochastic,
    kMitigationUnavailable,
    kUnknownScenario,
    kConfigInvalid,
    kIoError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace qudest
