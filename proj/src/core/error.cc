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

#include "qudest/core/error.h"

namespace qudest {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidDimension:
            return "invalid-dimension";
        case ErrorCode::kShapeError:
            return "shape-error";
        case ErrorCode::kIncompleteCoefficients:
            return "incomplete-coefficients";
        case ErrorCode::kIndexError:
            return "index-error";
        case ErrorCode::kInvalidArgument:
            return "invalid-argument";
        case ErrorCode::kNormalizationError:
            return "normalization-error";
        case ErrorCode::kWiringError:
            return "wiring-error";
        case ErrorCode::kLayoutMismatch:
            return "layout-mismatch";
        case ErrorCode::kBasisUnavailable:
            return "basis-unavailable";
        case ErrorCode::kInvalidDistribution:
            return "invalid-distribution";
        case ErrorCode::kInsufficientData:
            return "insufficient-data";
        case ErrorCode::kOutOfRegime:
            return "out-of-regime";
        case ErrorCode::kInvalidModel:
            return "invalid-model";
        case ErrorCode::kLabelMismatch:
            return "label-mismatch";
        case ErrorCode::kInvalidParameters:
            return "invalid-parameters";
        case ErrorCode::kNonStochastic:
            return "non-stochastic";
        case ErrorCode::kMitigationUnavailable:
            return "mitigation-unavailable";
        case ErrorCode::kUnknownScenario:
            return "unknown-scenario";
        case ErrorCode::kConfigInvalid:
            return "config-invalid";
        case ErrorCode::kIoError:
            return "io-error";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace qudest
