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

#include <cstdint>
#include <string>
#include <vector>

#include "qudest/circuit/state.h"

namespace qudest {

enum class MeasurementBasis { kComputational, kTildeH, kQubitX, kQubitY, kGellMann };

std::string basis_name(MeasurementBasis basis);

struct MeasurementCounts {
    MeasurementBasis basis = MeasurementBasis::kComputational;
    std::vector<uint64_t> counts;
    uint64_t shots = 0;

    /// counts / shots; throws insufficient-data when shots == 0.
    RVector frequencies() const;
};

/// Outcome probabilities of a two-qudit control state, flat index m·d + n, after
/// the basis change selected by `basis`.
RVector born_probabilities(const PureState &control, MeasurementBasis basis);

/// Checks a probability vector against the simplex with tolerance 1e−8 and
/// returns a clipped, renormalized copy. Throws invalid-distribution otherwise.
RVector validated_distribution(const RVector &p);

/// Multinomial draw by per-shot inverse-CDF lookup; deterministic per seed.
MeasurementCounts sample_counts(const RVector &probabilities, uint64_t shots, uint64_t seed,
                                MeasurementBasis basis = MeasurementBasis::kComputational);

/// Block-Hadamard on conjugate index pairs: |n⟩ for n in S0 ∪ Su,
/// (|n⟩ + |⊖n⟩)/√2 for n in S+, (|⊖n⟩ − |n⟩)/√2 for n in S−.
CMatrix tilde_h_operator(int d);

}  // namespace qudest
