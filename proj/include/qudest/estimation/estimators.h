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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qudest/circuit/measurement.h"
#include "qudest/core/unitary.h"
#include "qudest/core/weyl_heisenberg.h"
#include "qudest/estimation/partition.h"

namespace qudest {

/// Sign triple (s_x, s_y, s_z) of the rotation axis, each ±1.
struct Octant {
    int sx = 1;
    int sy = 1;
    int sz = 1;
};

/// U = exp(−iα n̂·σ̂) with n̂ = (sinθ cosφ, sinθ sinφ, cosθ).
struct QubitAngles {
    double alpha = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    std::optional<Octant> octant;
    /// Set when θ or φ is undetermined by the probabilities and was returned as 0.
    bool degenerate = false;
};

UnitaryMatrix qubit_unitary(double alpha, double theta, double phi);

/// Computational-basis probabilities of the full circuit, flat order (P00, P01, P10, P11).
RVector qubit_probabilities(double alpha, double theta, double phi);

/// Throws invalid-distribution if P is not a point of the 4-outcome simplex.
QubitAngles estimate_qubit_with_octant(const RVector &p, const Octant &octant);

/// U = c_I I − i c_x X − i c_y Y − i c_z Z with c_I ≥ 0.
struct QubitCoefficients {
    double c_i = 1.0;
    double c_x = 0.0;
    double c_y = 0.0;
    double c_z = 0.0;
    /// Which step of the sign discrimination produced the result.
    std::string branch;

    UnitaryMatrix unitary() const;
};

/// Sign discrimination from the Z, X and Y measurement circuits. Probabilities
/// are plug-in frequencies; `tie_seed` drives sgn(0) and the global-phase branch.
QubitCoefficients estimate_qubit_no_prior(const RVector &pz, const RVector &px, const RVector &py, uint64_t tie_seed);
/// Throws insufficient-data if any record has zero shots.
QubitCoefficients estimate_qubit_no_prior(const MeasurementCounts &z, const MeasurementCounts &x,
                                          const MeasurementCounts &y, uint64_t tie_seed);

struct PairEstimate {
    WHIndex index;
    double r = 0.0;
    double cos_delta = 0.0;
    /// P_a + P_⊖a vanished; r = 0 and the candidates are meaningless.
    bool phase_undefined = false;
    std::array<double, 4> candidates{};
};

struct CloseIdEstimate {
    int d = 0;
    double r0 = 1.0;
    std::vector<std::pair<WHIndex, double>> unpaired;
    std::vector<PairEstimate> paired;

    /// r0² + Σ r_f² + 2 Σ r_a².
    double normalization() const;
};

/// Estimator from the tilde-H basis probabilities (flat index m·d + n).
CloseIdEstimate estimate_close_identity(const RVector &p, int d);
CloseIdEstimate estimate_close_identity(const MeasurementCounts &counts, int d);

/// φ_a = ±½ arccos(cos Δ_a) + π a_x a_z / d + (n + ½)π, n ∈ {0, 1}, wrapped to (−π, π].
std::array<double, 4> phase_candidates(WHIndex a, double cos_delta, int d);

/// Per pair, the candidate nearest (circularly) to arg(reference[a]). The
/// reference should carry the φ_{0,0} = 0 convention.
std::vector<double> select_phase_candidate(const CloseIdEstimate &est, const WHCoefficients &reference);

/// λ_j = √(d·p_j/2) for j = 1..d²−1 from gm-basis probabilities.
HamiltonianParams gm_first_order_estimate(const RVector &p, int d);
HamiltonianParams gm_first_order_estimate(const MeasurementCounts &counts, int d);

/// 1 − |u_{0,0}|.
double closeness_measure(const UnitaryMatrix &u);

}  // namespace qudest
