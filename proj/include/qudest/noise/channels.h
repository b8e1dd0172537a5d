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

#include <string>
#include <vector>

#include "qudest/circuit/measurement.h"
#include "qudest/circuit/state.h"
#include "qudest/noise/noise_params.h"

namespace qudest {

/// Channel ρ ↦ Σ_k K_k ρ K_k† on a subsystem of dimension `dim`.
struct KrausChannel {
    int dim = 0;
    std::vector<CMatrix> ops;

    /// max-abs entry of Σ K†K − I.
    double completeness_error() const;
    CMatrix apply(const CMatrix &rho) const;
    bool is_identity() const {
        return ops.size() == 1 && (ops[0] - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() == 0.0;
    }
};

/// ρ ↦ (1−p)ρ + p·I/D on a register with the given local dimensions
/// (D = product). Kraus operators are tensor products of displacement operators.
KrausChannel depolarizing_channel(double p, const std::vector<int> &dims);
inline KrausChannel depolarizing_channel(double p, int dim) {
    return depolarizing_channel(p, std::vector<int>{dim});
}

/// Qubit amplitude damping with γ = 1 − e^{−t/T1} followed by phase damping
/// chosen so coherences decay as e^{−t/T2}. T1 ≤ 0 or t = 0 gives the identity.
KrausChannel thermal_relaxation_channel(double t1, double t2, double t);

/// Applies a channel to the listed wires of a register state.
void apply_channel(CMatrix &rho, const WireLayout &layout, const std::vector<int> &wires, const KrausChannel &channel);

/// Row-stochastic flip matrix [[1−e, e], [e, 1−e]].
RMatrix symmetric_confusion(double e);

/// P' = (⊗_q A_q)ᵀ P with A_q[true][recorded]; the first matrix acts on the
/// most significant outcome digit. Throws non-stochastic on invalid rows.
RVector apply_readout_confusion(const RVector &p, const std::vector<RMatrix> &confusions);

/// Inverts the readout confusion on observed frequencies and projects the
/// result onto the probability simplex. Throws mitigation-unavailable for a
/// singular confusion matrix.
RVector mitigate_probabilities(const RVector &frequencies, const std::vector<RMatrix> &confusions);
RVector mitigate_readout(const MeasurementCounts &counts, const std::vector<RMatrix> &confusions);

/// Euclidean projection onto {p : p ≥ 0, Σp = 1}.
RVector project_to_simplex(const RVector &v);

/// Computational-basis outcome probabilities of `wires` after relaxation over
/// the measurement duration and readout confusion of the underlying qubits.
RVector noisy_measurement_probabilities(const DensityState &rho, const std::vector<int> &wires,
                                        const NoiseParams &noise);

/// Confusion matrices of the qubits behind `wires`, in wire order.
std::vector<RMatrix> readout_confusions(const NoiseParams &noise, const std::vector<int> &wires);

/// Presets: noiseless, full, cnot-only, full-ideal-cnot. Throws unknown-scenario.
NoiseParams noise_scenario(const std::string &name);
std::vector<std::string> noise_scenario_names();

}  // namespace qudest
