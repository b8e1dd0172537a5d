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
#include <functional>
#include <string>

#include "qudest/circuit/measurement.h"
#include "qudest/core/unitary.h"
#include "qudest/noise/noise_params.h"

namespace qudest {

enum class TomographyInput { kZero, kOne, kPlus, kPlusI };
enum class PauliBasis { kX, kY, kZ };

inline constexpr std::array<TomographyInput, 4> kTomographyInputs = {
    TomographyInput::kZero, TomographyInput::kOne, TomographyInput::kPlus, TomographyInput::kPlusI};
inline constexpr std::array<PauliBasis, 3> kPauliBases = {PauliBasis::kX, PauliBasis::kY, PauliBasis::kZ};

std::string input_name(TomographyInput in);
std::string pauli_basis_name(PauliBasis b);
CMatrix input_density(TomographyInput in);

/// Single-qubit channel as a linear map on 2×2 matrices.
using QubitChannel = std::function<CMatrix(const CMatrix &)>;

/// Two-outcome counts for one preparation/measurement setting; outcome 0 is the
/// +1 eigenvalue of the measured Pauli operator.
using ChannelSampler = std::function<MeasurementCounts(TomographyInput, PauliBasis, uint64_t shots, uint64_t seed)>;

/// χ in the Pauli basis {I, X, Y, Z}: E(ρ) = Σ χ_mn P_m ρ P_n.
struct ProcessMatrix {
    /// After clipping the Choi operator to PSD and renormalizing its trace.
    CMatrix chi;
    /// Plain linear inversion.
    CMatrix chi_raw;

    CMatrix apply(const CMatrix &rho) const;
    QubitChannel as_channel() const;
};

const std::array<CMatrix, 4> &pauli_matrices();

/// χ of ρ ↦ UρU†, i.e. c c† with U = Σ c_m P_m.
CMatrix unitary_chi(const UnitaryMatrix &u);
/// χ of the channel with the given Choi operator Σ |j⟩⟨k| ⊗ E(|j⟩⟨k|).
CMatrix chi_from_choi(const CMatrix &choi);
CMatrix choi_from_chi(const CMatrix &chi);

/// Linear inversion from output Bloch vectors of |0⟩, |1⟩, |+⟩, |+i⟩.
ProcessMatrix sqpt_from_bloch(const std::array<Eigen::Vector3d, 4> &bloch);

/// Maps the counts of one setting to (+1, −1) outcome probabilities; used to
/// plug readout mitigation into the reconstruction.
using CountsToProbabilities = std::function<RVector(const MeasurementCounts &)>;

/// Runs the 12 settings with per-setting seeds derived from `seed`. Without a
/// converter the plug-in frequencies are used.
ProcessMatrix sqpt_reconstruct(const ChannelSampler &sampler, uint64_t shots_per_setting, uint64_t seed,
                               const CountsToProbabilities &convert = {});

/// Reconstruction from exact expectation values of a known channel.
ProcessMatrix sqpt_exact(const QubitChannel &channel);

QubitChannel unitary_channel(const UnitaryMatrix &u);

/// Samples the exact outcome distribution of `channel` on each setting.
ChannelSampler exact_channel_sampler(QubitChannel channel);

/// Density simulation of preparation, the gate U, the basis change and readout
/// under `noise`, with the single wire placed on device qubit `qubit`. The 12
/// outcome distributions are computed once at construction.
ChannelSampler noisy_qubit_sampler(const UnitaryMatrix &u, const NoiseParams &noise, int qubit = 1);

/// (Σ_j Tr[U M_j† U† E(M_j)] + d²) / (d²(d+1)) over the displacement basis.
double average_gate_fidelity(const QubitChannel &channel, const UnitaryMatrix &u);
double average_gate_fidelity(const ProcessMatrix &chi, const UnitaryMatrix &u);

/// (|Tr U†V|²/d + 1)/(d+1). Throws shape-error on a dimension mismatch.
double agf_between_unitaries(const UnitaryMatrix &v, const UnitaryMatrix &u);

}  // namespace qudest
