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

#include <vector>

#include "qudest/core/unitary.h"
#include "qudest/harness/config.h"
#include "qudest/harness/records.h"

namespace qudest {

/// Haar qubit unitaries estimated by the three-circuit procedure and by process
/// tomography at every shot count and scenario; AGF against the truth.
std::vector<TrialRecord> run_qubit_comparison(const ExperimentConfig &cfg, int threads);

/// Close-to-identity unitaries measured in the tilde-H basis; amplitude and
/// phase errors against the truth.
std::vector<TrialRecord> run_close_identity_study(const ExperimentConfig &cfg, int threads);

/// Average relative error of the first-order Gell-Mann estimator vs 1 − r₀.
std::vector<TrialRecord> run_gm_accuracy_study(const ExperimentConfig &cfg, int threads);

/// Trace distance between QFI and the CFI of the computational (cfi_wh) and
/// Gell-Mann (cfi_gm) measurements, stored in err_amp.
std::vector<TrialRecord> run_fisher_distance_study(const ExperimentConfig &cfg, int threads);

/// Dispatches on cfg.kind after validating; output is sorted.
std::vector<TrialRecord> run_experiment(const ExperimentConfig &cfg, int threads);

/// The close-to-identity Hamiltonian for a unitary id: scale s log-uniform in
/// [lambda_min, lambda_max], λ_j ~ U[0, s].
HamiltonianParams sample_close_identity_params(const ExperimentConfig &cfg, int unitary_id);

}  // namespace qudest
