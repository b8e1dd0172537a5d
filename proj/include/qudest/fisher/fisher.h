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

#include <functional>
#include <string>
#include <vector>

#include "qudest/circuit/measurement.h"
#include "qudest/circuit/state.h"
#include "qudest/core/weyl_heisenberg.h"

namespace qudest {

/// Real symmetric Fisher information matrix with ordered parameter labels.
struct FisherMatrix {
    std::vector<std::string> labels;
    RMatrix entries;

    double asymmetry() const;
    double min_eigenvalue() const;
};

/// diag(4, 4 sin²α, 4 sin²α sin²θ) over (α, θ, φ).
FisherMatrix qfi_qubit(double alpha, double theta);

/// Close-to-the-identity parameters ({r_f}_{f∈Su}, {r_a}_{a∈S+}, {φ_a}_{a∈S+}),
/// ordered as partition_indices(d) lists them.
struct CloseIdParams {
    int d = 0;
    std::vector<double> r_unpaired;
    std::vector<double> r_paired;
    std::vector<double> phi_paired;

    /// Reads the parameters off coefficients that carry the φ_{0,0} = 0 convention.
    static CloseIdParams from_coefficients(const WHCoefficients &c);
    static CloseIdParams from_vector(int d, const RVector &values);

    RVector to_vector() const;
    std::vector<std::string> labels() const;
    /// 1 − Σ r_f² − 2 Σ r_a².
    double r0_squared() const;
};

/// Block matrix with A_fg = 4 r_f r_g / r0² + 4δ, B_fa = 8 r_f r_a / r0²,
/// C_ab = 16 r_a r_b / r0² + 8δ, D_ab = 8 r_a² δ. Throws out-of-regime when r0² ≤ 0.
FisherMatrix qfi_close_identity(const CloseIdParams &params);

/// Classical Fisher information of the tilde-H measurement, summed outcome by
/// outcome over P0, P_f, P_a and P_⊖a.
FisherMatrix cfi_close_identity(const CloseIdParams &params);

using ProbabilityModel = std::function<RVector(const RVector &)>;
using UnitaryModel = std::function<CMatrix(const RVector &)>;

inline constexpr double kFisherStep = 1e-6;

/// I_ab = Σ_y ∂_aP_y ∂_bP_y / P_y by central differences; outcomes with P < 1e−12
/// are skipped. The step shrinks when a perturbed point leaves the simplex;
/// invalid-model if it never returns.
FisherMatrix cfi_numeric(const ProbabilityModel &model, const RVector &at, std::vector<std::string> labels,
                         double step = kFisherStep);

/// F_ab = 4 Re⟨H_aΦ|H_bΦ⟩ − 4⟨H_a⟩⟨H_b⟩ with H_a = i(∂_aU†)U acting on wire 0 of
/// the probe. invalid-model if the model leaves the unitary group by more than 1e−6.
FisherMatrix qfi_numeric(const UnitaryModel &model, const RVector &at, const PureState &probe,
                         std::vector<std::string> labels, double step = kFisherStep);

/// Half the sum of |eigenvalues| of F1 − F2 (the full sum when halved is false).
/// Throws label-mismatch for different parameter lists.
double fisher_trace_distance(const FisherMatrix &f1, const FisherMatrix &f2, bool halved = true);

/// Control amplitudes of the constrained close-to-the-identity family.
CVector close_identity_control(const CloseIdParams &params);
/// Tilde-H basis probabilities of close_identity_control.
RVector close_identity_probabilities(const CloseIdParams &params);

/// (α, θ, φ) ↦ exp(−iα n̂·σ̂) and its full-circuit probabilities.
UnitaryModel qubit_unitary_model();
ProbabilityModel qubit_probability_model();

/// λ ↦ exp(iΣλ_jT_j) and the control-state probabilities in `basis`.
UnitaryModel gell_mann_unitary_model(int d);
ProbabilityModel gell_mann_probability_model(int d, MeasurementBasis basis);

std::vector<std::string> qubit_labels();
std::vector<std::string> lambda_labels(int d);

}  // namespace qudest
