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

#include "qudest/circuit/state.h"
#include "qudest/core/unitary.h"
#include "qudest/noise/noise_params.h"

namespace qudest {

enum class GateKind {
    kLocalUnitary,
    kControlledShift,
    kControlledPhase,
    kControlledShiftDagger,
    kControlledPhaseDagger,
    kFourier,
    kInverseFourier,
    kShift,
    kTildeH,
    kQubitH,
    kQubitS,
};

/// One gate of a circuit. Two-wire gates act on (target, control); for kTildeH
/// these are the two control qudits of the register, in that order.
struct GateOp {
    GateKind kind = GateKind::kLocalUnitary;
    int target = 0;
    int control = -1;
    int offset = 0;
    CMatrix matrix;

    static GateOp local(int wire, const UnitaryMatrix &u);
    static GateOp controlled(GateKind kind, int target, int control, int offset);
    static GateOp fourier(int wire);
    static GateOp inverse_fourier(int wire);
    static GateOp shift(int wire);
    static GateOp tilde_h(int first, int second);
    static GateOp qubit_h(int wire);
    static GateOp qubit_s(int wire);

    bool is_two_wire() const;
    std::vector<int> wires() const;
    /// Dense operator on wires(), first wire most significant.
    CMatrix local_matrix(const WireLayout &layout) const;
    std::string name() const;
};

/// X_{tc}^{(i)}-style controlled power on two qudits of dimension d: for control
/// basis state |c⟩ the target receives V^{c⊕i} with V ∈ {X, X†, Z, Z†}. Index of
/// the returned d²×d² matrix is t·d + c. Throws wiring-error if target == control.
CMatrix controlled_gate(GateKind kind, int target, int control, int offset, int d);

class Circuit {
   public:
    explicit Circuit(WireLayout layout) : layout_(std::move(layout)) {
    }

    /// Throws wiring-error for out-of-range or coinciding wires and
    /// shape-error for a local matrix of the wrong size.
    Circuit &append(GateOp op);

    const WireLayout &layout() const {
        return layout_;
    }
    const std::vector<GateOp> &ops() const {
        return ops_;
    }

   private:
    WireLayout layout_;
    std::vector<GateOp> ops_;
};

/// The three-wire estimation circuit: target wire 0, control qudits 1 and 2.
Circuit build_estimation_circuit(int d, const UnitaryMatrix &u);

enum class QubitBasis { kZ, kX, kY };

/// Qubit variants that omit the final shift and append the basis change on both
/// controls (nothing for Z, H for X, S then H for Y).
Circuit build_qubit_measurement_circuit(const UnitaryMatrix &u, QubitBasis basis);

PureState apply_circuit(const Circuit &c, const PureState &s);

/// Applies every gate as a channel: ideal conjugation, then depolarizing noise on
/// the gate's wires, then thermal relaxation over the gate duration.
DensityState apply_circuit_density(const Circuit &c, const DensityState &rho, const NoiseParams &noise);

struct EstimationOutput {
    CVector target;
    PureState control;
    /// ‖Φ − target ⊗ control‖₂ of the circuit output.
    double product_residual = 0.0;
    /// |⟨ψ|target⟩|².
    double target_fidelity = 0.0;
};

/// Runs the estimation circuit on |ψ⟩|0⟩|0⟩ and factors the output.
EstimationOutput run_estimation(const UnitaryMatrix &u, const CVector &psi);

/// (1/d) Σ_{j1,j2} Z^{−j1−1} X^{j2} |ψ⟩ ⊗ |j1⟩ ⊗ |j2⟩.
PureState probe_state(const CVector &psi, int d);

/// Outcome probabilities of the control pair for the given qubit measurement circuit.
RVector qubit_measurement_probabilities(const UnitaryMatrix &u, QubitBasis basis);

}  // namespace qudest
