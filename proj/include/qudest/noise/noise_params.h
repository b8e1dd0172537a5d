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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qudest/core/types.h"

namespace qudest {

/// Device-level noise description. Per-qubit vectors are indexed by device
/// qubit; wire_to_qubit maps circuit wires onto device qubits.
struct NoiseParams {
    std::string name = "noiseless";

    /// Relaxation times in ns. Zero disables relaxation on that qubit.
    std::vector<double> t1;
    std::vector<double> t2;
    /// Depolarizing probability applied after every single-wire gate.
    std::vector<double> p_sx;
    /// Row-stochastic confusion A[true][recorded] per qubit.
    std::vector<RMatrix> readout;
    /// Two-qubit depolarizing probability keyed by the sorted device-qubit pair.
    std::map<std::pair<int, int>, double> p_cx;

    double duration_single_ns = 35.0;
    double duration_cx_ns = 300.0;
    double duration_measure_ns = 700.0;

    std::vector<int> wire_to_qubit = {1, 0, 2};

    int qubit_for_wire(int wire) const;
    double single_gate_error(int wire) const;
    double two_qubit_error(int wire_a, int wire_b) const;
    double t1_for_wire(int wire) const;
    double t2_for_wire(int wire) const;
    /// Confusion matrix of the qubit behind a wire; identity when unset.
    RMatrix confusion_for_wire(int wire) const;

    bool has_readout_error() const;
    bool is_noiseless() const;

    /// Throws invalid-parameters on probabilities outside [0, 1], T2 > 2·T1,
    /// negative durations, or non-stochastic confusion rows.
    void validate() const;
};

}  // namespace qudest
