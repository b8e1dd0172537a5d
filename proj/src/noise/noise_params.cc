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

#include "qudest/noise/noise_params.h"

#include <algorithm>

#include "qudest/core/error.h"

namespace qudest {

namespace {

double lookup(const std::vector<double> &values, int qubit) {
    if (qubit < 0 || static_cast<size_t>(qubit) >= values.size()) {
        return 0.0;
    }
    return values[static_cast<size_t>(qubit)];
}

void check_probability(double p, const std::string &what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::kInvalidParameters, what + " must lie in [0, 1]");
    }
}

}  // namespace

int NoiseParams::qubit_for_wire(int wire) const {
    if (wire >= 0 && static_cast<size_t>(wire) < wire_to_qubit.size()) {
        return wire_to_qubit[static_cast<size_t>(wire)];
    }
    return wire;
}

double NoiseParams::single_gate_error(int wire) const {
    return lookup(p_sx, qubit_for_wire(wire));
}

double NoiseParams::two_qubit_error(int wire_a, int wire_b) const {
    int a = qubit_for_wire(wire_a);
    int b = qubit_for_wire(wire_b);
    auto it = p_cx.find({std::min(a, b), std::max(a, b)});
    return it == p_cx.end() ? 0.0 : it->second;
}

double NoiseParams::t1_for_wire(int wire) const {
    return lookup(t1, qubit_for_wire(wire));
}

double NoiseParams::t2_for_wire(int wire) const {
    return lookup(t2, qubit_for_wire(wire));
}

RMatrix NoiseParams::confusion_for_wire(int wire) const {
    int q = qubit_for_wire(wire);
    if (q < 0 || static_cast<size_t>(q) >= readout.size()) {
        return RMatrix::Identity(2, 2);
    }
    return readout[static_cast<size_t>(q)];
}

bool NoiseParams::has_readout_error() const {
    for (const RMatrix &m : readout) {
        if (!m.isIdentity(0.0)) {
            return true;
        }
    }
    return false;
}

bool NoiseParams::is_noiseless() const {
    auto all_zero = [](const std::vector<double> &v) {
        return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
    };
    bool relax = false;
    for (size_t q = 0; q < t1.size(); ++q) {
        if (t1[q] > 0.0) {
            relax = true;
        }
    }
    bool timed = duration_single_ns > 0.0 || duration_cx_ns > 0.0 || duration_measure_ns > 0.0;
    bool cx = std::any_of(p_cx.begin(), p_cx.end(), [](const auto &kv) { return kv.second != 0.0; });
    return all_zero(p_sx) && !cx && !has_readout_error() && !(relax && timed);
}

void NoiseParams::validate() const {
    if (t1.size() != t2.size()) {
        throw Error(ErrorCode::kInvalidParameters, "T1 and T2 lists differ in length");
    }
    for (size_t q = 0; q < t1.size(); ++q) {
        if (t1[q] < 0.0 || t2[q] < 0.0) {
            throw Error(ErrorCode::kInvalidParameters, "relaxation times must be non-negative");
        }
        if (t1[q] > 0.0 && t2[q] > 2.0 * t1[q]) {
            throw Error(ErrorCode::kInvalidParameters, "T2 exceeds 2*T1 on qubit " + std::to_string(q));
        }
    }
    for (double p : p_sx) {
        check_probability(p, "single-qubit gate error");
    }
    for (const auto &kv : p_cx) {
        check_probability(kv.second, "control-not error");
    }
    for (const RMatrix &m : readout) {
        if (m.rows() != 2 || m.cols() != 2) {
            throw Error(ErrorCode::kInvalidParameters, "readout confusion must be 2x2");
        }
        for (Eigen::Index r = 0; r < 2; ++r) {
            if (m.row(r).minCoeff() < 0.0 || std::abs(m.row(r).sum() - 1.0) > 1e-12) {
                throw Error(ErrorCode::kInvalidParameters, "readout confusion rows must be stochastic");
            }
        }
    }
    if (duration_single_ns < 0.0 || duration_cx_ns < 0.0 || duration_measure_ns < 0.0) {
        throw Error(ErrorCode::kInvalidParameters, "gate durations must be non-negative");
    }
}

}  // namespace qudest
