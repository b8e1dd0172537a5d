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

#include "qudest/circuit/circuit.h"

#include "qudest/circuit/measurement.h"
#include "qudest/core/error.h"
#include "qudest/core/weyl_heisenberg.h"
#include "qudest/noise/channels.h"

namespace qudest {

namespace {

CMatrix qubit_hadamard() {
    CMatrix h(2, 2);
    double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

CMatrix qubit_phase() {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = kI;
    return m;
}

bool is_controlled(GateKind kind) {
    return kind == GateKind::kControlledShift || kind == GateKind::kControlledPhase ||
           kind == GateKind::kControlledShiftDagger || kind == GateKind::kControlledPhaseDagger;
}

int common_dimension(const WireLayout &layout, int a, int b) {
    int d = layout.dim(a);
    if (layout.dim(b) != d) {
        throw Error(ErrorCode::kWiringError, "two-wire gate requires equal wire dimensions");
    }
    return d;
}

}  // namespace

GateOp GateOp::local(int wire, const UnitaryMatrix &u) {
    GateOp op;
    op.kind = GateKind::kLocalUnitary;
    op.target = wire;
    op.matrix = u.matrix();
    return op;
}

GateOp GateOp::controlled(GateKind kind, int target, int control, int offset) {
    if (!is_controlled(kind)) {
        throw Error(ErrorCode::kInvalidArgument, "not a controlled gate kind");
    }
    if (target == control) {
        throw Error(ErrorCode::kWiringError, "target and control coincide");
    }
    GateOp op;
    op.kind = kind;
    op.target = target;
    op.control = control;
    op.offset = offset;
    return op;
}

GateOp GateOp::fourier(int wire) {
    GateOp op;
    op.kind = GateKind::kFourier;
    op.target = wire;
    return op;
}

GateOp GateOp::inverse_fourier(int wire) {
    GateOp op;
    op.kind = GateKind::kInverseFourier;
    op.target = wire;
    return op;
}

GateOp GateOp::shift(int wire) {
    GateOp op;
    op.kind = GateKind::kShift;
    op.target = wire;
    return op;
}

GateOp GateOp::tilde_h(int first, int second) {
    if (first == second) {
        throw Error(ErrorCode::kWiringError, "tilde-H needs two distinct wires");
    }
    GateOp op;
    op.kind = GateKind::kTildeH;
    op.target = first;
    op.control = second;
    return op;
}

GateOp GateOp::qubit_h(int wire) {
    GateOp op;
    op.kind = GateKind::kQubitH;
    op.target = wire;
    return op;
}

GateOp GateOp::qubit_s(int wire) {
    GateOp op;
    op.kind = GateKind::kQubitS;
    op.target = wire;
    return op;
}

bool GateOp::is_two_wire() const {
    return is_controlled(kind) || kind == GateKind::kTildeH;
}

std::vector<int> GateOp::wires() const {
    if (is_two_wire()) {
        return {target, control};
    }
    return {target};
}

CMatrix GateOp::local_matrix(const WireLayout &layout) const {
    int d = layout.dim(target);
    switch (kind) {
        case GateKind::kLocalUnitary:
            if (matrix.rows() != d || matrix.cols() != d) {
                throw Error(ErrorCode::kShapeError, "local unitary does not match the wire dimension");
            }
            return matrix;
        case GateKind::kControlledShift:
        case GateKind::kControlledPhase:
        case GateKind::kControlledShiftDagger:
        case GateKind::kControlledPhaseDagger:
            return controlled_gate(kind, target, control, offset, common_dimension(layout, target, control));
        case GateKind::kFourier:
            return fourier_matrix(d).matrix();
        case GateKind::kInverseFourier:
            return fourier_matrix(d).matrix().adjoint();
        case GateKind::kShift:
            return wh_operator(WHIndex{1, 0}, d).matrix();
        case GateKind::kTildeH:
            return tilde_h_operator(common_dimension(layout, target, control));
        case GateKind::kQubitH:
        case GateKind::kQubitS:
            if (d != 2) {
                throw Error(ErrorCode::kBasisUnavailable, "qubit gate on a wire of dimension " + std::to_string(d));
            }
            return kind == GateKind::kQubitH ? qubit_hadamard() : qubit_phase();
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown gate kind");
}

std::string GateOp::name() const {
    auto w = [](int x) { return std::to_string(x); };
    switch (kind) {
        case GateKind::kLocalUnitary:
            return "U[" + w(target) + "]";
        case GateKind::kControlledShift:
            return "X(" + w(offset) + ")[" + w(target) + "," + w(control) + "]";
        case GateKind::kControlledPhase:
            return "Z(" + w(offset) + ")[" + w(target) + "," + w(control) + "]";
        case GateKind::kControlledShiftDagger:
            return "Xdg(" + w(offset) + ")[" + w(target) + "," + w(control) + "]";
        case GateKind::kControlledPhaseDagger:
            return "Zdg(" + w(offset) + ")[" + w(target) + "," + w(control) + "]";
        case GateKind::kFourier:
            return "F[" + w(target) + "]";
        case GateKind::kInverseFourier:
            return "Fdg[" + w(target) + "]";
        case GateKind::kShift:
            return "X[" + w(target) + "]";
        case GateKind::kTildeH:
            return "tildeH[" + w(target) + "," + w(control) + "]";
        case GateKind::kQubitH:
            return "H[" + w(target) + "]";
        case GateKind::kQubitS:
            return "S[" + w(target) + "]";
    }
    return "?";
}

CMatrix controlled_gate(GateKind kind, int target, int control, int offset, int d) {
    if (target == control) {
        throw Error(ErrorCode::kWiringError, "target and control coincide");
    }
    if (!is_controlled(kind)) {
        throw Error(ErrorCode::kInvalidArgument, "not a controlled gate kind");
    }
    if (d < 2) {
        throw Error(ErrorCode::kInvalidDimension, "dimension must be >= 2");
    }
    CMatrix out = CMatrix::Zero(d * d, d * d);
    for (int c = 0; c < d; ++c) {
        int m = ((c + offset) % d + d) % d;
        WHIndex power;
        switch (kind) {
            case GateKind::kControlledShift:
                power = WHIndex::reduced(m, 0, d);
                break;
            case GateKind::kControlledShiftDagger:
                power = WHIndex::reduced(-m, 0, d);
                break;
            case GateKind::kControlledPhase:
                power = WHIndex::reduced(0, m, d);
                break;
            default:
                power = WHIndex::reduced(0, -m, d);
                break;
        }
        CMatrix v = wh_operator(power, d).matrix();
        for (int to = 0; to < d; ++to) {
            for (int ti = 0; ti < d; ++ti) {
                out(to * d + c, ti * d + c) = v(to, ti);
            }
        }
    }
    return out;
}

Circuit &Circuit::append(GateOp op) {
    for (int w : op.wires()) {
        if (w < 0 || w >= layout_.num_wires()) {
            throw Error(ErrorCode::kWiringError, "gate " + op.name() + " addresses a missing wire");
        }
    }
    if (op.is_two_wire() && op.target == op.control) {
        throw Error(ErrorCode::kWiringError, "gate " + op.name() + " uses the same wire twice");
    }
    if (op.kind == GateKind::kLocalUnitary) {
        int d = layout_.dim(op.target);
        if (op.matrix.rows() != d || op.matrix.cols() != d) {
            throw Error(ErrorCode::kShapeError, "local unitary does not match the wire dimension");
        }
    }
    if ((op.kind == GateKind::kQubitH || op.kind == GateKind::kQubitS) && layout_.dim(op.target) != 2) {
        throw Error(ErrorCode::kBasisUnavailable, "qubit gate on a non-qubit wire");
    }
    ops_.push_back(std::move(op));
    return *this;
}

namespace {

Circuit estimation_core(int d, const UnitaryMatrix &u) {
    if (u.dim() != d) {
        throw Error(ErrorCode::kShapeError, "unitary dimension does not match d");
    }
    Circuit c(WireLayout::uniform(3, d));
    c.append(GateOp::fourier(1));
    c.append(GateOp::fourier(2));
    c.append(GateOp::controlled(GateKind::kControlledShift, 0, 2, 0));
    c.append(GateOp::controlled(GateKind::kControlledPhaseDagger, 0, 1, 1));
    c.append(GateOp::local(0, u));
    c.append(GateOp::controlled(GateKind::kControlledPhase, 0, 1, 0));
    c.append(GateOp::controlled(GateKind::kControlledShiftDagger, 0, 2, 1));
    c.append(GateOp::inverse_fourier(1));
    c.append(GateOp::inverse_fourier(2));
    c.append(GateOp::controlled(GateKind::kControlledShiftDagger, 0, 1, -1));
    c.append(GateOp::controlled(GateKind::kControlledPhaseDagger, 0, 2, 0));
    return c;
}

}  // namespace

Circuit build_estimation_circuit(int d, const UnitaryMatrix &u) {
    Circuit c = estimation_core(d, u);
    c.append(GateOp::shift(2));
    return c;
}

Circuit build_qubit_measurement_circuit(const UnitaryMatrix &u, QubitBasis basis) {
    Circuit c = estimation_core(2, u);
    for (int wire : {1, 2}) {
        if (basis == QubitBasis::kY) {
            c.append(GateOp::qubit_s(wire));
        }
        if (basis != QubitBasis::kZ) {
            c.append(GateOp::qubit_h(wire));
        }
    }
    return c;
}

PureState apply_circuit(const Circuit &c, const PureState &s) {
    if (!(c.layout() == s.layout())) {
        throw Error(ErrorCode::kLayoutMismatch, "circuit and state layouts differ");
    }
    CMatrix amps = s.amplitudes();
    for (const GateOp &op : c.ops()) {
        apply_local_operator(amps, c.layout(), op.wires(), op.local_matrix(c.layout()));
    }
    CVector out = amps.col(0);
    out /= out.norm();
    return PureState(c.layout(), std::move(out));
}

DensityState apply_circuit_density(const Circuit &c, const DensityState &rho, const NoiseParams &noise) {
    if (!(c.layout() == rho.layout())) {
        throw Error(ErrorCode::kLayoutMismatch, "circuit and state layouts differ");
    }
    const WireLayout &layout = c.layout();
    CMatrix m = rho.matrix();
    bool noisy = !noise.is_noiseless();
    for (const GateOp &op : c.ops()) {
        std::vector<int> wires = op.wires();
        conjugate_local_operator(m, layout, wires, op.local_matrix(layout));
        if (!noisy) {
            continue;
        }
        double duration = 0.0;
        if (op.is_two_wire()) {
            double p = noise.two_qubit_error(wires[0], wires[1]);
            if (p > 0.0) {
                apply_channel(m, layout, wires, depolarizing_channel(p, {layout.dim(wires[0]), layout.dim(wires[1])}));
            }
            duration = noise.duration_cx_ns;
        } else {
            double p = noise.single_gate_error(wires[0]);
            if (p > 0.0) {
                apply_channel(m, layout, wires, depolarizing_channel(p, layout.dim(wires[0])));
            }
            duration = noise.duration_single_ns;
        }
        if (duration > 0.0) {
            for (int w : wires) {
                if (layout.dim(w) != 2) {
                    continue;
                }
                KrausChannel relax = thermal_relaxation_channel(noise.t1_for_wire(w), noise.t2_for_wire(w), duration);
                if (!relax.is_identity()) {
                    apply_channel(m, layout, {w}, relax);
                }
            }
        }
    }
    CMatrix herm = 0.5 * (m + m.adjoint());
    return DensityState(layout, std::move(herm));
}

EstimationOutput run_estimation(const UnitaryMatrix &u, const CVector &psi) {
    int d = u.dim();
    if (psi.size() != d) {
        throw Error(ErrorCode::kShapeError, "target state dimension does not match the unitary");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw Error(ErrorCode::kNormalizationError, "target state is not normalized");
    }
    CVector zero = CVector::Zero(d);
    zero(0) = 1.0;
    PureState in = PureState::product({psi, zero, zero});
    PureState out = apply_circuit(build_estimation_circuit(d, u), in);

    const CVector &amps = out.amplitudes();
    Eigen::Map<const CMatrix> transposed(amps.data(), d * d, d);
    CMatrix m = transposed.transpose();
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double sigma = svd.singularValues()(0);
    CVector target = svd.matrixU().col(0);
    CVector control = sigma * svd.matrixV().col(0).conjugate();
    Complex overlap = psi.dot(target);
    if (std::abs(overlap) > 0.0) {
        Complex phase = overlap / std::abs(overlap);
        target *= std::conj(phase);
        control *= phase;
    }

    EstimationOutput result{target, PureState::basis(WireLayout::uniform(2, d), 0), 0.0, 0.0};
    result.product_residual = (m - target * control.transpose()).norm();
    result.target_fidelity = std::norm(psi.dot(target));
    control /= control.norm();
    result.control = PureState(WireLayout::uniform(2, d), std::move(control));
    return result;
}

PureState probe_state(const CVector &psi, int d) {
    if (psi.size() != d) {
        throw Error(ErrorCode::kShapeError, "target state dimension does not match d");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw Error(ErrorCode::kNormalizationError, "target state is not normalized");
    }
    WireLayout layout = WireLayout::uniform(3, d);
    CVector amps = CVector::Zero(layout.total());
    for (int j1 = 0; j1 < d; ++j1) {
        for (int j2 = 0; j2 < d; ++j2) {
            CVector v = wh_operator(WHIndex::reduced(0, -j1 - 1, d), d).matrix() *
                        (wh_operator(WHIndex{j2, 0}, d).matrix() * psi);
            for (int t = 0; t < d; ++t) {
                amps(t * d * d + j1 * d + j2) = v(t) / static_cast<double>(d);
            }
        }
    }
    return PureState(layout, std::move(amps));
}

RVector qubit_measurement_probabilities(const UnitaryMatrix &u, QubitBasis basis) {
    if (u.dim() != 2) {
        throw Error(ErrorCode::kBasisUnavailable, "qubit measurement circuits require d = 2");
    }
    Circuit c = build_qubit_measurement_circuit(u, basis);
    PureState out = apply_circuit(c, PureState::basis(c.layout(), 0));
    return marginal_probabilities(out.amplitudes(), c.layout(), {1, 2});
}

}  // namespace qudest
