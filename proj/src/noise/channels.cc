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

#include "qudest/noise/channels.h"

#include <algorithm>
#include <functional>

#include "qudest/core/error.h"
#include "qudest/core/weyl_heisenberg.h"

namespace qudest {

namespace {

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

RMatrix kron(const RMatrix &a, const RMatrix &b) {
    RMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

void check_stochastic(const RMatrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw Error(ErrorCode::kNonStochastic, "confusion matrix must be square");
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (m.row(r).minCoeff() < 0.0 || std::abs(m.row(r).sum() - 1.0) > 1e-10) {
            throw Error(ErrorCode::kNonStochastic, "confusion matrix rows must be probability vectors");
        }
    }
}

// Column-stochastic map from true to recorded outcome probabilities.
RMatrix joint_transfer(const std::vector<RMatrix> &confusions) {
    RMatrix joint = RMatrix::Ones(1, 1);
    for (const RMatrix &a : confusions) {
        check_stochastic(a);
        joint = kron(joint, RMatrix(a.transpose()));
    }
    return joint;
}

}  // namespace

double KrausChannel::completeness_error() const {
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (const CMatrix &k : ops) {
        sum += k.adjoint() * k;
    }
    return (sum - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

CMatrix KrausChannel::apply(const CMatrix &rho) const {
    CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
    for (const CMatrix &k : ops) {
        out += k * rho * k.adjoint();
    }
    return out;
}

KrausChannel depolarizing_channel(double p, const std::vector<int> &dims) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::kInvalidParameters, "depolarizing probability must lie in [0, 1]");
    }
    std::vector<CMatrix> basis = {CMatrix::Ones(1, 1)};
    for (int d : dims) {
        std::vector<CMatrix> next;
        for (const CMatrix &b : basis) {
            for (int k = 0; k < d * d; ++k) {
                next.push_back(kron(b, wh_operator(WHIndex::from_flat(k, d), d).matrix()));
            }
        }
        basis = std::move(next);
    }
    auto total = static_cast<double>(basis.size());
    KrausChannel ch;
    ch.dim = static_cast<int>(basis[0].rows());
    if (p == 0.0) {
        ch.ops.push_back(CMatrix::Identity(ch.dim, ch.dim));
        return ch;
    }
    ch.ops.push_back(std::sqrt(1.0 - p + p / total) * basis[0]);
    double weight = std::sqrt(p / total);
    for (size_t k = 1; k < basis.size(); ++k) {
        ch.ops.push_back(weight * basis[k]);
    }
    return ch;
}

KrausChannel thermal_relaxation_channel(double t1, double t2, double t) {
    if (t < 0.0) {
        throw Error(ErrorCode::kInvalidParameters, "duration must be non-negative");
    }
    KrausChannel ch;
    ch.dim = 2;
    if (t1 <= 0.0 || t == 0.0) {
        ch.ops.push_back(CMatrix::Identity(2, 2));
        return ch;
    }
    if (t2 <= 0.0 || t2 > 2.0 * t1) {
        throw Error(ErrorCode::kInvalidParameters, "thermal relaxation requires 0 < T2 <= 2*T1");
    }
    double gamma = 1.0 - std::exp(-t / t1);
    double lambda = std::clamp(1.0 - std::exp(-2.0 * t / t2 + t / t1), 0.0, 1.0);

    CMatrix a0 = CMatrix::Zero(2, 2);
    a0(0, 0) = 1.0;
    a0(1, 1) = std::sqrt(1.0 - gamma);
    CMatrix a1 = CMatrix::Zero(2, 2);
    a1(0, 1) = std::sqrt(gamma);
    CMatrix p0 = CMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p0(1, 1) = std::sqrt(1.0 - lambda);
    CMatrix p1 = CMatrix::Zero(2, 2);
    p1(1, 1) = std::sqrt(lambda);

    for (const CMatrix &p : {p0, p1}) {
        for (const CMatrix &a : {a0, a1}) {
            CMatrix k = p * a;
            if (k.cwiseAbs().maxCoeff() > 0.0) {
                ch.ops.push_back(std::move(k));
            }
        }
    }
    return ch;
}

void apply_channel(CMatrix &rho, const WireLayout &layout, const std::vector<int> &wires, const KrausChannel &channel) {
    if (channel.ops.size() == 1) {
        conjugate_local_operator(rho, layout, wires, channel.ops[0]);
        return;
    }
    CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
    for (const CMatrix &k : channel.ops) {
        CMatrix term = rho;
        conjugate_local_operator(term, layout, wires, k);
        out += term;
    }
    rho = std::move(out);
}

RMatrix symmetric_confusion(double e) {
    if (!(e >= 0.0 && e <= 1.0)) {
        throw Error(ErrorCode::kInvalidParameters, "readout error must lie in [0, 1]");
    }
    RMatrix m(2, 2);
    m << 1.0 - e, e, e, 1.0 - e;
    return m;
}

RVector apply_readout_confusion(const RVector &p, const std::vector<RMatrix> &confusions) {
    RMatrix joint = joint_transfer(confusions);
    if (joint.rows() != p.size()) {
        throw Error(ErrorCode::kShapeError, "confusion matrices do not match the outcome count");
    }
    return joint * p;
}

RVector project_to_simplex(const RVector &v) {
    std::vector<double> u(v.data(), v.data() + v.size());
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumulative = 0.0;
    double tau = 0.0;
    for (size_t k = 0; k < u.size(); ++k) {
        cumulative += u[k];
        double t = (cumulative - 1.0) / static_cast<double>(k + 1);
        if (u[k] - t > 0.0) {
            tau = t;
        }
    }
    return (v.array() - tau).cwiseMax(0.0).matrix();
}

RVector mitigate_probabilities(const RVector &frequencies, const std::vector<RMatrix> &confusions) {
    RMatrix joint = joint_transfer(confusions);
    if (joint.rows() != frequencies.size()) {
        throw Error(ErrorCode::kShapeError, "confusion matrices do not match the outcome count");
    }
    Eigen::FullPivLU<RMatrix> lu(joint);
    if (!lu.isInvertible() || std::abs(lu.determinant()) < 1e-12) {
        throw Error(ErrorCode::kMitigationUnavailable, "confusion matrix is singular");
    }
    return project_to_simplex(lu.solve(frequencies));
}

RVector mitigate_readout(const MeasurementCounts &counts, const std::vector<RMatrix> &confusions) {
    return mitigate_probabilities(counts.frequencies(), confusions);
}

std::vector<RMatrix> readout_confusions(const NoiseParams &noise, const std::vector<int> &wires) {
    std::vector<RMatrix> out;
    for (int w : wires) {
        out.push_back(noise.confusion_for_wire(w));
    }
    return out;
}

RVector noisy_measurement_probabilities(const DensityState &rho, const std::vector<int> &wires,
                                        const NoiseParams &noise) {
    const WireLayout &layout = rho.layout();
    CMatrix m = rho.matrix();
    bool qubits = true;
    for (int w : wires) {
        qubits = qubits && layout.dim(w) == 2;
    }
    if (qubits && noise.duration_measure_ns > 0.0) {
        for (int w : wires) {
            KrausChannel relax =
                thermal_relaxation_channel(noise.t1_for_wire(w), noise.t2_for_wire(w), noise.duration_measure_ns);
            if (!relax.is_identity()) {
                apply_channel(m, layout, {w}, relax);
            }
        }
    }
    RVector p = validated_distribution(marginal_probabilities(m, layout, wires));
    if (qubits && noise.has_readout_error()) {
        p = apply_readout_confusion(p, readout_confusions(noise, wires));
    }
    return p;
}

namespace {

NoiseParams device_preset() {
    NoiseParams n;
    n.t1 = {87.49953e3, 86.63249e3, 83.6549e3};
    n.t2 = {121.65781e3, 97.53323e3, 72.867e3};
    n.p_sx = {0.00045, 0.0004, 0.00027};
    n.readout = {symmetric_confusion(0.0406), symmetric_confusion(0.0444), symmetric_confusion(0.0841)};
    n.p_cx = {{{0, 1}, 0.01021}, {{1, 2}, 0.00861}};
    return n;
}

NoiseParams uniform_preset(double p_cx) {
    NoiseParams n;
    n.t1.assign(3, 110e3);
    n.t2.assign(3, 147e3);
    n.p_sx.assign(3, 0.00045);
    n.readout.assign(3, symmetric_confusion(0.0841));
    n.p_cx = {{{0, 1}, p_cx}, {{0, 2}, p_cx}, {{1, 2}, p_cx}};
    return n;
}

}  // namespace

NoiseParams noise_scenario(const std::string &name) {
    NoiseParams n;
    if (name == "noiseless") {
        n.readout.assign(3, RMatrix::Identity(2, 2));
        n.p_sx.assign(3, 0.0);
    } else if (name == "full") {
        n = device_preset();
    } else if (name == "cnot-only") {
        n = uniform_preset(0.0142);
        n.p_sx.assign(3, 0.0);
        n.readout.assign(3, RMatrix::Identity(2, 2));
        n.duration_single_ns = 0.0;
        n.duration_cx_ns = 0.0;
        n.duration_measure_ns = 0.0;
    } else if (name == "full-ideal-cnot") {
        n = uniform_preset(0.0);
    } else {
        throw Error(ErrorCode::kUnknownScenario, "unknown noise scenario '" + name + "'");
    }
    n.name = name;
    n.validate();
    return n;
}

std::vector<std::string> noise_scenario_names() {
    return {"noiseless", "full", "cnot-only", "full-ideal-cnot"};
}

}  // namespace qudest
