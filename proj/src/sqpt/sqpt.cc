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

#include "qudest/sqpt/sqpt.h"

#include "qudest/circuit/circuit.h"
#include "qudest/core/error.h"
#include "qudest/core/rng.h"
#include "qudest/core/weyl_heisenberg.h"
#include "qudest/noise/channels.h"

namespace qudest {

namespace {

CMatrix ket_projector(Complex a, Complex b) {
    CVector v(2);
    v << a, b;
    return v * v.adjoint();
}

CVector vec(const CMatrix &a) {
    CVector v(4);
    for (int j = 0; j < 2; ++j) {
        for (int i = 0; i < 2; ++i) {
            v(j * 2 + i) = a(i, j);
        }
    }
    return v;
}

CMatrix bloch_density(const Eigen::Vector3d &r) {
    const auto &p = pauli_matrices();
    return 0.5 * (p[0] + r(0) * p[1] + r(1) * p[2] + r(2) * p[3]);
}

Eigen::Vector3d bloch_of(const CMatrix &rho) {
    const auto &p = pauli_matrices();
    Eigen::Vector3d r;
    for (int k = 0; k < 3; ++k) {
        r(k) = (p[static_cast<size_t>(k + 1)] * rho).trace().real();
    }
    return r;
}

int basis_component(PauliBasis b) {
    switch (b) {
        case PauliBasis::kX:
            return 0;
        case PauliBasis::kY:
            return 1;
        case PauliBasis::kZ:
            return 2;
    }
    return 2;
}

void require_qubit(const UnitaryMatrix &u) {
    if (u.dim() != 2) {
        throw Error(ErrorCode::kShapeError, "process tomography is implemented for qubits only");
    }
}

/// Probabilities of the ±1 outcomes of Pauli `b` on ρ.
RVector pauli_outcomes(const CMatrix &rho, PauliBasis b) {
    double e = bloch_of(rho)(basis_component(b));
    RVector p(2);
    p << std::clamp(0.5 * (1.0 + e), 0.0, 1.0), std::clamp(0.5 * (1.0 - e), 0.0, 1.0);
    return p / p.sum();
}

}  // namespace

std::string input_name(TomographyInput in) {
    switch (in) {
        case TomographyInput::kZero:
            return "0";
        case TomographyInput::kOne:
            return "1";
        case TomographyInput::kPlus:
            return "+";
        case TomographyInput::kPlusI:
            return "+i";
    }
    return "?";
}

std::string pauli_basis_name(PauliBasis b) {
    switch (b) {
        case PauliBasis::kX:
            return "X";
        case PauliBasis::kY:
            return "Y";
        case PauliBasis::kZ:
            return "Z";
    }
    return "?";
}

CMatrix input_density(TomographyInput in) {
    double h = 1.0 / std::sqrt(2.0);
    switch (in) {
        case TomographyInput::kZero:
            return ket_projector(1.0, 0.0);
        case TomographyInput::kOne:
            return ket_projector(0.0, 1.0);
        case TomographyInput::kPlus:
            return ket_projector(h, h);
        case TomographyInput::kPlusI:
            return ket_projector(h, Complex(0.0, h));
    }
    return CMatrix::Zero(2, 2);
}

const std::array<CMatrix, 4> &pauli_matrices() {
    static const std::array<CMatrix, 4> paulis = [] {
        std::array<CMatrix, 4> p;
        p[0] = CMatrix::Identity(2, 2);
        p[1] = CMatrix::Zero(2, 2);
        p[1](0, 1) = 1.0;
        p[1](1, 0) = 1.0;
        p[2] = CMatrix::Zero(2, 2);
        p[2](0, 1) = -kI;
        p[2](1, 0) = kI;
        p[3] = CMatrix::Zero(2, 2);
        p[3](0, 0) = 1.0;
        p[3](1, 1) = -1.0;
        return p;
    }();
    return paulis;
}

CMatrix ProcessMatrix::apply(const CMatrix &rho) const {
    const auto &p = pauli_matrices();
    CMatrix out = CMatrix::Zero(2, 2);
    for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
            out += chi(m, n) * p[static_cast<size_t>(m)] * rho * p[static_cast<size_t>(n)];
        }
    }
    return out;
}

QubitChannel ProcessMatrix::as_channel() const {
    return [copy = *this](const CMatrix &rho) { return copy.apply(rho); };
}

CMatrix unitary_chi(const UnitaryMatrix &u) {
    require_qubit(u);
    const auto &p = pauli_matrices();
    CVector c(4);
    for (int m = 0; m < 4; ++m) {
        c(m) = (p[static_cast<size_t>(m)] * u.matrix()).trace() / 2.0;
    }
    return c * c.adjoint();
}

CMatrix chi_from_choi(const CMatrix &choi) {
    const auto &p = pauli_matrices();
    CMatrix basis(4, 4);
    for (int m = 0; m < 4; ++m) {
        basis.col(m) = vec(p[static_cast<size_t>(m)]);
    }
    return basis.adjoint() * choi * basis / 4.0;
}

CMatrix choi_from_chi(const CMatrix &chi) {
    const auto &p = pauli_matrices();
    CMatrix basis(4, 4);
    for (int m = 0; m < 4; ++m) {
        basis.col(m) = vec(p[static_cast<size_t>(m)]);
    }
    return basis * chi * basis.adjoint();
}

ProcessMatrix sqpt_from_bloch(const std::array<Eigen::Vector3d, 4> &bloch) {
    CMatrix r0 = bloch_density(bloch[0]);
    CMatrix r1 = bloch_density(bloch[1]);
    CMatrix rp = bloch_density(bloch[2]);
    CMatrix ri = bloch_density(bloch[3]);
    CMatrix e10 = rp - kI * ri - Complex(0.5, -0.5) * (r0 + r1);
    CMatrix e01 = rp + kI * ri - Complex(0.5, 0.5) * (r0 + r1);
    // Choi index (j·2 + a, k·2 + b) = E(|j⟩⟨k|)(a, b).
    CMatrix choi(4, 4);
    choi.block(0, 0, 2, 2) = r0;
    choi.block(0, 2, 2, 2) = e01;
    choi.block(2, 0, 2, 2) = e10;
    choi.block(2, 2, 2, 2) = r1;
    choi = 0.5 * (choi + choi.adjoint()).eval();

    ProcessMatrix out;
    out.chi_raw = chi_from_choi(choi);
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(choi);
    RVector w = eig.eigenvalues().cwiseMax(0.0);
    double total = w.sum();
    if (total <= 0.0) {
        throw Error(ErrorCode::kInvalidDistribution, "reconstructed Choi operator has no positive part");
    }
    w *= 2.0 / total;
    CMatrix projected = eig.eigenvectors() * w.cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint();
    out.chi = chi_from_choi(projected);
    return out;
}

ProcessMatrix sqpt_reconstruct(const ChannelSampler &sampler, uint64_t shots_per_setting, uint64_t seed,
                               const CountsToProbabilities &convert) {
    if (shots_per_setting == 0) {
        throw Error(ErrorCode::kInsufficientData, "process tomography needs at least one shot per setting");
    }
    std::array<Eigen::Vector3d, 4> bloch;
    for (size_t i = 0; i < kTomographyInputs.size(); ++i) {
        for (PauliBasis b : kPauliBases) {
            uint64_t s = derive_seed(seed, {static_cast<uint64_t>(i), static_cast<uint64_t>(basis_component(b))});
            MeasurementCounts c = sampler(kTomographyInputs[i], b, shots_per_setting, s);
            if (c.counts.size() != 2 || c.shots == 0) {
                throw Error(ErrorCode::kInvalidDistribution, "sampler must return two-outcome counts");
            }
            RVector p = convert ? convert(c) : c.frequencies();
            bloch[i](basis_component(b)) = p(0) - p(1);
        }
    }
    return sqpt_from_bloch(bloch);
}

ProcessMatrix sqpt_exact(const QubitChannel &channel) {
    std::array<Eigen::Vector3d, 4> bloch;
    for (size_t i = 0; i < kTomographyInputs.size(); ++i) {
        bloch[i] = bloch_of(channel(input_density(kTomographyInputs[i])));
    }
    return sqpt_from_bloch(bloch);
}

QubitChannel unitary_channel(const UnitaryMatrix &u) {
    CMatrix m = u.matrix();
    return [m](const CMatrix &rho) { return CMatrix(m * rho * m.adjoint()); };
}

ChannelSampler exact_channel_sampler(QubitChannel channel) {
    return [channel = std::move(channel)](TomographyInput in, PauliBasis b, uint64_t shots, uint64_t seed) {
        return sample_counts(pauli_outcomes(channel(input_density(in)), b), shots, seed);
    };
}

ChannelSampler noisy_qubit_sampler(const UnitaryMatrix &u, const NoiseParams &noise, int qubit) {
    require_qubit(u);
    NoiseParams placed = noise;
    placed.wire_to_qubit = {qubit};
    WireLayout layout = WireLayout::uniform(1, 2);
    CMatrix sdg = CMatrix::Identity(2, 2);
    sdg(1, 1) = -kI;
    // table[input][basis] holds the recorded (+1, −1) outcome probabilities.
    std::array<std::array<RVector, 3>, 4> table;
    for (size_t i = 0; i < kTomographyInputs.size(); ++i) {
        DensityState rho(layout, input_density(kTomographyInputs[i]));
        for (PauliBasis b : kPauliBases) {
            Circuit c(layout);
            c.append(GateOp::local(0, u));
            if (b == PauliBasis::kY) {
                c.append(GateOp::local(0, UnitaryMatrix::trusted(sdg)));
            }
            if (b != PauliBasis::kZ) {
                c.append(GateOp::qubit_h(0));
            }
            DensityState out = apply_circuit_density(c, rho, placed);
            table[i][static_cast<size_t>(basis_component(b))] = noisy_measurement_probabilities(out, {0}, placed);
        }
    }
    return [table](TomographyInput in, PauliBasis b, uint64_t shots, uint64_t seed) {
        return sample_counts(table[static_cast<size_t>(in)][static_cast<size_t>(basis_component(b))], shots, seed);
    };
}

double average_gate_fidelity(const QubitChannel &channel, const UnitaryMatrix &u) {
    int d = u.dim();
    const CMatrix &m = u.matrix();
    Complex total = 0.0;
    for (int k = 0; k < d * d; ++k) {
        CMatrix mj = wh_operator(WHIndex::from_flat(k, d), d).matrix();
        CMatrix out = channel(mj);
        if (out.rows() != d || out.cols() != d) {
            throw Error(ErrorCode::kShapeError, "channel output dimension does not match the unitary");
        }
        total += (m * mj.adjoint() * m.adjoint() * out).trace();
    }
    double dd = static_cast<double>(d);
    return (total.real() + dd * dd) / (dd * dd * (dd + 1.0));
}

double average_gate_fidelity(const ProcessMatrix &chi, const UnitaryMatrix &u) {
    require_qubit(u);
    return average_gate_fidelity(chi.as_channel(), u);
}

double agf_between_unitaries(const UnitaryMatrix &v, const UnitaryMatrix &u) {
    if (v.dim() != u.dim()) {
        throw Error(ErrorCode::kShapeError, "unitaries have different dimensions");
    }
    double d = static_cast<double>(u.dim());
    double overlap = std::norm((u.matrix().adjoint() * v.matrix()).trace());
    return (overlap / d + 1.0) / (d + 1.0);
}

}  // namespace qudest
