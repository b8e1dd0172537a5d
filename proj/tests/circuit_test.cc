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

#include <gtest/gtest.h>

#include "qudest/circuit/circuit.h"
#include "qudest/circuit/measurement.h"
#include "qudest/core/error.h"
#include "qudest/core/gell_mann.h"
#include "qudest/core/rng.h"
#include "qudest/core/weyl_heisenberg.h"
#include "qudest/noise/channels.h"

namespace qudest {
namespace {

CVector random_state(int d, uint64_t seed) {
    return haar_random_unitary(d, seed).matrix().col(0);
}

CVector basis_vector(int d, int k) {
    CVector v = CVector::Zero(d);
    v(k) = 1.0;
    return v;
}

TEST(ControlledGate, ShiftOnBasisControl) {
    int d = 3;
    CMatrix g = controlled_gate(GateKind::kControlledShift, 0, 2, 0, d);
    for (int k = 0; k < d; ++k) {
        CMatrix block(d, d);
        for (int to = 0; to < d; ++to) {
            for (int ti = 0; ti < d; ++ti) {
                block(to, ti) = g(to * d + k, ti * d + k);
            }
        }
        EXPECT_LT((block - wh_operator({k, 0}, d).matrix()).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(ControlledGate, PhaseDaggerOffsetOne) {
    int d = 4;
    CMatrix g = controlled_gate(GateKind::kControlledPhaseDagger, 0, 1, 1, d);
    for (int k = 0; k < d; ++k) {
        for (int t = 0; t < d; ++t) {
            EXPECT_NEAR(std::abs(g(t * d + k, t * d + k) - root_of_unity(static_cast<long long>(-k - 1) * t, d)), 0.0,
                        1e-14);
        }
    }
}

TEST(ControlledGate, QubitIsCnot) {
    CMatrix g = controlled_gate(GateKind::kControlledShift, 0, 2, 0, 2);
    // Index t*2 + c: control set flips the target.
    CMatrix cnot = CMatrix::Zero(4, 4);
    cnot(0, 0) = 1.0;
    cnot(3, 1) = 1.0;
    cnot(2, 2) = 1.0;
    cnot(1, 3) = 1.0;
    EXPECT_LT((g - cnot).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ControlledGate, EqualWiresRejected) {
    try {
        controlled_gate(GateKind::kControlledShift, 1, 1, 0, 3);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kWiringError);
    }
}

TEST(EstimationCircuit, QubitOracles) {
    EstimationOutput id = run_estimation(UnitaryMatrix::identity(2), basis_vector(2, 0));
    EXPECT_NEAR(std::abs(id.control.amplitudes()(0)), 1.0, 1e-12);

    EstimationOutput x = run_estimation(wh_operator({1, 0}, 2), random_state(2, 1));
    EXPECT_NEAR(std::abs(x.control.amplitudes()(WHIndex{1, 0}.flat(2))), 1.0, 1e-12);

    double a = kPi / 4;
    CMatrix rz = CMatrix::Zero(2, 2);
    rz(0, 0) = std::polar(1.0, -a);
    rz(1, 1) = std::polar(1.0, a);
    EstimationOutput z = run_estimation(UnitaryMatrix(rz), random_state(2, 2));
    const CVector &c = z.control.amplitudes();
    EXPECT_NEAR(std::abs(c(0) - Complex(std::cos(a))), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(c(WHIndex{0, 1}.flat(2)) - (-kI * std::sin(a))), 0.0, 1e-12);
    EXPECT_LT(std::abs(c(WHIndex{1, 0}.flat(2))), 1e-12);
    EXPECT_LT(std::abs(c(WHIndex{1, 1}.flat(2))), 1e-12);
}

TEST(EstimationCircuit, AmplitudesMatchExpansion) {
    for (int d = 2; d <= 5; ++d) {
        for (uint64_t s = 0; s < 10; ++s) {
            UnitaryMatrix u = haar_random_unitary(d, derive_seed(s, {1, static_cast<uint64_t>(d)}));
            CVector psi = random_state(d, derive_seed(s, {2, static_cast<uint64_t>(d)}));
            EstimationOutput out = run_estimation(u, psi);
            CVector expected = wh_expand(u).as_vector();
            EXPECT_LT((out.control.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-10) << "d=" << d;
            EXPECT_GE(out.target_fidelity, 1.0 - 1e-12);
            EXPECT_LT(out.product_residual, 1e-10);
        }
    }
}

TEST(EstimationCircuit, IndependentOfTargetState) {
    UnitaryMatrix u = haar_random_unitary(5, 99);
    EstimationOutput a = run_estimation(u, random_state(5, 1));
    EstimationOutput b = run_estimation(u, random_state(5, 2));
    EXPECT_LT((a.control.amplitudes() - b.control.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(EstimationCircuit, RejectsUnnormalizedTarget) {
    try {
        run_estimation(UnitaryMatrix::identity(2), CVector::Ones(2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kNormalizationError);
    }
}

TEST(ProbeState, MatchesFirstFourGates) {
    for (int d = 2; d <= 4; ++d) {
        CVector psi = random_state(d, 5);
        Circuit full = build_estimation_circuit(d, UnitaryMatrix::identity(d));
        Circuit head(full.layout());
        for (int k = 0; k < 4; ++k) {
            head.append(full.ops()[static_cast<size_t>(k)]);
        }
        CVector zero = basis_vector(d, 0);
        PureState out = apply_circuit(head, PureState::product({psi, zero, zero}));
        EXPECT_LT((out.amplitudes() - probe_state(psi, d).amplitudes()).norm(), 1e-12);
    }
}

TEST(ProbeState, DisplacementExpectations) {
    for (int d : {2, 3}) {
        CVector psi = d == 2 ? basis_vector(2, 0) : random_state(3, 8);
        PureState probe = probe_state(psi, d);
        EXPECT_NEAR(probe.amplitudes().norm(), 1.0, 1e-12);
        for (int k = 0; k < d * d; ++k) {
            CMatrix dn = wh_operator(WHIndex::from_flat(k, d), d).matrix();
            CMatrix amps = probe.amplitudes();
            apply_local_operator(amps, probe.layout(), {0}, dn);
            Complex ev = probe.amplitudes().dot(amps.col(0));
            EXPECT_NEAR(std::abs(ev - Complex(k == 0 ? 1.0 : 0.0)), 0.0, 1e-12);
        }
    }
}

TEST(ApplyCircuit, EmptyAndInverse) {
    WireLayout layout = WireLayout::uniform(3, 3);
    PureState s(layout, haar_random_unitary(27, 4).matrix().col(0));
    Circuit empty(layout);
    EXPECT_LT((apply_circuit(empty, s).amplitudes() - s.amplitudes()).norm(), 1e-15);
    Circuit ff(layout);
    ff.append(GateOp::fourier(1)).append(GateOp::inverse_fourier(1));
    EXPECT_LT((apply_circuit(ff, s).amplitudes() - s.amplitudes()).norm(), 1e-12);
    PureState other(WireLayout::uniform(3, 2), CVector::Unit(8, 0));
    EXPECT_THROW(apply_circuit(ff, other), Error);
}

TEST(ApplyCircuit, RejectsBadWiring) {
    Circuit c(WireLayout::uniform(3, 2));
    EXPECT_THROW(c.append(GateOp::fourier(5)), Error);
    EXPECT_THROW(GateOp::controlled(GateKind::kControlledShift, 1, 1, 0), Error);
    Circuit q(WireLayout::uniform(3, 3));
    EXPECT_THROW(q.append(GateOp::qubit_h(0)), Error);
}

TEST(DensityBackend, NoiselessMatchesPure) {
    for (int d : {2, 3}) {
        UnitaryMatrix u = haar_random_unitary(d, 17);
        Circuit c = build_estimation_circuit(d, u);
        CVector zero = basis_vector(d, 0);
        PureState in = PureState::product({random_state(d, 3), zero, zero});
        PureState out = apply_circuit(c, in);
        DensityState rho = apply_circuit_density(c, DensityState::from_pure(in), noise_scenario("noiseless"));
        CMatrix expected = out.amplitudes() * out.amplitudes().adjoint();
        EXPECT_LT((rho.matrix() - expected).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(DensityBackend, FullDepolarizationMixesControls) {
    NoiseParams noise;
    noise.name = "depolarize";
    noise.p_sx.assign(3, 1.0);
    noise.p_cx = {{{0, 1}, 1.0}, {{0, 2}, 1.0}, {{1, 2}, 1.0}};
    Circuit c = build_estimation_circuit(2, haar_random_unitary(2, 1));
    DensityState rho = apply_circuit_density(c, DensityState::from_pure(PureState::basis(c.layout(), 0)), noise);
    CMatrix controls = rho.reduced({1, 2});
    EXPECT_LT((controls - CMatrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(DensityBackend, DeviceNoiseKeepsValidState) {
    Circuit c = build_estimation_circuit(2, haar_random_unitary(2, 2));
    DensityState rho = apply_circuit_density(c, DensityState::from_pure(PureState::basis(c.layout(), 0)),
                                             noise_scenario("full"));
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-10);
    EXPECT_GE(rho.min_eigenvalue(), -1e-8);
    EXPECT_LT(rho.purity(), 1.0);
}

TEST(Born, ComputationalGivesSquaredAmplitudes) {
    UnitaryMatrix u = haar_random_unitary(3, 21);
    EstimationOutput out = run_estimation(u, basis_vector(3, 0));
    RVector p = born_probabilities(out.control, MeasurementBasis::kComputational);
    WHCoefficients c = wh_expand(u);
    for (int k = 0; k < 9; ++k) {
        EXPECT_NEAR(p(k), std::norm(c.values()[k]), 1e-10);
    }
    EXPECT_NEAR(p.sum(), 1.0, 1e-10);
}

TEST(Born, TildeHIdentity) {
    EstimationOutput out = run_estimation(UnitaryMatrix::identity(3), basis_vector(3, 0));
    RVector p = born_probabilities(out.control, MeasurementBasis::kTildeH);
    EXPECT_NEAR(p(0), 1.0, 1e-12);
}

TEST(Born, GellMannFirstOrder) {
    std::vector<double> lambda(8, 0.0);
    lambda[2] = 0.002;
    lambda[6] = 0.001;
    HamiltonianParams params(3, lambda);
    EstimationOutput out = run_estimation(exp_hamiltonian(params), basis_vector(3, 0));
    RVector p = born_probabilities(out.control, MeasurementBasis::kGellMann);
    for (int j = 1; j <= 8; ++j) {
        double expected = 2.0 * lambda[static_cast<size_t>(j - 1)] * lambda[static_cast<size_t>(j - 1)] / 3.0;
        EXPECT_NEAR(p(j), expected, 1e-8);
    }
}

TEST(Born, QubitBasesNeedQubits) {
    EstimationOutput out = run_estimation(UnitaryMatrix::identity(3), basis_vector(3, 0));
    try {
        born_probabilities(out.control, MeasurementBasis::kQubitX);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kBasisUnavailable);
    }
}

TEST(QubitCircuits, ZOutcomeMap) {
    // U = cI I − i cx X − i cy Y − i cz Z.
    double ci = 0.5, cx = 0.5, cy = -0.5, cz = 0.5;
    CMatrix u = ci * CMatrix::Identity(2, 2) - kI * cx * GellMannBasis(2).matrix(1) -
                kI * cy * GellMannBasis(2).matrix(2) - kI * cz * GellMannBasis(2).matrix(3);
    RVector pz = qubit_measurement_probabilities(UnitaryMatrix(u), QubitBasis::kZ);
    EXPECT_NEAR(pz(0), cz * cz, 1e-12);
    EXPECT_NEAR(pz(1), ci * ci, 1e-12);
    EXPECT_NEAR(pz(2), cy * cy, 1e-12);
    EXPECT_NEAR(pz(3), cx * cx, 1e-12);
    RVector px = qubit_measurement_probabilities(UnitaryMatrix(u), QubitBasis::kX);
    EXPECT_NEAR(px(0), ((ci + cy) * (ci + cy) + (cx + cz) * (cx + cz)) / 4, 1e-12);
    RVector py = qubit_measurement_probabilities(UnitaryMatrix(u), QubitBasis::kY);
    EXPECT_NEAR(py(0), (ci + cy + cx - cz) * (ci + cy + cx - cz) / 4, 1e-12);
    EXPECT_NEAR(py(2), (ci - cy - cx - cz) * (ci - cy - cx - cz) / 4, 1e-12);
}

TEST(Sampling, DegenerateAndDeterministic) {
    RVector p = RVector::Zero(4);
    p(2) = 1.0;
    MeasurementCounts c = sample_counts(p, 1000, 3);
    EXPECT_EQ(c.counts[2], 1000u);
    RVector uniform = RVector::Constant(4, 0.25);
    EXPECT_EQ(sample_counts(uniform, 500, 7).counts, sample_counts(uniform, 500, 7).counts);
}

TEST(Sampling, BinomialBound) {
    RVector uniform = RVector::Constant(4, 0.25);
    const uint64_t n = 1000000;
    MeasurementCounts c = sample_counts(uniform, n, 12345);
    double sigma = std::sqrt(n * 0.25 * 0.75);
    uint64_t total = 0;
    for (uint64_t k : c.counts) {
        EXPECT_LT(std::abs(static_cast<double>(k) - 250000.0), 5 * sigma);
        total += k;
    }
    EXPECT_EQ(total, n);
}

TEST(Sampling, InvalidDistribution) {
    RVector bad(2);
    bad << 0.7, 0.7;
    try {
        sample_counts(bad, 10, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kInvalidDistribution);
    }
}

TEST(TildeH, StructureAndUnitarity) {
    EXPECT_LT((tilde_h_operator(2) - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-15);
    for (int d = 2; d <= 6; ++d) {
        EXPECT_LT(unitarity_deviation(tilde_h_operator(d)), 1e-12);
    }
    CMatrix h3 = tilde_h_operator(3);
    int fixed = 0;
    for (int k = 0; k < 9; ++k) {
        if (std::abs(h3(k, k) - Complex(1.0)) < 1e-15) {
            ++fixed;
        }
    }
    EXPECT_EQ(fixed, 1);
}

}  // namespace
}  // namespace qudest
